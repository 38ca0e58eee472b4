#include "isoring/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace isoring {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
    Monomial r(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] = b[i] - a[i];
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

long mono_degree(const Monomial& a, const std::vector<long>& weights) {
    long d = 0;
    for (size_t i = 0; i < a.size(); ++i) d += weights.empty() ? a[i] : weights[i] * a[i];
    return d;
}

MonomialOrder MonomialOrder::make_grevlex(int nvars) {
    MonomialOrder o;
    o.kind = Kind::grevlex;
    o.weights.assign(nvars, 1);
    return o;
}

MonomialOrder MonomialOrder::make_lex(int nvars) {
    MonomialOrder o;
    o.kind = Kind::lex;
    o.weights.assign(nvars, 1);
    return o;
}

MonomialOrder MonomialOrder::make_elim(int nvars, int block) {
    MonomialOrder o;
    o.kind = Kind::elim;
    o.weights.assign(nvars, 1);
    o.block = block;
    return o;
}

MonomialOrder MonomialOrder::make_weighted_grevlex(std::vector<long> weights) {
    MonomialOrder o;
    o.kind = Kind::grevlex;
    o.weights = std::move(weights);
    return o;
}

namespace {

// grevlex on index range [lo, hi): higher degree wins; ties broken by the
// *last* nonzero coordinate of a-b being negative.
int grevlex_cmp(const Monomial& a, const Monomial& b, const std::vector<long>& w, size_t lo,
                size_t hi) {
    long da = 0, db = 0;
    for (size_t i = lo; i < hi; ++i) {
        da += w[i] * a[i];
        db += w[i] * b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

int lex_cmp(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
}

}  // namespace

bool MonomialOrder::greater(const Monomial& a, const Monomial& b) const {
    switch (kind) {
        case Kind::lex:
            return lex_cmp(a, b) > 0;
        case Kind::grevlex:
            return grevlex_cmp(a, b, weights, 0, a.size()) > 0;
        case Kind::elim: {
            int c = grevlex_cmp(a, b, weights, 0, block);
            if (c != 0) return c > 0;
            return grevlex_cmp(a, b, weights, block, a.size()) > 0;
        }
    }
    return false;
}

ExactPoly ExactPoly::constant(int n, const Rat& c) {
    ExactPoly p(n);
    if (c != 0) p.terms[Monomial(n, 0)] = c;
    return p;
}

ExactPoly ExactPoly::variable(int n, int i, int power) {
    ExactPoly p(n);
    Monomial m(n, 0);
    m[i] = power;
    p.terms[m] = 1;
    return p;
}

ExactPoly ExactPoly::monomial(Monomial m, const Rat& c) {
    ExactPoly p(static_cast<int>(m.size()));
    if (c != 0) p.terms[std::move(m)] = c;
    return p;
}

bool ExactPoly::is_constant() const {
    if (terms.empty()) return true;
    return terms.size() == 1 && terms.begin()->first == Monomial(nvars, 0);
}

Rat ExactPoly::constant_value() const {
    if (terms.empty()) return Rat(0);
    return terms.begin()->second;
}

void ExactPoly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

ExactPoly ExactPoly::operator+(const ExactPoly& o) const {
    ExactPoly r = *this;
    for (const auto& [m, c] : o.terms) r.add_term(m, c);
    return r;
}

ExactPoly ExactPoly::operator-(const ExactPoly& o) const {
    ExactPoly r = *this;
    for (const auto& [m, c] : o.terms) r.add_term(m, -c);
    return r;
}

ExactPoly ExactPoly::operator-() const {
    ExactPoly r(nvars);
    for (const auto& [m, c] : terms) r.terms[m] = -c;
    return r;
}

ExactPoly ExactPoly::scaled(const Rat& c) const {
    ExactPoly r(nvars);
    if (c == 0) return r;
    for (const auto& [m, k] : terms) r.terms[m] = k * c;
    return r;
}

ExactPoly ExactPoly::operator*(const ExactPoly& o) const {
    ExactPoly r(nvars);
    for (const auto& [ma, ca] : terms)
        for (const auto& [mb, cb] : o.terms) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

ExactPoly ExactPoly::pow(int k) const {
    if (k < 0) throw input_error("negative power of a polynomial");
    ExactPoly r = constant(nvars, 1);
    ExactPoly base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

const Monomial& ExactPoly::leading_monomial(const MonomialOrder& ord) const {
    if (terms.empty()) throw input_error("leading monomial of zero polynomial");
    const Monomial* best = &terms.begin()->first;
    for (const auto& [m, c] : terms)
        if (ord.greater(m, *best)) best = &m;
    return *best;
}

Rat ExactPoly::leading_coeff(const MonomialOrder& ord) const {
    return terms.at(leading_monomial(ord));
}

ExactPoly ExactPoly::make_monic(const MonomialOrder& ord) const {
    if (is_zero()) return *this;
    Rat lc = leading_coeff(ord);
    return scaled(Rat(1) / lc);
}

ExactPoly ExactPoly::substitute(const std::vector<ExactPoly>& images) const {
    if (static_cast<int>(images.size()) != nvars)
        throw input_error("substitute: wrong number of images");
    int target_n = images.empty() ? 0 : images[0].nvars;
    ExactPoly r(target_n);
    for (const auto& [m, c] : terms) {
        ExactPoly t = ExactPoly::constant(target_n, c);
        for (int i = 0; i < nvars; ++i) {
            if (m[i] == 0) continue;
            if (m[i] < 0) {
                // Negative powers only make sense when the image is +/- a single monomial.
                if (images[i].terms.size() != 1)
                    throw input_error("substitute: negative exponent with non-monomial image");
                const auto& [im, ic] = *images[i].terms.begin();
                Monomial inv(im.size());
                for (size_t j = 0; j < im.size(); ++j) inv[j] = -im[j];
                if (ic != 1 && ic != -1)
                    throw input_error("substitute: negative exponent with non-unit coefficient");
                ExactPoly invp = ExactPoly::monomial(inv, ic);
                t = t * invp.pow(-m[i]);
            } else {
                t = t * images[i].pow(m[i]);
            }
        }
        r = r + t;
    }
    return r;
}

ExactPoly ExactPoly::apply_lattice_map(const std::vector<std::vector<Int>>& mat) const {
    int rows = static_cast<int>(mat.size());
    ExactPoly r(rows);
    for (const auto& [m, c] : terms) {
        Monomial im(rows, 0);
        for (int i = 0; i < rows; ++i) {
            if (static_cast<int>(mat[i].size()) != nvars)
                throw input_error("apply_lattice_map: shape mismatch");
            Int acc = 0;
            for (int j = 0; j < nvars; ++j) acc += mat[i][j] * m[j];
            if (!acc.fits_sint_p()) throw input_error("apply_lattice_map: exponent overflow");
            im[i] = static_cast<int>(acc.get_si());
        }
        r.add_term(im, c);
    }
    return r;
}

Rat ExactPoly::evaluate(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != nvars) throw input_error("evaluate: wrong point size");
    Rat total = 0;
    for (const auto& [m, c] : terms) {
        Rat t = c;
        for (int i = 0; i < nvars; ++i) {
            if (m[i] == 0) continue;
            if (point[i] == 0 && m[i] < 0) throw input_error("evaluate: division by zero");
            Rat p = point[i];
            int e = m[i] > 0 ? m[i] : -m[i];
            Rat acc = 1;
            for (int k = 0; k < e; ++k) acc *= p;
            if (m[i] < 0) acc = Rat(1) / acc;
            t *= acc;
        }
        total += t;
    }
    return total;
}

long ExactPoly::total_degree() const {
    long d = -1;
    for (const auto& [m, c] : terms) {
        long s = 0;
        for (int e : m) s += e;
        d = std::max(d, s);
    }
    return d;
}

long ExactPoly::weighted_degree(const std::vector<long>& weights) const {
    long d = -1;
    for (const auto& [m, c] : terms) d = std::max(d, mono_degree(m, weights));
    return d;
}

bool ExactPoly::is_homogeneous(const std::vector<long>& weights) const {
    if (terms.empty()) return true;
    long d = mono_degree(terms.begin()->first, weights);
    for (const auto& [m, c] : terms)
        if (mono_degree(m, weights) != d) return false;
    return true;
}

bool ExactPoly::has_negative_exponent() const {
    for (const auto& [m, c] : terms)
        for (int e : m)
            if (e < 0) return true;
    return false;
}

bool ExactPoly::integral_coefficients() const {
    for (const auto& [m, c] : terms)
        if (c.get_den() != 1) return false;
    return true;
}

Rat ExactPoly::augmentation() const {
    Rat s = 0;
    for (const auto& [m, c] : terms) s += c;
    return s;
}

void validate_var_names(const std::vector<std::string>& names) {
    for (const auto& n : names) {
        if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_'))
            throw input_error("bad variable name: '" + n + "'");
        for (char ch : n)
            if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '\''))
                throw input_error("bad variable name: '" + n + "'");
        if (std::count(names.begin(), names.end(), n) != 1)
            throw input_error("duplicate variable name: '" + n + "'");
    }
}

std::string poly_to_string(const ExactPoly& p, const std::vector<std::string>& names) {
    if (static_cast<int>(names.size()) != p.nvars)
        throw input_error("poly_to_string: name count mismatch");
    if (p.is_zero()) return "0";
    // Deterministic display order: grevlex descending, so constants print last.
    std::vector<const Monomial*> ms;
    for (const auto& [m, c] : p.terms) ms.push_back(&m);
    MonomialOrder ord = MonomialOrder::make_grevlex(p.nvars);
    std::sort(ms.begin(), ms.end(), [&](const Monomial* a, const Monomial* b) {
        if (*a == *b) return false;
        return ord.greater(*a, *b);
    });
    std::ostringstream out;
    bool first = true;
    for (const Monomial* m : ms) {
        Rat c = p.terms.at(*m);
        bool neg = c < 0;
        Rat a = neg ? Rat(-c) : c;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        bool any_var = false;
        std::ostringstream vars;
        for (int i = 0; i < p.nvars; ++i) {
            if ((*m)[i] == 0) continue;
            if (any_var) vars << "*";
            any_var = true;
            vars << names[i];
            if ((*m)[i] != 1) vars << "^" << (*m)[i];
        }
        if (!any_var) {
            out << a.get_str();
        } else if (a == 1) {
            out << vars.str();
        } else {
            out << a.get_str() << "*" << vars.str();
        }
    }
    return out.str();
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    const std::vector<std::string>& names;
    int nvars;

    explicit Parser(const std::string& text, const std::vector<std::string>& nm)
        : s(text), names(nm), nvars(static_cast<int>(nm.size())) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::optional<Int> parse_int() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) {
            pos = start;
            return std::nullopt;
        }
        return Int(s.substr(start, pos - start));
    }

    std::optional<int> parse_name() {
        skip_ws();
        if (pos >= s.size()) return std::nullopt;
        if (!(std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            return std::nullopt;
        size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                                  s[pos] == '_' || s[pos] == '\''))
            ++pos;
        std::string name = s.substr(start, pos - start);
        for (int i = 0; i < nvars; ++i)
            if (names[i] == name) return i;
        throw input_error("unknown variable '" + name + "'");
    }

    // factor := integer[/integer] | name[^int]
    // term   := factor (* factor)*
    // poly   := [+-] term ([+-] term)*
    ExactPoly parse_poly() {
        ExactPoly total(nvars);
        bool expect_term = true;
        int sign = 1;
        skip_ws();
        if (eat('-')) sign = -1;
        else eat('+');
        while (expect_term) {
            total = total + parse_term().scaled(Rat(sign));
            skip_ws();
            if (eat('+')) {
                sign = 1;
            } else if (eat('-')) {
                sign = -1;
            } else {
                expect_term = false;
            }
        }
        skip_ws();
        if (pos != s.size()) throw input_error("trailing characters in polynomial text");
        return total;
    }

    ExactPoly parse_term() {
        ExactPoly t = ExactPoly::constant(nvars, 1);
        bool first = true;
        while (true) {
            skip_ws();
            if (auto iv = parse_int()) {
                Rat c(*iv);
                skip_ws();
                if (pos < s.size() && s[pos] == '/') {
                    ++pos;
                    auto den = parse_int();
                    if (!den || *den == 0) throw input_error("bad rational coefficient");
                    c /= Rat(*den);
                }
                t = t.scaled(c);
            } else if (auto vi = parse_name()) {
                int e = 1;
                skip_ws();
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    auto ev = parse_int();
                    if (!ev || !ev->fits_sint_p()) throw input_error("bad exponent");
                    e = static_cast<int>(ev->get_si());
                }
                Monomial m(nvars, 0);
                m[*vi] = e;
                t = t * ExactPoly::monomial(m, Rat(1));
            } else if (first) {
                throw input_error("expected term");
            } else {
                throw input_error("expected factor after '*'");
            }
            first = false;
            skip_ws();
            if (!eat('*')) break;
        }
        return t;
    }
};

}  // namespace

ExactPoly poly_from_string(const std::string& text, const std::vector<std::string>& names) {
    validate_var_names(names);
    Parser p(text, names);
    p.skip_ws();
    if (p.pos == text.size()) throw input_error("empty polynomial text");
    // allow a bare "0"
    ExactPoly r = p.parse_poly();
    return r;
}

}  // namespace isoring
