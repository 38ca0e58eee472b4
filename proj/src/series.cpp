#include "isoring/series.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace isoring {

UniPoly UniPoly::constant(const Rat& v) {
    UniPoly p;
    if (v != 0) p.c = {v};
    return p;
}

UniPoly UniPoly::one_minus_power(int d) {
    UniPoly p;
    p.c.assign(d + 1, Rat(0));
    p.c[0] = 1;
    p.c[d] = -1;
    return p;
}

UniPoly UniPoly::one_plus_power(int d) {
    UniPoly p;
    p.c.assign(d + 1, Rat(0));
    p.c[0] = 1;
    p.c[d] = 1;
    return p;
}

void UniPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    UniPoly r;
    r.c.resize(std::max(c.size(), o.c.size()), Rat(0));
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    r.trim();
    return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    UniPoly r;
    r.c.resize(std::max(c.size(), o.c.size()), Rat(0));
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r.c[i] -= o.c[i];
    r.trim();
    return r;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    UniPoly r;
    if (is_zero() || o.is_zero()) return r;
    r.c.assign(c.size() + o.c.size() - 1, Rat(0));
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    }
    r.trim();
    return r;
}

bool UniPoly::divide_exact(const UniPoly& divisor, UniPoly& quotient) const {
    if (divisor.is_zero()) throw input_error("division by zero polynomial");
    UniPoly rem = *this;
    quotient = UniPoly();
    if (rem.is_zero()) return true;
    if (rem.degree() < divisor.degree()) return false;
    quotient.c.assign(rem.degree() - divisor.degree() + 1, Rat(0));
    Rat lead = divisor.c.back();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        int shift = rem.degree() - divisor.degree();
        Rat q = rem.c.back() / lead;
        quotient.c[shift] = q;
        for (size_t i = 0; i < divisor.c.size(); ++i) rem.c[shift + i] -= q * divisor.c[i];
        rem.trim();
    }
    quotient.trim();
    return rem.is_zero();
}

Rat UniPoly::evaluate(const Rat& x) const {
    Rat v = 0;
    for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
    return v;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        Rat a = c[i];
        bool neg = a < 0;
        if (neg) a = -a;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        if (i == 0) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

PoincareSeries PoincareSeries::one() { return PoincareSeries{}; }

PoincareSeries PoincareSeries::free_ring(const std::vector<int>& degrees) {
    PoincareSeries s;
    s.den = degrees;
    for (int d : s.den)
        if (d <= 0) throw input_error("free_ring: degrees must be positive");
    std::sort(s.den.begin(), s.den.end());
    return s;
}

PoincareSeries PoincareSeries::polynomial(UniPoly p) {
    PoincareSeries s;
    s.num = std::move(p);
    return s;
}

PoincareSeries PoincareSeries::operator*(const PoincareSeries& o) const {
    PoincareSeries r;
    r.num = num * o.num;
    r.den = den;
    r.den.insert(r.den.end(), o.den.begin(), o.den.end());
    std::sort(r.den.begin(), r.den.end());
    return r;
}

namespace {

UniPoly den_product(const std::vector<int>& den) {
    UniPoly p = UniPoly::constant(1);
    for (int d : den) p = p * UniPoly::one_minus_power(d);
    return p;
}

}  // namespace

PoincareSeries PoincareSeries::operator+(const PoincareSeries& o) const {
    // Common denominator: union of multisets is enough (lcm-ish, keeps factors small).
    std::map<int, int> mine, theirs;
    for (int d : den) mine[d]++;
    for (int d : o.den) theirs[d]++;
    std::vector<int> common;
    for (auto& [d, k] : mine) {
        int m = std::max(k, theirs.count(d) ? theirs[d] : 0);
        for (int i = 0; i < m; ++i) common.push_back(d);
    }
    for (auto& [d, k] : theirs)
        if (!mine.count(d))
            for (int i = 0; i < k; ++i) common.push_back(d);
    std::sort(common.begin(), common.end());

    auto lift = [&](const PoincareSeries& s) {
        std::map<int, int> have;
        for (int d : s.den) have[d]++;
        UniPoly extra = UniPoly::constant(1);
        std::map<int, int> want;
        for (int d : common) want[d]++;
        for (auto& [d, k] : want) {
            int h = have.count(d) ? have[d] : 0;
            for (int i = h; i < k; ++i) extra = extra * UniPoly::one_minus_power(d);
        }
        return s.num * extra;
    };

    PoincareSeries r;
    r.num = lift(*this) + lift(o);
    r.den = common;
    return r.canonical();
}

PoincareSeries PoincareSeries::operator-(const PoincareSeries& o) const {
    PoincareSeries neg = o;
    neg.num = UniPoly::constant(-1) * o.num;
    return *this + neg;
}

bool PoincareSeries::equals(const PoincareSeries& o) const {
    // Cross-multiplied comparison.
    return num * den_product(o.den) == o.num * den_product(den);
}

PoincareSeries PoincareSeries::canonical() const {
    PoincareSeries r = *this;
    bool changed = true;
    while (changed) {
        changed = false;
        // Try large d first so 1/(1-t^2) stays put rather than becoming (1+t)/(1-t^2)...
        for (auto it = r.den.rbegin(); it != r.den.rend(); ++it) {
            UniPoly q;
            if (r.num.divide_exact(UniPoly::one_minus_power(*it), q)) {
                r.num = q;
                r.den.erase(std::next(it).base());
                changed = true;
                break;
            }
        }
    }
    return r;
}

std::vector<Rat> PoincareSeries::truncate(int k) const {
    std::vector<Rat> out(k + 1, Rat(0));
    for (int i = 0; i <= std::min(k, num.degree()); ++i) out[i] = num.coeff(i);
    // Multiply by geometric series 1/(1-t^d) = sum t^{jd}.
    for (int d : den) {
        for (int i = d; i <= k; ++i) out[i] += out[i - d];
    }
    return out;
}

bool PoincareSeries::has_pole_at_one() const {
    UniPoly n = num;
    for (size_t i = 0; i < den.size(); ++i) {
        UniPoly q;
        if (!n.divide_exact(UniPoly::one_minus_power(1), q)) return true;
        n = q;
    }
    return false;
}

Rat PoincareSeries::eval_at_one() const {
    // num must vanish at t=1 to the order of the denominator.
    UniPoly n = num;
    Rat scale = 1;
    for (int d : den) scale *= d;
    for (size_t i = 0; i < den.size(); ++i) {
        UniPoly q;
        if (!n.divide_exact(UniPoly::one_minus_power(1), q))
            throw input_error("series has a pole at t=1");
        n = q;
    }
    return n.evaluate(1) / scale;
}

std::string PoincareSeries::to_string(const std::string& var) const {
    std::ostringstream out;
    std::string ns = num.to_string(var);
    if (den.empty()) return ns;
    bool paren_num = num.c.size() > 1;
    if (paren_num)
        out << "(" << ns << ")";
    else
        out << ns;
    out << " / (";
    std::map<int, int> counts;
    for (int d : den) counts[d]++;
    bool first = true;
    for (auto& [d, k] : counts) {
        if (!first) out << "*";
        first = false;
        out << "(1 - " << var;
        if (d > 1) out << "^" << d;
        out << ")";
        if (k > 1) out << "^" << k;
    }
    out << ")";
    return out.str();
}

std::string PoincareSeries::render_with_truncation(int k, const std::string& var) const {
    std::ostringstream out;
    out << to_string(var) << "  =  ";
    auto t = truncate(k);
    bool first = true;
    for (int i = 0; i <= k; ++i) {
        if (t[i] == 0) continue;
        if (!first) out << " + ";
        first = false;
        if (i == 0) {
            out << t[i].get_str();
        } else {
            if (t[i] != 1) out << t[i].get_str() << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    if (first) out << "0";
    out << " + O(" << var << "^" << (k + 1) << ")";
    return out.str();
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        // remainder of a by b
        UniPoly rem = a;
        Rat lead = b.c.back();
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            int shift = rem.degree() - b.degree();
            Rat q = rem.c.back() / lead;
            for (size_t i = 0; i < b.c.size(); ++i) rem.c[shift + i] -= q * b.c[i];
            rem.trim();
        }
        a = b;
        b = rem;
    }
    if (!a.is_zero()) a = a * UniPoly::constant(Rat(1) / a.c.back());
    return a;
}

std::vector<Rat> series_coeffs(const UniPoly& P, const UniPoly& Q, int k) {
    if (Q.coeff(0) == 0) throw input_error("series_coeffs: denominator vanishes at 0");
    std::vector<Rat> a(k + 1, Rat(0));
    Rat q0 = Q.coeff(0);
    for (int i = 0; i <= k; ++i) {
        Rat v = P.coeff(i);
        for (int j = 1; j <= std::min(i, Q.degree()); ++j) v -= Q.coeff(j) * a[i - j];
        a[i] = v / q0;
    }
    return a;
}

PoincareSeries rational_to_poincare(const UniPoly& P, const UniPoly& Q, int max_order) {
    if (Q.is_zero()) throw input_error("rational_to_poincare: zero denominator");
    UniPoly num = P, den = Q;
    if (den.coeff(0) == 0) throw input_error("rational_to_poincare: denominator vanishes at 0");
    Rat d0 = den.coeff(0);
    num = num * UniPoly::constant(Rat(1) / d0);
    den = den * UniPoly::constant(Rat(1) / d0);
    UniPoly g = uni_gcd(num, den);
    if (g.degree() > 0) {
        UniPoly qn, qd;
        num.divide_exact(g, qn);
        den.divide_exact(g, qd);
        num = qn;
        den = qd;
    }

    std::vector<int> ds;
    // Cover the denominator by (1 - t^d) factors: repeatedly pick the largest d
    // whose factor (1 - t^d) shares the biggest common part with den, absorb the
    // mismatch into the numerator. Terminates because deg(den) strictly drops.
    while (den.degree() > 0) {
        int best_d = 0;
        UniPoly best_g;
        for (int d = max_order; d >= 1; --d) {
            UniPoly g2 = uni_gcd(den, UniPoly::one_minus_power(d));
            if (g2.degree() > (best_g.is_zero() ? 0 : best_g.degree())) {
                best_d = d;
                best_g = g2;
                if (best_g.degree() == std::min(den.degree(), d)) break;
            }
        }
        if (best_d == 0)
            throw input_error("rational_to_poincare: denominator is not cyclotomic");
        UniPoly q, extra;
        den.divide_exact(best_g, q);
        den = q;
        UniPoly::one_minus_power(best_d).divide_exact(best_g, extra);
        num = num * extra;
        ds.push_back(best_d);
    }
    if (den.coeff(0) != 1) num = num * UniPoly::constant(Rat(1) / den.coeff(0));
    PoincareSeries s;
    s.num = num;
    s.den = ds;
    std::sort(s.den.begin(), s.den.end());
    return s.canonical();
}

}  // namespace isoring
