#include "isoring/lie.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <regex>
#include <set>

namespace isoring {

namespace {

std::vector<Int> z_apply(const ZMatrix& m, const std::vector<Int>& v) {
    std::vector<Int> r(m.size(), Int(0));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    return r;
}

QMatrix q_transpose(const QMatrix& a) {
    if (a.empty()) return a;
    QMatrix t(a[0].size(), std::vector<Rat>(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
}

// (x, y) under the gram form.
Rat inner(const QMatrix& gram, const std::vector<Int>& x, const std::vector<Int>& y) {
    Rat total(0);
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        Rat row(0);
        for (size_t j = 0; j < y.size(); ++j) row += gram[i][j] * Rat(y[j]);
        total += Rat(x[i]) * row;
    }
    return total;
}

Int rat_to_int_checked(const Rat& r, const char* what) {
    if (r.get_den() != 1) throw input_error(std::string(what) + " is not integral");
    return r.get_num();
}

std::vector<Int> prime_divisors(Int n) {
    std::vector<Int> primes;
    if (n < 0) n = -n;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            primes.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) primes.push_back(n);
    return primes;
}

void finish_group(CompactGroup& g) {
    g.weyl_generators.clear();
    for (const auto& alpha : g.simple_roots)
        g.weyl_generators.push_back(reflection_matrix(g.gram, alpha));
    if (g.lattice_in_cover.empty()) g.lattice_in_cover = z_identity(g.rank);
}

}  // namespace

std::vector<std::string> CompactGroup::torus_var_names() const {
    std::vector<std::string> names;
    for (int i = 1; i <= rank; ++i) names.push_back("t" + std::to_string(i));
    return names;
}

ZMatrix reflection_matrix(const QMatrix& gram, const std::vector<Int>& alpha) {
    size_t n = alpha.size();
    Rat norm = inner(gram, alpha, alpha);
    if (norm == 0) throw input_error("root has zero length");
    // G * alpha, so that (e_j, alpha) = (G alpha)_j.
    std::vector<Rat> galpha(n, Rat(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) galpha[i] += gram[i][j] * Rat(alpha[j]);
    ZMatrix s(n, std::vector<Int>(n, Int(0)));
    for (size_t j = 0; j < n; ++j) {
        Rat c = Rat(2) * galpha[j] / norm;  // <e_j, alpha^vee>
        Int ci = rat_to_int_checked(c, "coroot pairing of a lattice basis vector");
        for (size_t i = 0; i < n; ++i) s[i][j] = (i == j ? Int(1) : Int(0)) - ci * alpha[i];
    }
    return s;
}

CompactGroup make_su(int n) {
    if (n < 2) throw input_error("SU(n) requires n >= 2");
    CompactGroup g;
    g.label = "SU(" + std::to_string(n) + ")";
    g.rank = n - 1;
    g.gram.assign(g.rank, std::vector<Rat>(g.rank));
    for (int i = 0; i < g.rank; ++i)
        for (int j = 0; j < g.rank; ++j) g.gram[i][j] = (i == j) ? Rat(n - 1) / Rat(n) : Rat(-1) / Rat(n);
    for (int i = 0; i + 1 < g.rank; ++i) {
        std::vector<Int> a(g.rank, Int(0));
        a[i] = 1;
        a[i + 1] = -1;
        g.simple_roots.push_back(a);
    }
    {
        std::vector<Int> last(g.rank, Int(1));
        last[g.rank - 1] = 2;
        g.simple_roots.push_back(last);
    }
    for (int i = 1; i <= g.rank; ++i) {
        std::vector<Int> w(g.rank, Int(0));
        for (int j = 0; j < i; ++j) w[j] = 1;
        g.fundamental_weights.push_back(w);
    }
    g.factors = {{'A', n}};
    finish_group(g);
    return g;
}

CompactGroup make_sp(int n) {
    if (n < 1) throw input_error("Sp(n) requires n >= 1");
    CompactGroup g;
    g.label = "Sp(" + std::to_string(n) + ")";
    g.rank = n;
    g.gram.assign(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) g.gram[i][i] = 1;
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<Int> a(n, Int(0));
        a[i] = 1;
        a[i + 1] = -1;
        g.simple_roots.push_back(a);
    }
    {
        std::vector<Int> a(n, Int(0));
        a[n - 1] = 2;
        g.simple_roots.push_back(a);
    }
    for (int i = 1; i <= n; ++i) {
        std::vector<Int> w(n, Int(0));
        for (int j = 0; j < i; ++j) w[j] = 1;
        g.fundamental_weights.push_back(w);
    }
    g.factors = {{'C', n}};
    finish_group(g);
    return g;
}

CompactGroup make_spin(int n) {
    if (n < 3) throw input_error("Spin(n) requires n >= 3");
    bool odd = (n % 2 != 0);
    int p = n / 2;  // rank
    if (!odd && p < 2) throw input_error("Spin(2p) requires p >= 2");
    CompactGroup g;
    g.label = "Spin(" + std::to_string(n) + ")";
    g.rank = p;
    // Basis eps_1..eps_{p-1}, s with eps_p = 2s - sum(eps_i).
    g.gram.assign(p, std::vector<Rat>(p, Rat(0)));
    for (int i = 0; i < p - 1; ++i) {
        g.gram[i][i] = 1;
        g.gram[i][p - 1] = Rat(1, 2);
        g.gram[p - 1][i] = Rat(1, 2);
    }
    g.gram[p - 1][p - 1] = Rat(p) / Rat(4);
    for (int i = 0; i + 2 < p; ++i) {  // eps_i - eps_{i+1}, both among the basis eps
        std::vector<Int> a(p, Int(0));
        a[i] = 1;
        a[i + 1] = -1;
        g.simple_roots.push_back(a);
    }
    if (p >= 2) {  // eps_{p-1} - eps_p = sum_{i<p-1} eps_i + 2 eps_{p-1} - 2 s
        std::vector<Int> a(p, Int(1));
        a[p - 2] = 2;
        a[p - 1] = -2;
        g.simple_roots.push_back(a);
    }
    if (odd) {  // alpha_p = eps_p = -sum_{i<p} eps_i + 2 s
        std::vector<Int> a(p, Int(-1));
        a[p - 1] = 2;
        g.simple_roots.push_back(a);
    } else {  // alpha_p = eps_{p-1} + eps_p = -sum_{i<p-1} eps_i + 2 s
        std::vector<Int> a(p, Int(-1));
        a[p - 2] = 0;
        a[p - 1] = 2;
        g.simple_roots.push_back(a);
    }
    // Fundamental weights.
    int basic = odd ? p - 1 : p - 2;  // prefix-sum weights eps_1+..+eps_i
    for (int i = 1; i <= basic; ++i) {
        std::vector<Int> w(p, Int(0));
        for (int j = 0; j < i; ++j) w[j] = 1;
        g.fundamental_weights.push_back(w);
    }
    if (!odd) {  // half-spin weight (eps_1+..+eps_{p-1} - eps_p)/2 = sum(eps_i) - s
        std::vector<Int> w(p, Int(1));
        w[p - 1] = -1;
        g.fundamental_weights.push_back(w);
    }
    {  // spin weight s
        std::vector<Int> w(p, Int(0));
        w[p - 1] = 1;
        g.fundamental_weights.push_back(w);
    }
    g.factors = {{odd ? 'B' : 'D', p}};
    finish_group(g);
    return g;
}

CompactGroup make_torus(int k) {
    if (k < 1) throw input_error("torus rank must be >= 1");
    CompactGroup g;
    g.label = "T" + std::to_string(k);
    g.rank = k;
    g.gram.assign(k, std::vector<Rat>(k, Rat(0)));
    for (int i = 0; i < k; ++i) g.gram[i][i] = 1;
    g.factors = {{'T', k}};
    finish_group(g);
    return g;
}

CompactGroup make_u(int n) {
    if (n < 1) throw input_error("U(n) requires n >= 1");
    if (n == 1) {
        CompactGroup g = make_torus(1);
        g.label = "U(1)";
        return g;
    }
    CompactGroup g;
    g.label = "U(" + std::to_string(n) + ")";
    g.rank = n;
    g.gram.assign(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) g.gram[i][i] = 1;
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<Int> a(n, Int(0));
        a[i] = 1;
        a[i + 1] = -1;
        g.simple_roots.push_back(a);
    }
    for (int i = 1; i < n; ++i) {
        std::vector<Int> w(n, Int(0));
        for (int j = 0; j < i; ++j) w[j] = 1;
        g.fundamental_weights.push_back(w);
    }
    g.factors = {{'A', n}, {'T', 1}};
    finish_group(g);
    return g;
}

CompactGroup make_so(int n) {
    if (n < 2) throw input_error("SO(n) requires n >= 2");
    if (n == 2) {
        CompactGroup g = make_torus(1);
        g.label = "SO(2)";
        return g;
    }
    CompactGroup cover = make_spin(n);
    int p = cover.rank;
    // Character lattice of SO(n): spanned by eps_1..eps_p inside the spin lattice.
    ZMatrix cols(p, std::vector<Int>(p, Int(0)));
    for (int i = 0; i < p - 1; ++i) cols[i][i] = 1;  // eps_1..eps_{p-1}
    for (int i = 0; i < p - 1; ++i) cols[i][p - 1] = -1;
    cols[p - 1][p - 1] = 2;  // eps_p = 2s - sum(eps_i)
    return make_central_quotient(cover, cols, "SO(" + std::to_string(n) + ")");
}

CompactGroup make_psu(int n) {
    CompactGroup cover = make_su(n);
    ZMatrix cols(cover.rank, std::vector<Int>(cover.rank, Int(0)));
    for (int j = 0; j < cover.rank; ++j)
        for (int i = 0; i < cover.rank; ++i) cols[i][j] = cover.simple_roots[j][i];
    return make_central_quotient(cover, cols, "PSU(" + std::to_string(n) + ")");
}

CompactGroup make_product(const CompactGroup& a, const CompactGroup& b, const std::string& label) {
    CompactGroup g;
    g.label = label.empty() ? a.label + "x" + b.label : label;
    g.rank = a.rank + b.rank;
    g.gram.assign(g.rank, std::vector<Rat>(g.rank, Rat(0)));
    for (int i = 0; i < a.rank; ++i)
        for (int j = 0; j < a.rank; ++j) g.gram[i][j] = a.gram[i][j];
    for (int i = 0; i < b.rank; ++i)
        for (int j = 0; j < b.rank; ++j) g.gram[a.rank + i][a.rank + j] = b.gram[i][j];
    auto pad_front = [&](const std::vector<Int>& v) {
        std::vector<Int> w(g.rank, Int(0));
        for (size_t i = 0; i < v.size(); ++i) w[i] = v[i];
        return w;
    };
    auto pad_back = [&](const std::vector<Int>& v) {
        std::vector<Int> w(g.rank, Int(0));
        for (size_t i = 0; i < v.size(); ++i) w[a.rank + i] = v[i];
        return w;
    };
    for (const auto& r : a.simple_roots) g.simple_roots.push_back(pad_front(r));
    for (const auto& r : b.simple_roots) g.simple_roots.push_back(pad_back(r));
    // Keep fundamental weights only when both factors carry full lists or are tori.
    bool a_ok = !a.simple_roots.empty() ? !a.fundamental_weights.empty() : true;
    bool b_ok = !b.simple_roots.empty() ? !b.fundamental_weights.empty() : true;
    if (a_ok && b_ok) {
        for (const auto& w : a.fundamental_weights) g.fundamental_weights.push_back(pad_front(w));
        for (const auto& w : b.fundamental_weights) g.fundamental_weights.push_back(pad_back(w));
    }
    g.factors = a.factors;
    g.factors.insert(g.factors.end(), b.factors.begin(), b.factors.end());
    g.lattice_in_cover.assign(g.rank, std::vector<Int>(g.rank, Int(0)));
    for (int i = 0; i < a.rank; ++i)
        for (int j = 0; j < a.rank; ++j) g.lattice_in_cover[i][j] = a.lattice_in_cover[i][j];
    for (int i = 0; i < b.rank; ++i)
        for (int j = 0; j < b.rank; ++j)
            g.lattice_in_cover[a.rank + i][a.rank + j] = b.lattice_in_cover[i][j];
    g.cover_index = a.cover_index * b.cover_index;
    finish_group(g);
    return g;
}

CompactGroup make_central_quotient(const CompactGroup& g, const ZMatrix& sublattice_cols,
                                   const std::string& label) {
    if (sublattice_cols.empty() || (int)sublattice_cols.size() != g.rank)
        throw input_error("sublattice columns must have one row per lattice coordinate");
    for (const auto& alpha : g.simple_roots)
        if (!z_lattice_member(sublattice_cols, alpha))
            throw input_error("sublattice does not contain every root; not a central quotient");
    ZMatrix h = z_column_hnf(sublattice_cols);
    // Keep the leading g.rank columns; they must be a basis (finite index).
    ZMatrix basis(g.rank, std::vector<Int>(g.rank, Int(0)));
    for (int i = 0; i < g.rank; ++i)
        for (int j = 0; j < g.rank; ++j)
            basis[i][j] = (j < (int)h[i].size()) ? h[i][j] : Int(0);
    Int index = z_det(basis);
    if (index == 0) throw input_error("sublattice has infinite index in the weight lattice");
    if (index < 0) index = -index;
    auto binv_opt = z_inverse_q(basis);
    if (!binv_opt) throw input_error("sublattice has infinite index in the weight lattice");
    const QMatrix& binv = *binv_opt;

    CompactGroup q;
    q.label = label;
    q.rank = g.rank;
    auto rebase = [&](const std::vector<Int>& v) -> std::optional<std::vector<Int>> {
        std::vector<Rat> rv(v.size());
        for (size_t i = 0; i < v.size(); ++i) rv[i] = Rat(v[i]);
        std::vector<Rat> image = q_apply(binv, rv);
        std::vector<Int> out(image.size());
        for (size_t i = 0; i < image.size(); ++i) {
            if (image[i].get_den() != 1) return std::nullopt;
            out[i] = image[i].get_num();
        }
        return out;
    };
    for (const auto& alpha : g.simple_roots) {
        auto re = rebase(alpha);
        if (!re) throw input_error("root fails to land in the quotient lattice");
        q.simple_roots.push_back(*re);
    }
    QMatrix bq = z_to_q(basis);
    q.gram = q_mul(q_mul(q_transpose(bq), g.gram), bq);
    bool all_integral = true;
    std::vector<std::vector<Int>> new_weights;
    for (const auto& w : g.fundamental_weights) {
        auto re = rebase(w);
        if (!re) {
            all_integral = false;
            break;
        }
        new_weights.push_back(*re);
    }
    if (all_integral) q.fundamental_weights = new_weights;
    q.factors = g.factors;
    q.lattice_in_cover = z_mul(g.lattice_in_cover, basis);
    q.cover_index = g.cover_index * index;
    finish_group(q);
    return q;
}

CompactGroup make_named(const std::string& name) {
    // Products joined by 'x': e.g. "SU(2)xT1".
    std::vector<std::string> tokens;
    std::string current;
    for (char c : name) {
        if (c == 'x') {
            tokens.push_back(current);
            current.clear();
        } else if (!std::isspace((unsigned char)c)) {
            current.push_back(c);
        }
    }
    tokens.push_back(current);
    static const std::regex pattern(R"(^(SU|PSU|Sp|Spin|SO|U|T)\(?([0-9]+)\)?$)");
    std::optional<CompactGroup> result;
    for (const auto& tok : tokens) {
        std::smatch m;
        if (!std::regex_match(tok, m, pattern))
            throw input_error("unknown group name: '" + tok + "'");
        std::string family = m[1];
        int n = std::stoi(m[2]);
        CompactGroup g;
        if (family == "SU") g = make_su(n);
        else if (family == "PSU") g = make_psu(n);
        else if (family == "Sp") g = make_sp(n);
        else if (family == "Spin") g = make_spin(n);
        else if (family == "SO") g = make_so(n);
        else if (family == "U") g = make_u(n);
        else g = make_torus(n);
        result = result ? make_product(*result, g) : g;
    }
    return *result;
}

void validate_group(const CompactGroup& g) {
    int n = g.rank;
    if (n < 0) throw input_error("negative rank");
    if ((int)g.gram.size() != n) throw input_error("gram matrix size mismatch");
    for (const auto& row : g.gram)
        if ((int)row.size() != n) throw input_error("gram matrix size mismatch");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.gram[i][j] != g.gram[j][i]) throw input_error("gram matrix is not symmetric");
    // Positive definiteness via leading principal minors.
    for (int k = 1; k <= n; ++k) {
        QMatrix sub(k, std::vector<Rat>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub[i][j] = g.gram[i][j];
        if (q_det(sub) <= 0) throw input_error("gram matrix is not positive definite");
    }
    size_t m = g.simple_roots.size();
    if (m > (size_t)n) throw input_error("more simple roots than the rank allows");
    if (g.weyl_generators.size() != m)
        throw input_error("one reflection generator required per simple root");
    if (m > 0) {
        QMatrix cols(n, std::vector<Rat>(m));
        for (size_t j = 0; j < m; ++j) {
            if ((int)g.simple_roots[j].size() != n) throw input_error("root length mismatch");
            for (int i = 0; i < n; ++i) cols[i][j] = Rat(g.simple_roots[j][i]);
        }
        if (q_rank(cols) != (int)m) throw input_error("simple roots are linearly dependent");
    }
    // Reflections: recompute, compare, check involution and Coxeter relations.
    for (size_t i = 0; i < m; ++i) {
        ZMatrix s = reflection_matrix(g.gram, g.simple_roots[i]);
        if (s != g.weyl_generators[i])
            throw input_error("stored reflection disagrees with the root datum");
        if (z_mul(s, s) != z_identity(n)) throw input_error("reflection is not an involution");
    }
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) {
            Int cij = coroot_pairing(g, g.simple_roots[i], g.simple_roots[j]);
            Int cji = coroot_pairing(g, g.simple_roots[j], g.simple_roots[i]);
            if (cij > 0 || cji > 0)
                throw input_error("distinct simple roots must have nonpositive pairings");
            Int prod = cij * cji;
            int order;
            if (prod == 0) order = 2;
            else if (prod == 1) order = 3;
            else if (prod == 2) order = 4;
            else if (prod == 3) order = 6;
            else throw input_error("root pairing does not generate a finite reflection group");
            ZMatrix pw = z_identity(n);
            ZMatrix st = z_mul(g.weyl_generators[i], g.weyl_generators[j]);
            for (int k = 0; k < order; ++k) pw = z_mul(pw, st);
            if (pw != z_identity(n)) throw input_error("Coxeter relation violated");
        }
    // Reflections must permute the full root set.
    if (m > 0) {
        auto roots = all_roots(g);
        std::set<std::vector<Int>> root_set(roots.begin(), roots.end());
        for (const auto& s : g.weyl_generators)
            for (const auto& r : roots)
                if (!root_set.count(z_apply(s, r)))
                    throw input_error("reflection does not permute the root set");
    }
    // Fundamental weights, when present, must be dual to the coroots.
    if (!g.fundamental_weights.empty()) {
        if (g.fundamental_weights.size() != m)
            throw input_error("fundamental weight count must match the simple roots");
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) {
                Int p = coroot_pairing(g, g.fundamental_weights[i], g.simple_roots[j]);
                if (p != (i == j ? 1 : 0))
                    throw input_error("fundamental weights are not dual to the coroots");
            }
    }
}

Int coroot_pairing(const CompactGroup& g, const std::vector<Int>& lambda,
                   const std::vector<Int>& alpha) {
    Rat num = Rat(2) * inner(g.gram, lambda, alpha);
    Rat den = inner(g.gram, alpha, alpha);
    if (den == 0) throw input_error("root has zero length");
    return rat_to_int_checked(num / den, "coroot pairing");
}

bool is_dominant(const CompactGroup& g, const std::vector<Int>& lambda) {
    for (const auto& alpha : g.simple_roots)
        if (coroot_pairing(g, lambda, alpha) < 0) return false;
    return true;
}

std::vector<Int> dominant_representative(const CompactGroup& g, const std::vector<Int>& lambda) {
    std::vector<Int> v = lambda;
    for (long guard = 0; guard < 1000000; ++guard) {
        bool moved = false;
        for (size_t i = 0; i < g.simple_roots.size(); ++i) {
            if (coroot_pairing(g, v, g.simple_roots[i]) < 0) {
                v = z_apply(g.weyl_generators[i], v);
                moved = true;
                break;
            }
        }
        if (!moved) return v;
    }
    throw budget_error("dominant representative search did not terminate");
}

std::vector<ZMatrix> weyl_elements(const CompactGroup& g, long budget) {
    std::set<ZMatrix> seen;
    std::deque<ZMatrix> queue;
    ZMatrix id = z_identity(g.rank);
    seen.insert(id);
    queue.push_back(id);
    while (!queue.empty()) {
        ZMatrix w = std::move(queue.front());
        queue.pop_front();
        for (const auto& s : g.weyl_generators) {
            ZMatrix ws = z_mul(w, s);
            if (seen.insert(ws).second) {
                if ((long)seen.size() > budget)
                    throw budget_error("weyl group enumeration exceeded budget of " +
                                       std::to_string(budget) + " elements");
                queue.push_back(std::move(ws));
            }
        }
    }
    return std::vector<ZMatrix>(seen.begin(), seen.end());
}

std::vector<std::vector<Int>> all_roots(const CompactGroup& g) {
    std::set<std::vector<Int>> seen(g.simple_roots.begin(), g.simple_roots.end());
    std::deque<std::vector<Int>> queue(g.simple_roots.begin(), g.simple_roots.end());
    while (!queue.empty()) {
        std::vector<Int> r = std::move(queue.front());
        queue.pop_front();
        for (const auto& s : g.weyl_generators) {
            std::vector<Int> sr = z_apply(s, r);
            if (seen.insert(sr).second) queue.push_back(std::move(sr));
        }
    }
    return std::vector<std::vector<Int>>(seen.begin(), seen.end());
}

std::vector<std::vector<Int>> positive_roots(const CompactGroup& g) {
    std::vector<std::vector<Int>> result;
    if (g.simple_roots.empty()) return result;
    size_t m = g.simple_roots.size();
    QMatrix cols(g.rank, std::vector<Rat>(m));
    for (size_t j = 0; j < m; ++j)
        for (int i = 0; i < g.rank; ++i) cols[i][j] = Rat(g.simple_roots[j][i]);
    for (const auto& r : all_roots(g)) {
        std::vector<Rat> rhs(g.rank);
        for (int i = 0; i < g.rank; ++i) rhs[i] = Rat(r[i]);
        auto sol = q_solve(cols, rhs);
        if (!sol) throw input_error("root outside the span of the simple roots");
        bool nonneg = true, nonpos = true;
        for (const auto& c : *sol) {
            if (c < 0) nonneg = false;
            if (c > 0) nonpos = false;
        }
        if (!nonneg && !nonpos) throw input_error("root with mixed simple-root coefficients");
        if (nonneg) result.push_back(r);
    }
    return result;
}

std::vector<Rat> half_sum_positive_roots(const CompactGroup& g) {
    std::vector<Int> sum(g.rank, Int(0));
    for (const auto& r : positive_roots(g))
        for (int i = 0; i < g.rank; ++i) sum[i] += r[i];
    std::vector<Rat> rho(g.rank);
    for (int i = 0; i < g.rank; ++i) rho[i] = Rat(sum[i]) / Rat(2);
    return rho;
}

ZMatrix weyl_fixed_sublattice(const CompactGroup& g) {
    if (g.weyl_generators.empty()) return z_identity(g.rank);
    // Stack (w - I) for every generator; the fixed sublattice is the kernel.
    ZMatrix stacked;
    for (const auto& w : g.weyl_generators) {
        for (int i = 0; i < g.rank; ++i) {
            std::vector<Int> row(g.rank);
            for (int j = 0; j < g.rank; ++j) row[j] = w[i][j] - (i == j ? 1 : 0);
            stacked.push_back(std::move(row));
        }
    }
    auto kernel = z_kernel_basis(stacked);
    ZMatrix cols(g.rank, std::vector<Int>(kernel.size()));
    for (size_t j = 0; j < kernel.size(); ++j)
        for (int i = 0; i < g.rank; ++i) cols[i][j] = kernel[j][i];
    return cols;
}

Pi1Report pi1_report(const CompactGroup& g) {
    Pi1Report report;
    if (g.simple_roots.empty()) {
        report.free_rank = g.rank;
        return report;
    }
    size_t m = g.simple_roots.size();
    // Coroot functionals 2 G alpha / (alpha, alpha) as columns of an integer matrix.
    ZMatrix cols(g.rank, std::vector<Int>(m));
    for (size_t j = 0; j < m; ++j) {
        const auto& alpha = g.simple_roots[j];
        Rat norm = inner(g.gram, alpha, alpha);
        for (int i = 0; i < g.rank; ++i) {
            Rat entry(0);
            for (int k = 0; k < g.rank; ++k) entry += g.gram[i][k] * Rat(alpha[k]);
            entry = Rat(2) * entry / norm;
            cols[i][j] = rat_to_int_checked(entry, "coroot functional");
        }
    }
    std::vector<Int> diag = z_snf_diagonal(cols);
    report.free_rank = g.rank - (int)diag.size();
    std::set<Int> primes;
    for (const auto& d : diag) {
        Int a = d < 0 ? Int(-d) : d;
        if (a > 1) {
            report.invariant_factors.push_back(a);
            for (const auto& p : prime_divisors(a)) primes.insert(p);
        }
    }
    report.torsion_primes.assign(primes.begin(), primes.end());
    report.free_abelian = report.invariant_factors.empty();
    return report;
}

std::vector<Int> restrict_weight(const GroupPair& pair, const std::vector<Int>& lambda) {
    return z_apply(pair.restriction, lambda);
}

PairValidation validate_pair(const GroupPair& pair, long budget) {
    PairValidation result;
    const CompactGroup& g = pair.ambient;
    const CompactGroup& h = pair.subgroup;
    result.rank_difference = g.rank - h.rank;
    if ((int)pair.restriction.size() != h.rank)
        throw input_error("restriction matrix must have one row per subgroup coordinate");
    for (const auto& row : pair.restriction)
        if ((int)row.size() != g.rank)
            throw input_error("restriction matrix must have one column per ambient coordinate");
    if (h.rank > g.rank) {
        result.failure = "subgroup rank exceeds ambient rank";
        return result;
    }
    // A subtorus inclusion dualizes to a surjective character-lattice map.
    {
        std::vector<Int> snf = z_snf_diagonal(pair.restriction);
        bool onto = (int)snf.size() == h.rank;
        for (const auto& d : snf)
            if (d != 1 && d != -1) onto = false;
        if (!onto) {
            result.failure = "restriction is not a surjective lattice map (no subtorus embedding)";
            return result;
        }
    }
    // Restricted W_G-orbit multisets of the generating characters must be W_H-stable.
    std::vector<std::vector<Int>> probes = g.fundamental_weights;
    if (probes.empty()) {
        for (int i = 0; i < g.rank; ++i) {
            std::vector<Int> e(g.rank, Int(0));
            e[i] = 1;
            probes.push_back(e);
        }
    } else {
        // Include the W-fixed directions (unit characters) alongside.
        ZMatrix fixed = weyl_fixed_sublattice(g);
        size_t k = fixed.empty() ? 0 : fixed[0].size();
        for (size_t j = 0; j < k; ++j) {
            std::vector<Int> v(g.rank);
            for (int i = 0; i < g.rank; ++i) v[i] = fixed[i][j];
            probes.push_back(v);
        }
    }
    auto wg = weyl_elements(g, budget);
    for (size_t idx = 0; idx < probes.size(); ++idx) {
        std::set<std::vector<Int>> orbit;
        for (const auto& w : wg) orbit.insert(z_apply(w, probes[idx]));
        std::vector<std::vector<Int>> restricted;
        for (const auto& v : orbit) restricted.push_back(restrict_weight(pair, v));
        std::sort(restricted.begin(), restricted.end());
        for (const auto& s : h.weyl_generators) {
            std::vector<std::vector<Int>> moved;
            for (const auto& v : restricted) moved.push_back(z_apply(s, v));
            std::sort(moved.begin(), moved.end());
            if (moved != restricted) {
                result.failure = "restricted orbit of generating character #" +
                                 std::to_string(idx + 1) + " is not stable under the subgroup";
                return result;
            }
        }
    }
    result.valid = true;
    return result;
}

}  // namespace isoring
