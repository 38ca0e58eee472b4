#include "isoring/invariants.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace isoring {

namespace {

bool shape_ok(const QMatrix& m, int n) {
    if (static_cast<int>(m.size()) != n) return false;
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n) return false;
    return true;
}

// Enumerate all exponent vectors in `nvars` variables of total degree d.
void monomials_of_degree(int nvars, int d, Monomial& prefix, std::vector<Monomial>& out) {
    if (nvars == 1) {
        prefix.push_back(d);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int e = d; e >= 0; --e) {
        prefix.push_back(e);
        monomials_of_degree(nvars - 1, d - e, prefix, out);
        prefix.pop_back();
    }
}

std::vector<Monomial> degree_basis(int nvars, int d) {
    std::vector<Monomial> out;
    Monomial prefix;
    monomials_of_degree(nvars, d, prefix, out);
    return out;
}

// Incremental row-echelon span of coefficient vectors; insert returns true
// when the vector enlarges the span.
struct LinearSpan {
    std::vector<std::pair<size_t, std::vector<Rat>>> rows;  // (pivot, normalized row)

    bool insert(std::vector<Rat> v) {
        for (const auto& [pivot, row] : rows) {
            if (v[pivot] == 0) continue;
            Rat f = v[pivot];
            for (size_t i = 0; i < v.size(); ++i) v[i] -= f * row[i];
        }
        size_t pivot = v.size();
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) {
                pivot = i;
                break;
            }
        if (pivot == v.size()) return false;
        Rat lead = v[pivot];
        for (auto& x : v) x /= lead;
        rows.push_back({pivot, std::move(v)});
        return true;
    }
};

std::vector<Rat> poly_to_vector(const ExactPoly& p, const std::map<Monomial, size_t>& index) {
    std::vector<Rat> v(index.size(), Rat(0));
    for (const auto& [m, c] : p.terms) {
        auto it = index.find(m);
        if (it == index.end()) throw std::logic_error("polynomial outside the degree basis");
        v[it->second] = c;
    }
    return v;
}

// Scale to integer coefficients with content 1 and positive coefficient on the
// structurally largest monomial, for deterministic pretty generators.
ExactPoly normalize_primitive(const ExactPoly& p) {
    if (p.terms.empty()) return p;
    Int den_lcm(1), num_gcd(0);
    for (const auto& [m, c] : p.terms) {
        Int d = c.get_den();
        den_lcm = den_lcm / gcd(den_lcm, d) * d;
    }
    for (const auto& [m, c] : p.terms) {
        Rat scaled = c * Rat(den_lcm);
        num_gcd = gcd(num_gcd, scaled.get_num());
    }
    Rat factor = Rat(den_lcm) / Rat(num_gcd);
    if (p.terms.rbegin()->second * factor < 0) factor = -factor;
    return p.scaled(factor);
}

UniPoly lagrange_interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    UniPoly total;
    for (size_t i = 0; i < xs.size(); ++i) {
        UniPoly basis = UniPoly::constant(Rat(1));
        Rat denom(1);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = basis * UniPoly({-xs[j], Rat(1)});
            denom *= xs[i] - xs[j];
        }
        total = total + basis * UniPoly::constant(ys[i] / denom);
    }
    return total;
}

// det(I - t*gamma) as an exact univariate polynomial (degree <= n), via
// interpolation of scalar determinants at n+1 sample points.
UniPoly reciprocal_char_poly(const QMatrix& gamma) {
    int n = static_cast<int>(gamma.size());
    std::vector<Rat> xs, ys;
    for (int c = 0; c <= n; ++c) {
        QMatrix m(n, std::vector<Rat>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[i][j] = (i == j ? Rat(1) : Rat(0)) - Rat(c) * gamma[i][j];
        xs.push_back(Rat(c));
        ys.push_back(q_det(m));
    }
    return lagrange_interpolate(xs, ys);
}

void reduce_fraction(UniPoly& p, UniPoly& q) {
    UniPoly g = uni_gcd(p, q);
    if (g.degree() > 0) {
        UniPoly pq, qq;
        if (!p.divide_exact(g, pq) || !q.divide_exact(g, qq))
            throw std::logic_error("gcd does not divide");
        p = pq;
        q = qq;
    }
    Rat c0 = q.coeff(0);
    if (c0 == 0) throw std::logic_error("denominator vanishes at zero");
    if (c0 != 1) {
        p = p * UniPoly::constant(Rat(1) / c0);
        q = q * UniPoly::constant(Rat(1) / c0);
    }
}

}  // namespace

FiniteMatrixGroup close_matrix_group(int degree, const std::vector<QMatrix>& generators,
                                     long budget) {
    if (degree <= 0) throw input_error("matrix group degree must be positive");
    for (const auto& g : generators) {
        if (!shape_ok(g, degree)) throw input_error("generator has the wrong shape");
        if (q_det(g) == 0) throw input_error("generator is singular");
    }
    std::set<QMatrix> seen{q_identity(degree)};
    std::deque<QMatrix> queue(seen.begin(), seen.end());
    for (const auto& g : generators)
        if (seen.insert(g).second) queue.push_back(g);
    while (!queue.empty()) {
        QMatrix m = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : generators) {
            QMatrix prod = q_mul(m, g);
            if (seen.insert(prod).second) {
                if (static_cast<long>(seen.size()) > budget)
                    throw budget_error("matrix group closure exceeded budget of " +
                                       std::to_string(budget));
                queue.push_back(std::move(prod));
            }
        }
    }
    FiniteMatrixGroup gamma;
    gamma.degree = degree;
    gamma.elements.assign(seen.begin(), seen.end());
    return gamma;
}

void validate_matrix_group(const FiniteMatrixGroup& gamma) {
    if (gamma.degree <= 0 || gamma.elements.empty())
        throw input_error("empty or degenerate matrix group");
    std::set<QMatrix> seen(gamma.elements.begin(), gamma.elements.end());
    if (seen.size() != gamma.elements.size()) throw input_error("duplicate group elements");
    for (const auto& m : gamma.elements)
        if (!shape_ok(m, gamma.degree)) throw input_error("group element has the wrong shape");
    if (!seen.count(q_identity(gamma.degree))) throw input_error("identity element missing");
    for (const auto& a : gamma.elements)
        for (const auto& b : gamma.elements)
            if (!seen.count(q_mul(a, b))) throw input_error("element list is not closed");
}

ExactPoly matrix_group_apply(const QMatrix& gamma, const ExactPoly& f) {
    int n = f.nvars;
    if (!shape_ok(gamma, n)) throw input_error("matrix does not match the variable count");
    std::vector<ExactPoly> images;
    for (int j = 0; j < n; ++j) {
        ExactPoly row(n);
        for (int k = 0; k < n; ++k) {
            if (gamma[j][k] == 0) continue;
            Monomial m(n, 0);
            m[k] = 1;
            row.add_term(m, gamma[j][k]);
        }
        images.push_back(row);
    }
    return f.substitute(images);
}

ExactPoly reynolds_average(const FiniteMatrixGroup& gamma, const ExactPoly& f) {
    ExactPoly total(f.nvars);
    for (const auto& g : gamma.elements) total = total + matrix_group_apply(g, f);
    return total.scaled(Rat(1) / Rat(gamma.order()));
}

MolienData molien_series(const FiniteMatrixGroup& gamma) {
    validate_matrix_group(gamma);
    int n = gamma.degree;
    UniPoly p = UniPoly::constant(Rat(0));
    UniPoly q = UniPoly::constant(Rat(1));
    for (const auto& g : gamma.elements) {
        UniPoly d = reciprocal_char_poly(g);
        p = p * d + q;
        q = q * d;
        reduce_fraction(p, q);
    }
    p = p * UniPoly::constant(Rat(1) / Rat(gamma.order()));

    // Greedy peeling of (1 - t^d) factors, smallest d first; n successes plus
    // an exact remainder of 1 certify a polynomial invariant ring.
    MolienData data;
    UniPoly rp = p, rq = q;
    int window = static_cast<int>(gamma.order());
    std::vector<int> degrees;
    bool ok = true;
    for (int step = 0; step < n && ok; ++step) {
        std::vector<Rat> coeffs = series_coeffs(rp, rq, window);
        int d = 0;
        for (int i = 1; i <= window; ++i)
            if (coeffs[i] != 0) {
                d = i;
                break;
            }
        if (d == 0 || coeffs[d] < 0) {
            ok = false;
            break;
        }
        degrees.push_back(d);
        rp = rp * UniPoly::one_minus_power(d);
        reduce_fraction(rp, rq);
    }
    if (ok && rp == rq) {
        data.polynomial_flag = true;
        data.degrees = degrees;
        data.series = PoincareSeries::free_ring(degrees);
    } else {
        data.polynomial_flag = false;
        data.series = rational_to_poincare(p, q, static_cast<int>(gamma.order())).canonical();
    }
    return data;
}

ReflectionReport is_pseudoreflection_group(const FiniteMatrixGroup& gamma, long budget) {
    validate_matrix_group(gamma);
    ReflectionReport report;
    int n = gamma.degree;
    for (const auto& g : gamma.elements) {
        QMatrix diff = g;
        for (int i = 0; i < n; ++i) diff[i][i] -= 1;
        if (q_rank(diff) == 1) report.reflections.push_back(g);
    }
    if (report.reflections.empty()) {
        report.is_reflection_group = (gamma.order() == 1);
        return report;
    }
    FiniteMatrixGroup sub = close_matrix_group(n, report.reflections, budget);
    report.is_reflection_group = (sub.order() == gamma.order());
    return report;
}

bool parameter_degree_test(const std::vector<int>& degrees, long order) {
    Int prod(1);
    for (int d : degrees) {
        if (d <= 0) throw input_error("parameter degrees must be positive");
        prod *= d;
    }
    return prod == Int(order);
}

InvariantBasis invariant_generators(const FiniteMatrixGroup& gamma, int degree_bound) {
    validate_matrix_group(gamma);
    if (degree_bound < 0) throw input_error("degree bound must be nonnegative");
    int n = gamma.degree;
    InvariantBasis basis;
    basis.complete = degree_bound >= gamma.order();
    for (int d = 1; d <= degree_bound; ++d) {
        std::vector<Monomial> monos = degree_basis(n, d);
        std::map<Monomial, size_t> index;
        for (size_t i = 0; i < monos.size(); ++i) index[monos[i]] = i;
        LinearSpan span;
        // Seed with the degree-d slice of the subalgebra generated so far:
        // products of accepted generators with total degree exactly d.
        std::vector<ExactPoly> products{ExactPoly::constant(n, Rat(1))};
        std::vector<int> product_degrees{0};
        for (size_t gidx = 0; gidx < basis.generators.size(); ++gidx) {
            size_t existing = products.size();
            for (size_t p = 0; p < existing; ++p) {
                ExactPoly acc = products[p];
                int deg = product_degrees[p];
                while (deg + basis.degrees[gidx] <= d) {
                    acc = acc * basis.generators[gidx];
                    deg += basis.degrees[gidx];
                    products.push_back(acc);
                    product_degrees.push_back(deg);
                }
            }
        }
        for (size_t p = 0; p < products.size(); ++p)
            if (product_degrees[p] == d) span.insert(poly_to_vector(products[p], index));
        for (const auto& m : monos) {
            ExactPoly avg = reynolds_average(gamma, ExactPoly::monomial(m, Rat(1)));
            if (avg.terms.empty()) continue;
            ExactPoly candidate = normalize_primitive(avg);
            if (span.insert(poly_to_vector(candidate, index))) {
                basis.generators.push_back(candidate);
                basis.degrees.push_back(d);
            }
        }
    }
    return basis;
}

CoinvariantReport coinvariant_dimension(const FiniteMatrixGroup& gamma, int degree_bound,
                                        long budget) {
    int bound = degree_bound < 0 ? static_cast<int>(gamma.order()) : degree_bound;
    InvariantBasis inv = invariant_generators(gamma, bound);
    CoinvariantReport report;
    report.degree_bound = bound;

    IdealPresentation pres;
    int n = gamma.degree;
    for (int i = 1; i <= n; ++i) pres.var_names.push_back("x" + std::to_string(i));
    pres.degrees.assign(n, 1);
    pres.order = MonomialOrder::make_grevlex(n);
    pres.gens = inv.generators;
    PresentedRing ring = PresentedRing::make(pres, budget);

    if (inv.complete) {
        auto dim = vector_space_dimension(ring);
        if (!dim)
            throw std::logic_error(
                "coinvariant algebra infinite-dimensional despite the Noether bound");
        report.dimension = *dim;
        report.exact = true;
        if (report.dimension < gamma.order())
            throw std::logic_error("coinvariant dimension fell below the group order");
        report.trichotomy = report.dimension == gamma.order() ? "equality" : "strict";
        return report;
    }

    // Bound below the Noether guarantee: the found ideal agrees with the true
    // one only in degrees <= bound, so count standard monomials there and
    // report a certified lower bound.
    long count = 0;
    std::vector<Monomial> leading;
    for (const auto& b : ring.gb.basis) leading.push_back(b.leading_monomial(ring.gb.order));
    for (int d = 0; d <= bound; ++d) {
        for (const auto& m : degree_basis(n, d)) {
            bool divisible = false;
            for (const auto& lt : leading) {
                bool div = true;
                for (int i = 0; i < n; ++i)
                    if (m[i] < lt[i]) {
                        div = false;
                        break;
                    }
                if (div) {
                    divisible = true;
                    break;
                }
            }
            if (!divisible) ++count;
        }
    }
    report.dimension = count;
    report.exact = false;
    report.trichotomy = count > gamma.order() ? "strict" : "undecided";
    return report;
}

CstReport cst_verdict(const FiniteMatrixGroup& gamma, long budget) {
    validate_matrix_group(gamma);
    CstReport report;
    ReflectionReport refl = is_pseudoreflection_group(gamma);
    MolienData molien = molien_series(gamma);
    CoinvariantReport coin = coinvariant_dimension(gamma, -1, budget);
    report.reflection_group = refl.is_reflection_group;
    report.molien_polynomial = molien.polynomial_flag;
    report.coinvariants_equal_order = coin.exact && coin.dimension == gamma.order();
    if (report.reflection_group != report.molien_polynomial ||
        report.reflection_group != report.coinvariants_equal_order)
        throw std::logic_error(
            "polynomiality tests disagree: reflection=" +
            std::to_string(report.reflection_group) +
            " molien=" + std::to_string(report.molien_polynomial) +
            " coinvariants=" + std::to_string(report.coinvariants_equal_order));
    report.verdict = report.reflection_group;
    if (report.verdict) report.degrees = molien.degrees;
    return report;
}

CollapseReport subalgebra_collapse_check(const std::vector<ExactPoly>& a_gens,
                                         const PresentedRing& b, const FiniteMatrixGroup& gamma,
                                         long budget) {
    validate_matrix_group(gamma);
    int n = b.pres.nvars();
    if (gamma.degree != n) throw input_error("group degree does not match the ring");
    for (const auto& rel : b.pres.gens)
        for (const auto& g : gamma.elements)
            if (!b.reduce(matrix_group_apply(g, rel)).terms.empty())
                throw input_error("the group does not preserve the ring's relations");
    for (size_t k = 0; k < a_gens.size(); ++k) {
        std::string name = "a" + std::to_string(k + 1);
        if (a_gens[k].nvars != n) throw input_error("generator " + name + " has wrong arity");
        ExactPoly reduced = b.reduce(a_gens[k]);
        if (reduced.is_constant() && !reduced.terms.empty())
            throw input_error("generator " + name + " is a nonzero constant");
        for (const auto& g : gamma.elements)
            if (!b.reduce(matrix_group_apply(g, a_gens[k]) - a_gens[k]).terms.empty())
                throw input_error("generator " + name + " is not invariant under the group");
    }

    InvariantBasis amb = invariant_generators(gamma, static_cast<int>(gamma.order()));
    std::vector<ExactPoly> inv_gens;
    for (const auto& f : amb.generators) {
        ExactPoly r = b.reduce(f);
        if (!r.terms.empty()) inv_gens.push_back(f);
    }

    IdealPresentation pres_a = b.pres;
    for (const auto& a : a_gens) pres_a.gens.push_back(a);
    IdealPresentation pres_g = b.pres;
    for (const auto& f : inv_gens) pres_g.gens.push_back(f);
    PresentedRing ring_a = PresentedRing::make(pres_a, budget);
    PresentedRing ring_g = PresentedRing::make(pres_g, budget);

    CollapseReport report;
    for (const auto& f : inv_gens) {
        if (!ring_a.reduce(f).terms.empty()) {
            report.ideals_equal = false;
            report.detail = "invariant " + poly_to_string(f, b.pres.var_names) +
                            " is not in the ideal generated by the candidates";
            return report;
        }
    }
    for (size_t k = 0; k < a_gens.size(); ++k) {
        if (!ring_g.reduce(a_gens[k]).terms.empty()) {
            report.ideals_equal = false;
            report.detail = "candidate a" + std::to_string(k + 1) +
                            " is not in the invariant ideal";
            return report;
        }
    }
    report.ideals_equal = true;
    report.detail =
        "ideal equality certified: the candidate generators span the full invariant subalgebra";
    return report;
}

}  // namespace isoring
