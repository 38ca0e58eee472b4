#include "isoring/rep_ring.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace isoring {

namespace {

std::vector<Int> z_apply(const ZMatrix& m, const std::vector<Int>& v) {
    std::vector<Int> r(m.size(), Int(0));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    return r;
}

Rat inner_q(const QMatrix& gram, const std::vector<Rat>& x, const std::vector<Rat>& y) {
    Rat total(0);
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        Rat row(0);
        for (size_t j = 0; j < y.size(); ++j) row += gram[i][j] * y[j];
        total += x[i] * row;
    }
    return total;
}

std::vector<Rat> to_q(const std::vector<Int>& v) {
    std::vector<Rat> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

Monomial weight_to_monomial(const std::vector<Int>& w) {
    Monomial m(w.size());
    for (size_t i = 0; i < w.size(); ++i) {
        if (!w[i].fits_sint_p()) throw input_error("weight coordinate overflows a monomial");
        m[i] = (int)w[i].get_si();
    }
    return m;
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

void collect_denominator_primes(const ExactPoly& p, std::set<Int>& primes) {
    for (const auto& [m, c] : p.terms)
        for (const auto& q : prime_divisors(c.get_den())) primes.insert(q);
}

// Orbit of a weight under the reflection generators.
std::vector<std::vector<Int>> weight_orbit(const CompactGroup& g, const std::vector<Int>& lambda,
                                           long budget) {
    std::set<std::vector<Int>> seen{lambda};
    std::deque<std::vector<Int>> queue{lambda};
    while (!queue.empty()) {
        std::vector<Int> v = std::move(queue.front());
        queue.pop_front();
        for (const auto& s : g.weyl_generators) {
            std::vector<Int> sv = z_apply(s, v);
            if (seen.insert(sv).second) {
                if ((long)seen.size() > budget)
                    throw budget_error("weight orbit exceeded budget of " + std::to_string(budget));
                queue.push_back(std::move(sv));
            }
        }
    }
    return std::vector<std::vector<Int>>(seen.begin(), seen.end());
}

// Simple-root coordinates of v (must be an integral nonnegative combination).
std::vector<Int> simple_root_coords(const CompactGroup& g, const std::vector<Int>& v) {
    size_t m = g.simple_roots.size();
    QMatrix cols(g.rank, std::vector<Rat>(m));
    for (size_t j = 0; j < m; ++j)
        for (int i = 0; i < g.rank; ++i) cols[i][j] = Rat(g.simple_roots[j][i]);
    auto sol = q_solve(cols, to_q(v));
    if (!sol) throw input_error("vector outside the root lattice span");
    std::vector<Int> out(m);
    for (size_t j = 0; j < m; ++j) {
        if ((*sol)[j].get_den() != 1)
            throw input_error("vector has non-integral root coordinates");
        out[j] = (*sol)[j].get_num();
    }
    return out;
}

}  // namespace

Int weyl_dimension(const CompactGroup& g, const std::vector<Int>& lambda) {
    if ((int)lambda.size() != g.rank) throw input_error("weight size mismatch");
    if (!is_dominant(g, lambda)) throw input_error("weight is not dominant");
    std::vector<Rat> rho = half_sum_positive_roots(g);
    std::vector<Rat> lr = to_q(lambda);
    for (int i = 0; i < g.rank; ++i) lr[i] += rho[i];
    Rat result(1);
    for (const auto& alpha : positive_roots(g)) {
        std::vector<Rat> aq = to_q(alpha);
        result *= inner_q(g.gram, lr, aq) / inner_q(g.gram, rho, aq);
    }
    if (result.get_den() != 1)
        throw input_error("dimension formula produced a non-integer (invalid root datum)");
    return result.get_num();
}

ExactPoly orbit_sum(const CompactGroup& g, const std::vector<Int>& lambda, long budget) {
    if ((int)lambda.size() != g.rank) throw input_error("weight size mismatch");
    ExactPoly p(g.rank);
    for (const auto& w : weight_orbit(g, lambda, budget)) p.add_term(weight_to_monomial(w), Rat(1));
    return p;
}

bool is_weyl_invariant(const CompactGroup& g, const ExactPoly& laurent) {
    if (laurent.nvars != g.rank) throw input_error("variable count does not match the rank");
    for (const auto& w : g.weyl_generators)
        if (!(laurent.apply_lattice_map(w) == laurent)) return false;
    return true;
}

Character irreducible_character(const CompactGroup& g, const std::vector<Int>& lambda,
                                long budget) {
    if ((int)lambda.size() != g.rank) throw input_error("weight size mismatch");
    if (!is_dominant(g, lambda)) throw input_error("highest weight must be dominant");
    Character out;
    out.highest_weight = lambda;
    if (g.simple_roots.empty()) {
        ExactPoly p(g.rank);
        p.add_term(weight_to_monomial(lambda), Rat(1));
        out.poly = p;
        return out;
    }

    const auto pos = positive_roots(g);
    const std::vector<Rat> rho = half_sum_positive_roots(g);
    auto shifted_norm = [&](const std::vector<Rat>& v) {
        std::vector<Rat> s(v.size());
        for (size_t i = 0; i < v.size(); ++i) s[i] = v[i] + rho[i];
        return inner_q(g.gram, s, s);
    };
    const Rat top_norm = shifted_norm(to_q(lambda));

    // Box bounds for the simple-root coordinates of lambda - mu, taken from the
    // orbit vertices (the coordinate functions are affine on the weight polytope).
    size_t m = g.simple_roots.size();
    std::vector<Int> cmax(m, Int(0));
    for (const auto& v : weight_orbit(g, lambda, budget)) {
        std::vector<Int> diff(g.rank);
        for (int i = 0; i < g.rank; ++i) diff[i] = lambda[i] - v[i];
        std::vector<Int> c = simple_root_coords(g, diff);
        for (size_t j = 0; j < m; ++j) cmax[j] = std::max(cmax[j], c[j]);
    }
    {
        Int box(1);
        for (const auto& c : cmax) box *= (c + 1);
        if (box > budget)
            throw budget_error("weight enumeration box exceeds budget of " +
                               std::to_string(budget));
    }

    // Enumerate dominant weights lambda - sum c_j alpha_j inside the box.
    struct Entry {
        std::vector<Int> weight;
        std::vector<Int> coords;
        Int level;
    };
    std::vector<Entry> dominants;
    std::vector<Int> c(m, Int(0));
    while (true) {
        std::vector<Int> mu(lambda);
        Int level(0);
        for (size_t j = 0; j < m; ++j) {
            level += c[j];
            for (int i = 0; i < g.rank; ++i) mu[i] -= c[j] * g.simple_roots[j][i];
        }
        if (is_dominant(g, mu) && shifted_norm(to_q(mu)) <= top_norm)
            dominants.push_back({mu, c, level});
        // Odometer.
        size_t pos_idx = 0;
        while (pos_idx < m && c[pos_idx] == cmax[pos_idx]) {
            c[pos_idx] = 0;
            ++pos_idx;
        }
        if (pos_idx == m) break;
        c[pos_idx] += 1;
    }
    std::sort(dominants.begin(), dominants.end(), [](const Entry& a, const Entry& b) {
        if (a.level != b.level) return a.level < b.level;
        return a.weight < b.weight;
    });

    // Simple-root coordinates of each positive root, for string bounds.
    std::vector<std::vector<Int>> root_coords;
    for (const auto& alpha : pos) root_coords.push_back(simple_root_coords(g, alpha));

    std::map<std::vector<Int>, Int> mult;
    for (const auto& entry : dominants) {
        if (entry.level == 0) {
            mult[entry.weight] = 1;
            continue;
        }
        Rat numsum(0);
        for (size_t a = 0; a < pos.size(); ++a) {
            // k runs while mu + k*alpha can still be a weight (coords stay >= 0).
            Int kmax(-1);
            for (size_t j = 0; j < m; ++j) {
                if (root_coords[a][j] == 0) continue;
                Int allowed = entry.coords[j] / root_coords[a][j];
                if (kmax < 0 || allowed < kmax) kmax = allowed;
            }
            std::vector<Rat> aq = to_q(pos[a]);
            for (Int k = 1; k <= kmax; ++k) {
                std::vector<Int> nu(entry.weight);
                for (int i = 0; i < g.rank; ++i) nu[i] += k * pos[a][i];
                auto rep = dominant_representative(g, nu);
                auto it = mult.find(rep);
                if (it == mult.end() || it->second == 0) continue;
                numsum += Rat(it->second) * inner_q(g.gram, to_q(nu), aq);
            }
        }
        Rat denom = top_norm - shifted_norm(to_q(entry.weight));
        if (denom == 0) throw input_error("degenerate weight in multiplicity recursion");
        Rat value = Rat(2) * numsum / denom;
        if (value.get_den() != 1 || value < 0)
            throw input_error("multiplicity recursion produced a non-integer");
        mult[entry.weight] = value.get_num();
    }

    ExactPoly p(g.rank);
    for (const auto& [mu, mval] : mult) {
        if (mval == 0) continue;
        Rat coeff(mval);
        for (const auto& w : weight_orbit(g, mu, budget)) p.add_term(weight_to_monomial(w), coeff);
    }
    out.poly = p;
    return out;
}

namespace {

// Height of a weight: sum of its pairings against the simple coroots.
Int weight_height(const CompactGroup& g, const std::vector<Int>& lambda) {
    Int h(0);
    for (const auto& alpha : g.simple_roots) h += coroot_pairing(g, lambda, alpha);
    return h;
}

// Complete, provably sufficient generator search for the dominant-weight
// monoid of a semisimple group whose lattice lacks integral fundamental
// weights (central quotients). Every monoid generator lies in the half-open
// parallelepiped spanned by the primitive ray generators, so its height is at
// most the sum of the ray heights; enumerate up to that bound and keep the
// elements that do not split as a sum of two nonzero dominant lattice weights.
std::vector<std::vector<Int>> dominant_monoid_generators(const CompactGroup& g, long budget) {
    size_t m = g.simple_roots.size();
    if (m != (size_t)g.rank)
        throw uncovered_error(
            "central quotients mixing torus directions are not supported; encode the group "
            "directly");
    // Pairing matrix C: row j = <e_i, alpha_j^vee>.
    QMatrix pairing(m, std::vector<Rat>(g.rank));
    for (size_t j = 0; j < m; ++j) {
        std::vector<Int> e(g.rank, Int(0));
        for (int i = 0; i < g.rank; ++i) {
            e.assign(g.rank, Int(0));
            e[i] = 1;
            pairing[j][i] = Rat(coroot_pairing(g, e, g.simple_roots[j]));
        }
    }
    // Primitive lattice generator on each dominant cone ray.
    std::vector<std::vector<Int>> rays;
    Int bound(0);
    for (size_t i = 0; i < m; ++i) {
        std::vector<Rat> target(m, Rat(0));
        target[i] = 1;
        auto sol = q_solve(pairing, target);
        if (!sol) throw input_error("degenerate coroot pairing matrix");
        Int denlcm(1);
        for (const auto& v : *sol) {
            Int d = v.get_den();
            denlcm = denlcm / gcd(denlcm, d) * d;
        }
        std::vector<Int> ray(g.rank);
        Int g0(0);
        for (int k = 0; k < g.rank; ++k) {
            Rat scaled = (*sol)[k] * Rat(denlcm);
            ray[k] = scaled.get_num();
            g0 = gcd(g0, ray[k]);
        }
        if (g0 > 1)
            for (auto& v : ray) v /= g0;
        bound += weight_height(g, ray);
        rays.push_back(ray);
    }
    // Enumerate dominant lattice weights with height <= bound via their pairing
    // vectors a (nonnegative integers summing over the coroots).
    std::vector<std::vector<Int>> found;
    std::vector<Int> a(m, Int(0));
    long visited = 0;
    while (true) {
        Int total(0);
        for (const auto& v : a) total += v;
        if (total <= bound && total > 0) {
            if (++visited > budget) throw budget_error("dominant weight enumeration budget");
            std::vector<Rat> rhs(m);
            for (size_t j = 0; j < m; ++j) rhs[j] = Rat(a[j]);
            auto sol = q_solve(pairing, rhs);
            if (sol) {
                bool integral = true;
                for (const auto& v : *sol)
                    if (v.get_den() != 1) integral = false;
                if (integral) {
                    std::vector<Int> w(g.rank);
                    for (int k = 0; k < g.rank; ++k) w[k] = (*sol)[k].get_num();
                    found.push_back(w);
                }
            }
        }
        size_t idx = 0;
        while (idx < m && a[idx] == bound) {
            a[idx] = 0;
            ++idx;
        }
        if (idx == m) break;
        a[idx] += 1;
    }
    std::sort(found.begin(), found.end(), [&](const auto& x, const auto& y) {
        Int hx = weight_height(g, x), hy = weight_height(g, y);
        if (hx != hy) return hx < hy;
        return x < y;
    });
    std::set<std::vector<Int>> pool(found.begin(), found.end());
    std::vector<std::vector<Int>> generators;
    for (const auto& w : found) {
        bool reducible = false;
        for (const auto& y : found) {
            if (weight_height(g, y) >= weight_height(g, w)) break;
            std::vector<Int> diff(g.rank);
            for (int i = 0; i < g.rank; ++i) diff[i] = w[i] - y[i];
            bool zero = std::all_of(diff.begin(), diff.end(), [](const Int& v) { return v == 0; });
            if (!zero && pool.count(diff)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) generators.push_back(w);
    }
    return generators;
}

IdealPresentation saturated_torus_presentation(int rank) {
    IdealPresentation torus;
    for (int i = 1; i <= rank; ++i) torus.var_names.push_back("t" + std::to_string(i));
    for (int i = 1; i <= rank; ++i) torus.var_names.push_back("tinv" + std::to_string(i));
    torus.degrees.assign(2 * rank, 1);
    torus.order = MonomialOrder::make_grevlex(2 * rank);
    for (int i = 0; i < rank; ++i) torus.sat_pairs.push_back({i, rank + i});
    torus.add_saturation_relations();
    return torus;
}

}  // namespace

RepRingPresentation representation_ring(const CompactGroup& g, long budget) {
    RepRingPresentation r;
    r.torus_rank = g.rank;
    r.torus_pres = saturated_torus_presentation(g.rank);

    bool quotient_path = !g.simple_roots.empty() && g.fundamental_weights.empty();
    std::vector<std::vector<Int>> poly_weights;
    if (quotient_path) {
        poly_weights = dominant_monoid_generators(g, budget);
    } else {
        poly_weights = g.fundamental_weights;
    }

    std::vector<Character> chars;
    for (const auto& w : poly_weights) {
        if (quotient_path) {
            chars.push_back(Character{orbit_sum(g, w, budget), w});
        } else {
            chars.push_back(irreducible_character(g, w, budget));
        }
    }
    // Unit characters along the Weyl-fixed directions.
    ZMatrix fixed = weyl_fixed_sublattice(g);
    size_t n_units = fixed.empty() ? 0 : fixed[0].size();
    if (quotient_path && n_units > 0)
        throw uncovered_error(
            "central quotients mixing torus directions are not supported; encode the group "
            "directly");
    std::vector<std::pair<Character, Character>> units;
    for (size_t j = 0; j < n_units; ++j) {
        std::vector<Int> lam(g.rank), neg(g.rank);
        for (int i = 0; i < g.rank; ++i) {
            lam[i] = fixed[i][j];
            neg[i] = -fixed[i][j];
        }
        ExactPoly pl(g.rank), pn(g.rank);
        pl.add_term(weight_to_monomial(lam), Rat(1));
        pn.add_term(weight_to_monomial(neg), Rat(1));
        units.push_back({Character{pl, lam}, Character{pn, neg}});
    }

    // Minimalize quotient generators by membership in the subring of the others.
    if (quotient_path && chars.size() > 1 && chars.size() <= 8) {
        for (size_t drop = chars.size(); drop-- > 0;) {
            if (chars.size() == 1) break;
            std::vector<ExactPoly> images;
            std::vector<std::string> tags;
            for (size_t i = 0; i < chars.size(); ++i) {
                if (i == drop) continue;
                images.push_back(laurent_to_saturated(chars[i].poly));
                tags.push_back("g" + std::to_string(i + 1));
            }
            RingMapImage probe = ring_map_image(r.torus_pres, images, tags, budget);
            if (probe.membership(laurent_to_saturated(chars[drop].poly)))
                chars.erase(chars.begin() + (long)drop);
        }
    }

    std::vector<ExactPoly> images;
    for (size_t i = 0; i < chars.size(); ++i) {
        r.gen_names.push_back("x" + std::to_string(i + 1));
        r.gen_chars.push_back(chars[i]);
        images.push_back(laurent_to_saturated(chars[i].poly));
    }
    for (size_t j = 0; j < units.size(); ++j) {
        std::string base = "x" + std::to_string(chars.size() + j + 1);
        int idx = (int)r.gen_names.size();
        r.gen_names.push_back(base);
        r.gen_chars.push_back(units[j].first);
        images.push_back(laurent_to_saturated(units[j].first.poly));
        r.gen_names.push_back(base + "inv");
        r.gen_chars.push_back(units[j].second);
        images.push_back(laurent_to_saturated(units[j].second.poly));
        r.unit_pairs.push_back({idx, idx + 1});
    }

    r.expression = ring_map_image(r.torus_pres, images, r.gen_names, budget);
    r.relations = r.expression.image_pres;
    return r;
}

std::optional<ExactPoly> express_in_generators(const RepRingPresentation& ring,
                                               const ExactPoly& laurent) {
    if (laurent.nvars != ring.torus_rank)
        throw input_error("variable count does not match the torus rank");
    return ring.expression.membership(laurent_to_saturated(laurent));
}

RestrictionMap restriction_map(const GroupPair& pair, const RepRingPresentation& ambient,
                               const RepRingPresentation& subgroup, long budget) {
    (void)budget;
    RestrictionMap out;
    std::set<Int> primes;
    for (size_t i = 0; i < ambient.gen_chars.size(); ++i) {
        ExactPoly restricted = ambient.gen_chars[i].poly.apply_lattice_map(pair.restriction);
        if (!is_weyl_invariant(pair.subgroup, restricted))
            throw input_error("restriction of generator '" + ambient.gen_names[i] +
                              "' is not invariant under the subgroup Weyl group");
        auto expr = express_in_generators(subgroup, restricted);
        if (!expr)
            throw std::logic_error("restricted character not expressible in subgroup generators");
        collect_denominator_primes(*expr, primes);
        out.images.push_back(std::move(*expr));
    }
    out.inverted_primes.assign(primes.begin(), primes.end());
    return out;
}

SurjectivityReport is_restriction_surjective(const GroupPair& pair,
                                             const RepRingPresentation& ambient,
                                             const RepRingPresentation& subgroup, long budget) {
    SurjectivityReport report;
    std::vector<ExactPoly> images;
    for (const auto& ch : ambient.gen_chars) {
        ExactPoly restricted = ch.poly.apply_lattice_map(pair.restriction);
        if (!is_weyl_invariant(pair.subgroup, restricted))
            throw input_error("restricted ambient generator is not subgroup-invariant");
        images.push_back(laurent_to_saturated(restricted));
    }
    RingMapImage machinery =
        ring_map_image(subgroup.torus_pres, images, ambient.gen_names, budget);
    std::set<Int> primes;
    for (size_t i = 0; i < subgroup.gen_chars.size(); ++i) {
        auto pre = machinery.membership(laurent_to_saturated(subgroup.gen_chars[i].poly));
        if (!pre) {
            report.surjective = false;
            report.failing_generator = subgroup.gen_names[i];
            report.preimages.clear();
            return report;
        }
        collect_denominator_primes(*pre, primes);
        report.preimages.push_back(std::move(*pre));
    }
    report.surjective = true;
    report.inverted_primes.assign(primes.begin(), primes.end());
    return report;
}

}  // namespace isoring
