#include "isoring/cohomology.hpp"

#include <algorithm>
#include <set>

namespace isoring {

namespace {

IdealPresentation free_presentation(const std::vector<std::string>& names,
                                    const std::vector<int>& degrees) {
    IdealPresentation pres;
    pres.var_names = names;
    pres.degrees.assign(degrees.begin(), degrees.end());
    pres.order = MonomialOrder::make_grevlex(static_cast<int>(names.size()));
    return pres;
}

// Inject an m-variable polynomial into a 2m-variable ring at the given offset.
ExactPoly inject(const ExactPoly& p, int total, int offset) {
    ZMatrix map(total, std::vector<Int>(p.nvars, 0));
    for (int i = 0; i < p.nvars; ++i) map[offset + i][i] = 1;
    return p.apply_lattice_map(map);
}

QMatrix q_transpose(const QMatrix& a) {
    if (a.empty()) return {};
    QMatrix out(a[0].size(), std::vector<Rat>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) out[j][i] = a[i][j];
    return out;
}

std::vector<Rat> q_apply(const QMatrix& a, const std::vector<Rat>& v) {
    std::vector<Rat> out(a.size(), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < v.size(); ++k) out[i] += a[i][k] * v[k];
    return out;
}

bool is_zero_vector(const std::vector<Rat>& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

// Unique right inverse direction: P with R * P = identity (R has full row
// rank for every validated pair).
QMatrix right_inverse(const QMatrix& r) {
    QMatrix rt = q_transpose(r);
    auto gram = q_inverse(q_mul(r, rt));
    if (!gram) throw input_error("restriction matrix does not have full row rank");
    return q_mul(rt, *gram);
}

// Weyl generators are stored as matrices on the character lattice; polynomial
// functions on the Cartan algebra pull back through the transpose (the
// coefficient vector of a linear form is a weight).
FiniteMatrixGroup weyl_matrix_group(const CompactGroup& g, long budget) {
    std::vector<QMatrix> gens;
    for (const auto& w : g.weyl_generators) gens.push_back(q_transpose(z_to_q(w)));
    return close_matrix_group(g.rank, gens, budget);
}

long power_of_two(int s) { return 1L << s; }

// Linear part of a generator expression: the coefficient of each single-tag
// monomial (the induced map on indecomposables; decomposable terms drop).
std::vector<Rat> linear_row(const ExactPoly& expr, int n_tags) {
    std::vector<Rat> row(n_tags, Rat(0));
    for (const auto& [m, c] : expr.terms) {
        int total = 0, last = -1;
        bool single = true;
        for (int k = 0; k < n_tags; ++k) {
            if (m[k] < 0) single = false;
            total += m[k];
            if (m[k] > 0) last = k;
        }
        if (single && total == 1) row[last] = c;
    }
    return row;
}

IdealPresentation weight_coordinates(int m) {
    IdealPresentation coords;
    for (int i = 0; i < m; ++i) coords.var_names.push_back("y" + std::to_string(i + 1));
    coords.degrees.assign(m, 1);
    coords.order = MonomialOrder::make_grevlex(m);
    return coords;
}

NormalizerData normalizer_impl(const GroupPair& pair, const BorelData& sub, long budget) {
    NormalizerData out;
    int m = pair.subgroup.rank;
    if (pair.n_override) {
        // Override generators act on the weight space; store the pullback
        // (transposed) matrices so downstream invariant theory applies them
        // to polynomials directly.
        std::vector<QMatrix> gens;
        for (const auto& g : *pair.n_override) gens.push_back(q_transpose(g));
        out.group = close_matrix_group(m, gens, budget);
        out.source = "descriptor-override";
        return out;
    }

    QMatrix r = z_to_q(pair.restriction);
    QMatrix p = right_inverse(r);
    std::vector<std::vector<Rat>> kernel = q_nullspace(r);
    RingMapImage machine =
        ring_map_image(weight_coordinates(m), sub.invariant_polys, sub.gen_names, budget);

    std::vector<QMatrix> induced;
    for (const auto& wz : weyl_elements(pair.ambient, budget)) {
        QMatrix w = z_to_q(wz);
        bool preserves = true;
        for (const auto& v : kernel)
            if (!is_zero_vector(q_apply(r, q_apply(w, v)))) {
                preserves = false;
                break;
            }
        if (!preserves) continue;
        QMatrix a = q_mul(q_mul(r, w), p);
        if (q_mul(a, r) != q_mul(r, w))
            throw std::logic_error("induced normalizer matrix fails the intertwining check");
        // Transport through the invariant generators: the action on the
        // indecomposables of the subgroup's Borel ring. The induced matrix
        // lives on the character lattice, so polynomials pull back through
        // its transpose.
        QMatrix action(m, std::vector<Rat>(m, Rat(0)));
        bool normalizes = true;
        for (int j = 0; j < m && normalizes; ++j) {
            ExactPoly moved = matrix_group_apply(q_transpose(a), sub.invariant_polys[j]);
            auto expr = machine.membership(moved);
            if (!expr) {
                normalizes = false;  // w does not normalize the subgroup's Weyl image
                break;
            }
            action[j] = linear_row(*expr, m);
        }
        if (!normalizes) continue;
        if (std::find(induced.begin(), induced.end(), action) == induced.end())
            induced.push_back(action);
    }
    out.group.degree = m;
    out.group.elements = std::move(induced);
    validate_matrix_group(out.group);
    out.source = "weyl-stabilizer";
    return out;
}

FormalityCheckReport check_impl(const CohomRestriction& res, long budget) {
    FormalityCheckReport out;
    int m = static_cast<int>(res.subgroup.gen_names.size());
    IdealPresentation base = free_presentation(res.subgroup.gen_names, res.subgroup.degrees);
    PresentedRing free_ring = PresentedRing::make(base, budget);

    IdealPresentation full = base;
    for (const auto& img : res.images)
        if (!img.terms.empty()) full.gens.push_back(img);
    out.quotient = PresentedRing::make(std::move(full), budget);
    out.quotient_dimension = vector_space_dimension(out.quotient);

    int target = m - krull_dimension(out.quotient);
    std::vector<ExactPoly> sequence;
    for (std::size_t i = 0; i < res.images.size(); ++i) {
        if (static_cast<int>(sequence.size()) == target) break;
        if (res.images[i].terms.empty()) continue;
        std::vector<ExactPoly> candidate = sequence;
        candidate.push_back(res.images[i]);
        if (is_regular_sequence(free_ring, candidate).regular) {
            sequence = std::move(candidate);
            out.picked.push_back(static_cast<int>(i));
        }
    }
    if (static_cast<int>(sequence.size()) != target) {
        out.reason = "no regular sequence of length " + std::to_string(target) +
                     " found among the restricted generators";
        return out;
    }
    out.regular = true;
    IdealPresentation picked_pres = base;
    picked_pres.gens = sequence;
    PresentedRing picked_ring = PresentedRing::make(std::move(picked_pres), budget);
    out.generates = hilbert_series(picked_ring).equals(hilbert_series(out.quotient));
    if (out.generates) {
        out.ci = true;
    } else {
        out.reason =
            "the certified regular sequence does not generate the full restriction ideal";
    }
    return out;
}

FormalityReport battery_impl(const GroupPair& pair, const CohomRestriction& res,
                             const FormalityCheckReport& fc, const NormalizerData& nd,
                             long budget) {
    FormalityReport rep;
    rep.rank_difference = pair.ambient.rank - pair.subgroup.rank;
    rep.normalizer_order = nd.group.order();
    rep.normalizer_source = nd.source;
    rep.ci_flag = fc.ci;

    // Dimension formula: dim H*(G/K) computed from the formal quotient.
    if (fc.quotient_dimension) {
        rep.total_dimension = *fc.quotient_dimension * power_of_two(rep.rank_difference);
        bool ok = *fc.quotient_dimension == rep.normalizer_order;
        rep.dimension_formula.verdict = ok;
        rep.dimension_formula.certificate =
            "total dimension " + std::to_string(*rep.total_dimension) + " vs |N| * 2^s = " +
            std::to_string(rep.normalizer_order) + " * " +
            std::to_string(power_of_two(rep.rank_difference));
    } else {
        rep.dimension_formula.certificate = "quotient dimension is not finite";
    }

    // Complete intersection + surjection onto the N-invariants.
    InvariantBasis n_invariants =
        invariant_generators(nd.group, static_cast<int>(nd.group.order()));
    int m = static_cast<int>(res.subgroup.gen_names.size());
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < res.images.size(); ++i)
        labels.push_back("g" + std::to_string(i + 1));
    RingMapImage image_machine =
        ring_map_image(free_presentation(res.subgroup.gen_names, std::vector<int>(m, 1)),
                       res.images, labels, budget);
    bool surjective = true;
    std::string missing;
    for (const auto& f : n_invariants.generators)
        if (!image_machine.membership(f)) {
            surjective = false;
            missing = poly_to_string(f, res.subgroup.gen_names);
            break;
        }
    if (!surjective) {
        rep.quotient_and_image.verdict = false;
        rep.quotient_and_image.certificate =
            "normalizer invariant " + missing + " has no preimage";
    } else if (fc.ci) {
        rep.quotient_and_image.verdict = true;
        rep.quotient_and_image.certificate =
            "regular sequence of length " + std::to_string(fc.picked.size()) +
            " generates the restriction ideal; all normalizer invariants have preimages";
    } else {
        rep.quotient_and_image.certificate = fc.reason;
    }

    // Pseudoreflection conditions on the indecomposables and, for torus
    // subgroups, on the tangent space (the same induced matrices).
    ReflectionReport refl = is_pseudoreflection_group(nd.group, budget);
    rep.indecomposable_action.verdict = refl.is_reflection_group;
    rep.indecomposable_action.certificate =
        std::to_string(refl.reflections.size()) + " pseudoreflections in a group of order " +
        std::to_string(nd.group.order());
    if (pair.subgroup.is_torus()) {
        bool tangent = refl.is_reflection_group && surjective;
        rep.tangent_action.verdict = tangent;
        rep.tangent_action.certificate =
            "tangent action is the character-space action; reflection verdict " +
            std::string(refl.is_reflection_group ? "true" : "false") +
            ", invariant surjection " + std::string(surjective ? "true" : "false");
    } else {
        rep.tangent_action.certificate =
            "tangent-space condition is expressed through the indecomposables for "
            "non-torus subgroups";
    }

    std::vector<bool> decided;
    for (const StCondition* c : {&rep.dimension_formula, &rep.quotient_and_image,
                                 &rep.indecomposable_action, &rep.tangent_action})
        if (c->verdict) decided.push_back(*c->verdict);
    for (std::size_t i = 1; i < decided.size(); ++i)
        if (decided[i] != decided[0])
            throw std::logic_error("equivalent formality conditions disagree");
    if (!decided.empty()) rep.isotropy_formal = decided[0];
    return rep;
}

CohomRestriction restriction_impl(const GroupPair& pair, long budget) {
    PairValidation val = validate_pair(pair);
    if (!val.valid) throw input_error("invalid pair: " + val.failure);

    CohomRestriction out;
    out.ambient = borel_cohomology(pair.ambient, budget);
    out.subgroup = borel_cohomology(pair.subgroup, budget);
    out.ambient_degrees = out.ambient.degrees;

    int na = pair.ambient.rank, ns = pair.subgroup.rank;
    std::vector<ExactPoly> subst;
    for (int i = 0; i < na; ++i) {
        ExactPoly form(ns);
        for (int j = 0; j < ns; ++j) {
            if (pair.restriction[j][i] == 0) continue;
            Monomial mono(ns, 0);
            mono[j] = 1;
            form.add_term(mono, Rat(pair.restriction[j][i]));
        }
        subst.push_back(form);
    }

    RingMapImage machine = ring_map_image(weight_coordinates(ns), out.subgroup.invariant_polys,
                                          out.subgroup.gen_names, budget);

    for (const auto& f : out.ambient.invariant_polys) {
        ExactPoly restricted = f.substitute(subst);
        for (const auto& wz : pair.subgroup.weyl_generators)
            if (matrix_group_apply(q_transpose(z_to_q(wz)), restricted) != restricted)
                throw input_error(
                    "restricted invariant is not invariant under the subgroup Weyl group");
        auto expr = machine.membership(restricted);
        if (!expr)
            throw std::logic_error(
                "restricted invariant is not expressible in the subgroup generators");
        out.images.push_back(std::move(*expr));
    }
    return out;
}

}  // namespace

BorelData borel_cohomology(const CompactGroup& g, long budget) {
    FiniteMatrixGroup weyl = weyl_matrix_group(g, budget);
    long order = weyl.order();

    InvariantBasis inv;
    bool certified = false;
    for (int bound = 2;; bound += 2) {
        bool last = bound >= order;
        inv = invariant_generators(weyl, last ? static_cast<int>(order) : bound);
        if (static_cast<int>(inv.generators.size()) == g.rank &&
            parameter_degree_test(inv.degrees, order)) {
            PresentedRing free_ring = PresentedRing::make(weight_coordinates(g.rank), budget);
            if (is_regular_sequence(free_ring, inv.generators).regular) {
                certified = true;
                break;
            }
        }
        if (last) break;
    }
    if (!certified && !inv.complete)
        throw budget_error("could not certify a complete set of Weyl invariants");
    if (static_cast<int>(inv.generators.size()) != g.rank)
        throw std::logic_error("Weyl invariant ring is not free on rank-many generators");

    BorelData out;
    out.weyl_order = order;
    out.invariant_polys = inv.generators;
    out.degrees = inv.degrees;
    std::string stem = g.is_torus() ? "u" : "p";
    for (int i = 0; i < g.rank; ++i) out.gen_names.push_back(stem + std::to_string(i + 1));
    for (int d : inv.degrees) {
        out.cohomological_degrees.push_back(2 * d);
        out.primitive_degrees.push_back(2 * d - 1);
    }
    out.ring = PresentedRing::make(
        free_presentation(out.gen_names, out.cohomological_degrees), budget);
    return out;
}

NormalizerData normalizer_action(const GroupPair& pair, long budget) {
    if (!pair.subgroup.is_torus())
        throw input_error("the tangent-space normalizer action requires a torus subgroup");
    PairValidation val = validate_pair(pair);
    if (!val.valid) throw input_error("invalid pair: " + val.failure);
    BorelData sub = borel_cohomology(pair.subgroup, budget);
    return normalizer_impl(pair, sub, budget);
}

CohomRestriction restriction_cohomology(const GroupPair& pair, long budget) {
    return restriction_impl(pair, budget);
}

FormalityCheckReport formality_check(const GroupPair& pair, long budget) {
    return check_impl(restriction_impl(pair, budget), budget);
}

FormalityReport st_battery(const GroupPair& pair, long budget) {
    CohomRestriction res = restriction_impl(pair, budget);
    FormalityCheckReport fc = check_impl(res, budget);
    NormalizerData nd = normalizer_impl(pair, res.subgroup, budget);
    return battery_impl(pair, res, fc, nd, budget);
}

EquivariantCohomology equivariant_cohomology(const GroupPair& pair, long budget) {
    CohomRestriction res = restriction_impl(pair, budget);
    FormalityCheckReport fc = check_impl(res, budget);
    NormalizerData nd = normalizer_impl(pair, res.subgroup, budget);
    FormalityReport battery = battery_impl(pair, res, fc, nd, budget);
    if (!battery.isotropy_formal || !*battery.isotropy_formal)
        throw uncovered_error(
            "equivariant cohomology is assembled only for certified isotropy-formal pairs" +
            std::string(fc.reason.empty() ? "" : ": " + fc.reason));

    EquivariantCohomology out;
    int m = static_cast<int>(res.subgroup.gen_names.size());
    out.first_names = res.subgroup.gen_names;
    for (const auto& n : res.subgroup.gen_names) out.second_names.push_back(n + "p");

    IdealPresentation pres;
    pres.var_names = out.first_names;
    pres.var_names.insert(pres.var_names.end(), out.second_names.begin(),
                          out.second_names.end());
    pres.degrees.assign(res.subgroup.cohomological_degrees.begin(),
                        res.subgroup.cohomological_degrees.end());
    pres.degrees.insert(pres.degrees.end(), res.subgroup.cohomological_degrees.begin(),
                        res.subgroup.cohomological_degrees.end());
    pres.order = MonomialOrder::make_grevlex(2 * m);
    for (int idx : fc.picked)
        pres.gens.push_back(inject(res.images[idx], 2 * m, 0) -
                            inject(res.images[idx], 2 * m, m));
    out.ring = PresentedRing::make(std::move(pres), budget);

    out.redundancy_verified = true;
    std::set<int> picked(fc.picked.begin(), fc.picked.end());
    for (std::size_t i = 0; i < res.images.size(); ++i) {
        if (picked.count(static_cast<int>(i))) continue;
        ExactPoly diff =
            inject(res.images[i], 2 * m, 0) - inject(res.images[i], 2 * m, m);
        if (!out.ring.reduce(diff).terms.empty()) out.redundancy_verified = false;
    }

    out.series = hilbert_series(out.ring);
    for (std::size_t i = 0; i < res.ambient.degrees.size(); ++i) {
        if (picked.count(static_cast<int>(i))) continue;
        out.exterior_degrees.push_back(2 * res.ambient.degrees[i] - 1);
        out.series = out.series *
                     PoincareSeries::polynomial(
                         UniPoly::one_plus_power(2 * res.ambient.degrees[i] - 1));
    }
    out.series = out.series.canonical();
    return out;
}

}  // namespace isoring
