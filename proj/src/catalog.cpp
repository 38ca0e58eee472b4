#include "isoring/catalog.hpp"

#include <algorithm>
#include <utility>

#include "isoring/cohomology.hpp"
#include "isoring/ktheory.hpp"
#include "isoring/series.hpp"

namespace isoring {

namespace {

GroupPair so3_so2() {
    GroupPair pair;
    pair.ambient = make_so(3);
    pair.subgroup = make_named("SO(2)");
    pair.restriction = {{Int(1)}};
    return pair;
}

GroupPair su2_torus() {
    GroupPair pair;
    pair.ambient = make_su(2);
    pair.subgroup = make_torus(1);
    pair.restriction = {{Int(1)}};
    return pair;
}

GroupPair su3_torus() {
    GroupPair pair;
    pair.ambient = make_su(3);
    pair.subgroup = make_torus(2);
    pair.restriction = {{Int(1), Int(0)}, {Int(0), Int(1)}};
    return pair;
}

GroupPair psu3_torus() {
    GroupPair pair;
    pair.ambient = make_psu(3);
    pair.subgroup = make_torus(2);
    pair.restriction = {{Int(1), Int(0)}, {Int(0), Int(1)}};
    return pair;
}

GroupPair su4_sp2() {
    GroupPair pair;
    pair.ambient = make_su(4);
    pair.subgroup = make_sp(2);
    pair.restriction = {{Int(1), Int(0), Int(-1)}, {Int(0), Int(1), Int(0)}};
    return pair;
}

GroupPair su4_circle() {
    GroupPair pair;
    pair.ambient = make_su(4);
    pair.subgroup = make_torus(1);
    pair.restriction = {{Int(1), Int(-1), Int(2)}};
    return pair;
}

GroupPair identity_pair() {
    GroupPair pair;
    pair.ambient = make_su(2);
    pair.subgroup = make_su(2);
    pair.restriction = {{Int(1)}};
    return pair;
}

void add_check(CatalogRunResult& result, std::string description, bool passed) {
    result.checks.push_back({std::move(description), passed});
}

std::string power_string(const Int& e) {
    if (e == 0) return "1";
    if (e == 1) return "t";
    return "t^" + e.get_str();
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

void run_so3_so2(CatalogRunResult& result, long budget, int window) {
    GroupPair pair = so3_so2();

    HypothesisReport hyp = classify_pair(pair, budget);
    add_check(result,
              "hypothesis ladder refuses the pair on fundamental-group torsion",
              hyp.kind == PairCase::not_covered && contains(hyp.reason, "torsion"));

    Tor0Data t = tor0_presentation(pair, budget);
    add_check(result, "degree-zero tensor fiber has dimension 2 over either augmentation",
              tor0_fiber_dimension(t, 0, budget) == 2 &&
                  tor0_fiber_dimension(t, 1, budget) == 2);

    IotaData iota = iota_map(pair);
    ExactPoly first = ExactPoly::variable(2, 0);   // t (x) 1
    ExactPoly second = ExactPoly::variable(2, 1);  // 1 (x) t
    ExactPoly tee = ExactPoly::variable(1, 0);
    ExactPoly tee_inv = ExactPoly::variable(1, 0, -1);
    bool first_ok = iota.weyl_order.size() == 2 &&
                    (iota_component(iota, 0, first) - tee).is_zero() &&
                    (iota_component(iota, 1, first) - tee).is_zero();
    bool second_ok = iota.weyl_order.size() == 2 &&
                     (iota_component(iota, 0, second) - tee).is_zero() &&
                     (iota_component(iota, 1, second) - tee_inv).is_zero();
    add_check(result, "fixed-point restriction sends t (x) 1 to (t, t)", first_ok);
    add_check(result, "fixed-point restriction sends 1 (x) t to (t, t^-1)", second_ok);

    IotaComparisonReport cmp = iota_image_comparison(pair, window);
    std::string witness = cmp.witness ? "(" + power_string(cmp.witness->first) + ", " +
                                            power_string(cmp.witness->second) + ")"
                                      : "(none)";
    add_check(result,
              "window-" + std::to_string(window) + " comparison finds the fixed-point pair " +
                  witness + " outside the edge-map image, certified by exponent parity",
              !cmp.lambda_covers_iota && cmp.witness &&
                  *cmp.witness == std::make_pair(Int(0), Int(1)) &&
                  contains(cmp.certificate, "parity"));

    FormalityReport battery = st_battery(pair, budget);
    add_check(result,
              "formality battery certifies the pair with component group of order 2 and "
              "total dimension 2",
              battery.isotropy_formal == std::optional<bool>(true) &&
                  battery.normalizer_order == 2 && battery.total_dimension == 2);

    EquivariantCohomology eq = equivariant_cohomology(pair, budget);
    PoincareSeries expected =
        PoincareSeries::polynomial(UniPoly::one_plus_power(2)) * PoincareSeries::free_ring({2});
    add_check(result, "equivariant cohomology series equals (1 + t^2)/(1 - t^2)",
              eq.series.equals(expected) && eq.redundancy_verified);
}

void run_su2_torus(CatalogRunResult& result, long budget, int window) {
    GroupPair pair = su2_torus();

    KTheoryReport rep = assemble_ktheory(pair, budget);
    add_check(result, "maximal-torus pair is classified by the rank-equality certificate",
              rep.hypotheses.kind == PairCase::equal_rank);
    add_check(result, "K-theory is free of rank 2 = |W| over the subgroup ring",
              rep.fiber == 2 && rep.predicted_rank == 2 && rep.exterior_rank == 0);

    OrdinaryKTheoryReport ord = ordinary_ktheory(pair, budget);
    add_check(result, "ordinary K-theory has total rank 2 = Euler characteristic",
              ord.total_rank == 2);

    IotaComparisonReport cmp = iota_image_comparison(pair, window);
    add_check(result,
              "edge map covers the fixed-point image in the window (generic stabilizer "
              "order 2)",
              cmp.lambda_covers_iota && cmp.equator_order == 2);

    FormalityReport battery = st_battery(pair, budget);
    add_check(result,
              "formality battery: all four conditions true, component group of order 2, "
              "total dimension 2",
              battery.isotropy_formal == std::optional<bool>(true) &&
                  battery.normalizer_order == 2 && battery.total_dimension == 2 &&
                  battery.dimension_formula.verdict == std::optional<bool>(true) &&
                  battery.quotient_and_image.verdict == std::optional<bool>(true) &&
                  battery.indecomposable_action.verdict == std::optional<bool>(true) &&
                  battery.tangent_action.verdict == std::optional<bool>(true));

    EquivariantCohomology eq = equivariant_cohomology(pair, budget);
    PoincareSeries expected =
        PoincareSeries::polynomial(UniPoly::one_plus_power(2)) * PoincareSeries::free_ring({2});
    add_check(result, "equivariant cohomology series equals (1 + t^2)/(1 - t^2)",
              eq.series.equals(expected) && eq.exterior_degrees.empty());
}

void run_su3_torus(CatalogRunResult& result, long budget, int /*window*/) {
    GroupPair pair = su3_torus();

    KTheoryReport rep = assemble_ktheory(pair, budget);
    add_check(result, "maximal-torus pair is classified by the rank-equality certificate",
              rep.hypotheses.kind == PairCase::equal_rank);
    add_check(result, "K-theory is free of rank 6 = |W| over the subgroup ring",
              rep.fiber == 6 && rep.predicted_rank == 6 && rep.exterior_rank == 0);

    OrdinaryKTheoryReport ord = ordinary_ktheory(pair, budget);
    add_check(result, "ordinary K-theory has total rank 6 = Euler characteristic",
              ord.total_rank == 6);

    FormalityReport battery = st_battery(pair, budget);
    add_check(result,
              "formality battery: all four conditions true, component group of order 6, "
              "total dimension 6",
              battery.isotropy_formal == std::optional<bool>(true) &&
                  battery.normalizer_order == 6 && battery.total_dimension == 6 &&
                  battery.tangent_action.verdict == std::optional<bool>(true));

    EquivariantCohomology eq = equivariant_cohomology(pair, budget);
    PoincareSeries expected =
        PoincareSeries::polynomial(UniPoly::one_minus_power(4) * UniPoly::one_minus_power(6)) *
        PoincareSeries::free_ring({2, 2, 2, 2});
    add_check(result,
              "equivariant cohomology series equals (1 - t^4)(1 - t^6)/(1 - t^2)^4",
              eq.series.equals(expected) && eq.exterior_degrees.empty());
}

void run_psu3_torus(CatalogRunResult& result, long budget, int /*window*/) {
    GroupPair pair = psu3_torus();

    HypothesisReport hyp = classify_pair(pair, budget);
    add_check(result,
              "hypothesis ladder refuses the pair on fundamental-group torsion "
              "(invariant factor 3)",
              hyp.kind == PairCase::not_covered && contains(hyp.reason, "torsion") &&
                  contains(hyp.pi1_certificate, "invariant factors 3"));

    FormalityReport battery = st_battery(pair, budget);
    add_check(result,
              "rational cohomology is unaffected: battery certifies formality with "
              "component group of order 6 and total dimension 6",
              battery.isotropy_formal == std::optional<bool>(true) &&
                  battery.normalizer_order == 6 && battery.total_dimension == 6);

    EquivariantCohomology eq = equivariant_cohomology(pair, budget);
    PoincareSeries expected =
        PoincareSeries::polynomial(UniPoly::one_minus_power(4) * UniPoly::one_minus_power(6)) *
        PoincareSeries::free_ring({2, 2, 2, 2});
    add_check(result,
              "equivariant cohomology series matches the simply-connected flag variety",
              eq.series.equals(expected));
}

void run_su4_sp2(CatalogRunResult& result, long budget, int /*window*/) {
    GroupPair pair = su4_sp2();

    KTheoryReport rep = assemble_ktheory(pair, budget);
    add_check(result, "restriction of representation rings is surjective",
              rep.hypotheses.kind == PairCase::surjective &&
                  contains(rep.provenance, "surjective"));
    add_check(result,
              "K-theory is the subgroup ring times one exterior generator (sphere of "
              "dimension 5)",
              rep.even_names == std::vector<std::string>{"x1", "x2"} &&
                  rep.odd_names == std::vector<std::string>{"z1"} &&
                  rep.exterior_rank == 1 && rep.fiber == 1 && rep.predicted_rank == 1);

    OrdinaryKTheoryReport ord = ordinary_ktheory(pair, budget);
    add_check(result, "ordinary K-theory has total rank 2 (base fiber 1, one odd class)",
              ord.base_fiber == 1 && ord.total_rank == 2);

    FormalityReport battery = st_battery(pair, budget);
    add_check(result,
              "formality battery certifies the pair (tangent condition undecided for the "
              "non-torus subgroup), total dimension 2",
              battery.isotropy_formal == std::optional<bool>(true) &&
                  battery.normalizer_order == 1 && battery.total_dimension == 2 &&
                  !battery.tangent_action.verdict.has_value());

    EquivariantCohomology eq = equivariant_cohomology(pair, budget);
    PoincareSeries expected = PoincareSeries::polynomial(UniPoly::one_plus_power(5)) *
                              PoincareSeries::free_ring({4, 8});
    add_check(result,
              "equivariant cohomology is free over the subgroup with one degree-5 "
              "exterior class: series (1 + t^5)/((1 - t^4)(1 - t^8))",
              eq.series.equals(expected) &&
                  eq.exterior_degrees == std::vector<int>{5});
}

void run_su4_circle(CatalogRunResult& result, long budget, int /*window*/) {
    GroupPair pair = su4_circle();

    HypothesisReport hyp = classify_pair(pair, budget);
    add_check(result,
              "hypothesis ladder refuses the pair: the restricted ring could not possibly "
              "be free",
              hyp.kind == PairCase::not_covered &&
                  contains(hyp.reason, "could not possibly be free"));

    FormalityReport battery = st_battery(pair, budget);
    add_check(result,
              "formality battery certifies the pair with component group of order 2 and "
              "total dimension 8",
              battery.isotropy_formal == std::optional<bool>(true) &&
                  battery.normalizer_order == 2 && battery.total_dimension == 8);

    EquivariantCohomology eq = equivariant_cohomology(pair, budget);
    PoincareSeries expected = PoincareSeries::polynomial(UniPoly::one_plus_power(2) *
                                                         UniPoly::one_plus_power(5) *
                                                         UniPoly::one_plus_power(7)) *
                              PoincareSeries::free_ring({2});
    add_check(result,
              "equivariant cohomology series equals (1 + t^2)(1 + t^5)(1 + t^7)/(1 - t^2) "
              "with exterior degrees 5 and 7",
              eq.series.equals(expected) &&
                  eq.exterior_degrees == std::vector<int>{5, 7});
}

void run_identity(CatalogRunResult& result, long budget, int /*window*/) {
    GroupPair pair = identity_pair();

    KTheoryReport rep = assemble_ktheory(pair, budget);
    add_check(result, "the identity restriction is surjective with fiber 1",
              rep.hypotheses.kind == PairCase::surjective && rep.fiber == 1 &&
                  rep.exterior_rank == 0);

    EquivariantCohomology eq = equivariant_cohomology(pair, budget);
    add_check(result,
              "equivariant cohomology of the point collapses to the classifying space: "
              "series 1/(1 - t^4)",
              eq.series.equals(PoincareSeries::free_ring({4})));
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = {
        {"SO3-SO2",
         "rotation group of the two-sphere: outside every covered K-theory case, with a "
         "certified fixed-point witness",
         so3_so2()},
        {"SU2-T",
         "complex projective line: maximal torus in the rank-one special unitary group",
         su2_torus()},
        {"SU3-T", "full flag variety of the rank-two special unitary group", su3_torus()},
        {"PSU3-T",
         "flag variety of the adjoint form: fundamental-group torsion refuses K-theory "
         "while rational cohomology survives",
         psu3_torus()},
        {"SU4-Sp2",
         "five-sphere: rank-two symplectic group inside the rank-three special unitary "
         "group",
         su4_sp2()},
        {"SU4-circle",
         "weight (1, -1, 2) circle: the restricted ring is a singular hypersurface, so "
         "freeness is refused",
         su4_circle()},
    };
    return entries;
}

GroupPair catalog_pair(const std::string& name) {
    for (const auto& entry : catalog_entries())
        if (entry.name == name) return entry.pair;
    // Runnable alias kept off the list: a group acting on its own point.
    if (name == "GG") return identity_pair();
    throw input_error("unknown catalog entry '" + name + "'");
}

CatalogRunResult catalog_run(const std::string& name, long budget, int window) {
    CatalogRunResult result;
    result.name = name;
    try {
        if (name == "SO3-SO2")
            run_so3_so2(result, budget, window);
        else if (name == "SU2-T")
            run_su2_torus(result, budget, window);
        else if (name == "SU3-T")
            run_su3_torus(result, budget, window);
        else if (name == "PSU3-T")
            run_psu3_torus(result, budget, window);
        else if (name == "SU4-Sp2")
            run_su4_sp2(result, budget, window);
        else if (name == "SU4-circle")
            run_su4_circle(result, budget, window);
        else if (name == "GG")
            run_identity(result, budget, window);
        else
            throw input_error("unknown catalog entry '" + name + "'");
    } catch (const input_error&) {
        throw;
    } catch (const budget_error&) {
        throw;
    } catch (const std::exception& e) {
        add_check(result, std::string("completed without internal errors: ") + e.what(),
                  false);
    }
    result.passed = !result.checks.empty() &&
                    std::all_of(result.checks.begin(), result.checks.end(),
                                [](const CatalogCheck& c) { return c.passed; });
    return result;
}

}  // namespace isoring
