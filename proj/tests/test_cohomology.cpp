#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "isoring/cohomology.hpp"
#include "isoring/ktheory.hpp"

using namespace isoring;

namespace {

ExactPoly var(int nvars, int index) {
    Monomial m(nvars, 0);
    m[index] = 1;
    return ExactPoly::monomial(m, Rat(1));
}

ExactPoly power(int nvars, int index, int e) {
    Monomial m(nvars, 0);
    m[index] = e;
    return ExactPoly::monomial(m, Rat(1));
}

// Pullback of polynomials on the Cartan algebra along a character-lattice map.
QMatrix pullback(const ZMatrix& w) {
    QMatrix q = z_to_q(w);
    QMatrix out(q[0].size(), std::vector<Rat>(q.size()));
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < q[0].size(); ++j) out[j][i] = q[i][j];
    return out;
}

GroupPair su4_sp2() {
    GroupPair pair;
    pair.ambient = make_su(4);
    pair.subgroup = make_sp(2);
    pair.restriction = {{Int(1), Int(0), Int(-1)}, {Int(0), Int(1), Int(0)}};
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

GroupPair so3_so2() {
    GroupPair pair;
    pair.ambient = make_so(3);
    pair.subgroup = make_named("SO(2)");
    pair.restriction = {{Int(1)}};
    return pair;
}

GroupPair su4_circle() {
    GroupPair pair;
    pair.ambient = make_su(4);
    pair.subgroup = make_torus(1);
    pair.restriction = {{Int(1), Int(-1), Int(2)}};
    return pair;
}

GroupPair product_diag_circle() {
    GroupPair pair;
    pair.ambient = make_product(make_sp(1), make_sp(1));
    pair.subgroup = make_torus(1);
    pair.restriction = {{Int(1), Int(1)}};
    return pair;
}

GroupPair u2_diag_circle() {
    GroupPair pair;
    pair.ambient = make_u(2);
    pair.subgroup = make_torus(1);
    pair.restriction = {{Int(1), Int(1)}};
    return pair;
}

GroupPair identity_pair() {
    GroupPair pair;
    pair.ambient = make_su(2);
    pair.subgroup = make_su(2);
    pair.restriction = {{Int(1)}};
    return pair;
}

// A deliberately wrong normalizer override: the rotation subgroup generated
// by the product of the two Weyl reflections of SU(3) (order three, no
// pseudoreflections). Every battery condition must fail against it.
GroupPair su3_torus_rotation_override() {
    GroupPair pair = su3_torus();
    QMatrix rot = q_mul(z_to_q(pair.ambient.weyl_generators[0]),
                        z_to_q(pair.ambient.weyl_generators[1]));
    pair.n_override = std::vector<QMatrix>{rot};
    return pair;
}

void check_borel(const CompactGroup& g, const std::vector<int>& degrees, long weyl_order) {
    BorelData bd = borel_cohomology(g);
    CHECK(bd.degrees == degrees);
    CHECK(bd.weyl_order == weyl_order);
    long prod = 1;
    for (std::size_t i = 0; i < bd.degrees.size(); ++i) {
        prod *= bd.degrees[i];
        CHECK(bd.cohomological_degrees[i] == 2 * bd.degrees[i]);
        CHECK(bd.primitive_degrees[i] == 2 * bd.degrees[i] - 1);
        CHECK(!bd.invariant_polys[i].terms.empty());
        // Each generator really is invariant under the generating reflections.
        for (const auto& w : g.weyl_generators)
            CHECK(matrix_group_apply(pullback(w), bd.invariant_polys[i]) ==
                  bd.invariant_polys[i]);
    }
    CHECK(prod == weyl_order);
    CHECK(static_cast<int>(bd.gen_names.size()) == g.rank);
    CHECK(hilbert_series(bd.ring).equals(PoincareSeries::free_ring(bd.cohomological_degrees)));
}

}  // namespace

TEST_CASE("classifying-space cohomology has the classical invariant degrees") {
    check_borel(make_su(2), {2}, 2);
    check_borel(make_su(3), {2, 3}, 6);
    check_borel(make_su(4), {2, 3, 4}, 24);
    check_borel(make_sp(2), {2, 4}, 8);
    check_borel(make_so(3), {2}, 2);
    check_borel(make_u(2), {1, 2}, 2);
    check_borel(make_product(make_sp(1), make_sp(1)), {2, 2}, 4);
    check_borel(make_torus(2), {1, 1}, 1);

    BorelData torus = borel_cohomology(make_torus(2));
    CHECK(torus.gen_names == std::vector<std::string>{"u1", "u2"});
    CHECK(torus.invariant_polys[0] == var(2, 0));
    CHECK(torus.invariant_polys[1] == var(2, 1));

    BorelData su2 = borel_cohomology(make_su(2));
    CHECK(su2.gen_names == std::vector<std::string>{"p1"});
    CHECK(su2.invariant_polys[0] == power(1, 0, 2));
}

TEST_CASE("normalizer component groups and their sources") {
    NormalizerData full_flag = normalizer_action(su2_torus());
    CHECK(full_flag.group.order() == 2);
    CHECK(full_flag.source == "weyl-stabilizer");
    QMatrix minus_one{{Rat(-1)}};
    CHECK(std::find(full_flag.group.elements.begin(), full_flag.group.elements.end(),
                    minus_one) != full_flag.group.elements.end());

    CHECK(normalizer_action(so3_so2()).group.order() == 2);
    CHECK(normalizer_action(su3_torus()).group.order() == 6);
    CHECK(normalizer_action(su4_circle()).group.order() == 2);
    CHECK(normalizer_action(product_diag_circle()).group.order() == 2);
    CHECK(normalizer_action(u2_diag_circle()).group.order() == 1);

    GroupPair overridden = su2_torus();
    overridden.n_override = std::vector<QMatrix>{QMatrix{{Rat(-1)}}};
    NormalizerData nd = normalizer_action(overridden);
    CHECK(nd.group.order() == 2);
    CHECK(nd.source == "descriptor-override");

    NormalizerData rotated = normalizer_action(su3_torus_rotation_override());
    CHECK(rotated.group.order() == 3);
    CHECK(rotated.source == "descriptor-override");

    CHECK_THROWS_AS(normalizer_action(su4_sp2()), input_error);
}

TEST_CASE("restriction to the subgroup classifying space") {
    CohomRestriction flag = restriction_cohomology(su2_torus());
    REQUIRE(flag.images.size() == 1);
    CHECK(flag.images[0] == power(1, 0, 2));
    CHECK(flag.ambient_degrees == std::vector<int>{2});

    CohomRestriction self = restriction_cohomology(identity_pair());
    REQUIRE(self.images.size() == 1);
    CHECK(self.images[0] == var(1, 0));

    CohomRestriction symp = restriction_cohomology(su4_sp2());
    REQUIRE(symp.images.size() == 3);
    CHECK(symp.ambient_degrees == std::vector<int>{2, 3, 4});
    CHECK(!symp.images[0].terms.empty());
    CHECK(symp.images[1].terms.empty());  // the degree-three generator dies
    CHECK(!symp.images[2].terms.empty());

    CohomRestriction circle = restriction_cohomology(su4_circle());
    REQUIRE(circle.images.size() == 3);
    CHECK(circle.images[1].terms.empty());
    REQUIRE(circle.images[0].terms.size() == 1);
    CHECK(circle.images[0].terms.begin()->first == Monomial{2});

    // Nonzero images are homogeneous of the ambient degree for the
    // weighting by the subgroup's invariant degrees.
    for (const GroupPair& pair :
         {su2_torus(), su3_torus(), su4_sp2(), su4_circle(), u2_diag_circle()}) {
        CohomRestriction res = restriction_cohomology(pair);
        for (std::size_t i = 0; i < res.images.size(); ++i)
            for (const auto& [m, c] : res.images[i].terms) {
                int weighted = 0;
                for (std::size_t k = 0; k < m.size(); ++k)
                    weighted += m[k] * res.subgroup.degrees[k];
                CHECK(weighted == res.ambient_degrees[i]);
            }
    }
}

TEST_CASE("formality check certifies complete intersections") {
    FormalityCheckReport flag = formality_check(su2_torus());
    CHECK(flag.ci == true);
    CHECK(flag.regular);
    CHECK(flag.generates);
    CHECK(flag.picked == std::vector<int>{0});
    CHECK(flag.quotient_dimension == 2);

    FormalityCheckReport full = formality_check(su3_torus());
    CHECK(full.ci == true);
    CHECK(full.picked == std::vector<int>{0, 1});
    CHECK(full.quotient_dimension == 6);

    FormalityCheckReport symp = formality_check(su4_sp2());
    CHECK(symp.ci == true);
    CHECK(symp.picked == std::vector<int>{0, 2});
    CHECK(symp.quotient_dimension == 1);

    FormalityCheckReport circle = formality_check(su4_circle());
    CHECK(circle.ci == true);
    CHECK(circle.picked == std::vector<int>{0});
    CHECK(circle.quotient_dimension == 2);

    CHECK(formality_check(identity_pair()).quotient_dimension == 1);
    CHECK(formality_check(so3_so2()).quotient_dimension == 2);
    CHECK(formality_check(product_diag_circle()).quotient_dimension == 2);
    CHECK(formality_check(u2_diag_circle()).quotient_dimension == 1);
}

TEST_CASE("formality battery: equivalent conditions agree and certify") {
    struct Expected {
        GroupPair pair;
        long normalizer_order;
        long total_dimension;
        int rank_difference;
    };
    std::vector<Expected> table = {
        {su2_torus(), 2, 2, 0},          {su3_torus(), 6, 6, 0},
        {so3_so2(), 2, 2, 0},            {su4_circle(), 2, 8, 2},
        {product_diag_circle(), 2, 4, 1}, {u2_diag_circle(), 1, 2, 1},
    };
    for (const auto& row : table) {
        CAPTURE(row.pair.ambient.label);
        FormalityReport rep = st_battery(row.pair);
        CHECK(rep.normalizer_order == row.normalizer_order);
        CHECK(rep.total_dimension == row.total_dimension);
        CHECK(rep.rank_difference == row.rank_difference);
        CHECK(rep.isotropy_formal == true);
        CHECK(rep.ci_flag == true);
        CHECK(rep.dimension_formula.verdict == true);
        CHECK(rep.quotient_and_image.verdict == true);
        CHECK(rep.indecomposable_action.verdict == true);
        CHECK(rep.tangent_action.verdict == true);  // torus subgroups: decided
        CHECK(!rep.dimension_formula.certificate.empty());
        CHECK(rep.normalizer_source == "weyl-stabilizer");
    }

    FormalityReport symp = st_battery(su4_sp2());
    CHECK(symp.normalizer_order == 1);
    CHECK(symp.total_dimension == 2);  // the Poincare sphere dimension of SU(4)/Sp(2)
    CHECK(symp.rank_difference == 1);
    CHECK(symp.isotropy_formal == true);
    CHECK(symp.dimension_formula.verdict == true);
    CHECK(symp.quotient_and_image.verdict == true);
    CHECK(symp.indecomposable_action.verdict == true);
    CHECK(!symp.tangent_action.verdict.has_value());  // undecided for non-torus

    FormalityReport self = st_battery(identity_pair());
    CHECK(self.normalizer_order == 1);
    CHECK(self.total_dimension == 1);
    CHECK(self.isotropy_formal == true);

    // The rotation override breaks every condition in the same direction.
    FormalityReport broken = st_battery(su3_torus_rotation_override());
    CHECK(broken.normalizer_order == 3);
    CHECK(broken.isotropy_formal == false);
    CHECK(broken.dimension_formula.verdict == false);
    CHECK(broken.quotient_and_image.verdict == false);
    CHECK(broken.quotient_and_image.certificate.find("no preimage") != std::string::npos);
    CHECK(broken.indecomposable_action.verdict == false);
    CHECK(broken.tangent_action.verdict == false);
    CHECK(broken.normalizer_source == "descriptor-override");
}

TEST_CASE("equivariant cohomology of the rank-one full flag") {
    EquivariantCohomology eq = equivariant_cohomology(su2_torus());
    CHECK(eq.first_names == std::vector<std::string>{"u1"});
    CHECK(eq.second_names == std::vector<std::string>{"u1p"});
    CHECK(eq.exterior_degrees.empty());
    CHECK(eq.redundancy_verified);
    REQUIRE(eq.ring.pres.gens.size() == 1);
    CHECK(eq.ring.reduce(power(2, 0, 2) - power(2, 1, 2)).terms.empty());

    PoincareSeries expected =
        PoincareSeries::polynomial(UniPoly::one_plus_power(2)) * PoincareSeries::free_ring({2});
    CHECK(eq.series.equals(expected));

    // Independent count: monomials u^a u'^b with the relation u^2 = u'^2
    // rewrite every a >= 2, leaving {a <= 1}; grade with both variables in
    // cohomological degree two.
    std::vector<Rat> coeffs = eq.series.truncate(12);
    REQUIRE(coeffs.size() == 13);
    for (int d = 0; d <= 12; ++d) {
        long count = 0;
        for (int a = 0; a <= 1; ++a)
            for (int b = 0; 2 * (a + b) <= 12; ++b)
                if (2 * (a + b) == d) ++count;
        CHECK(coeffs[d] == Rat(count));
    }
}

TEST_CASE("equivariant cohomology collapses over the group itself") {
    EquivariantCohomology eq = equivariant_cohomology(identity_pair());
    CHECK(eq.exterior_degrees.empty());
    CHECK(eq.redundancy_verified);
    CHECK(eq.ring.reduce(var(2, 0) - var(2, 1)).terms.empty());
    CHECK(eq.series.equals(PoincareSeries::free_ring({4})));
}

TEST_CASE("equivariant cohomology with exterior factors") {
    EquivariantCohomology symp = equivariant_cohomology(su4_sp2());
    CHECK(symp.exterior_degrees == std::vector<int>{5});
    CHECK(symp.redundancy_verified);
    PoincareSeries symp_expected =
        PoincareSeries::polynomial(UniPoly::one_plus_power(5)) *
        PoincareSeries::free_ring({4, 8});
    CHECK(symp.series.equals(symp_expected));

    EquivariantCohomology circle = equivariant_cohomology(su4_circle());
    CHECK(circle.exterior_degrees == std::vector<int>{5, 7});
    CHECK(circle.redundancy_verified);
    PoincareSeries circle_expected =
        PoincareSeries::polynomial(UniPoly::one_plus_power(2)) *
        PoincareSeries::polynomial(UniPoly::one_plus_power(5)) *
        PoincareSeries::polynomial(UniPoly::one_plus_power(7)) *
        PoincareSeries::free_ring({2});
    CHECK(circle.series.equals(circle_expected));

    EquivariantCohomology spheres = equivariant_cohomology(product_diag_circle());
    CHECK(spheres.exterior_degrees == std::vector<int>{3});
    PoincareSeries spheres_expected =
        PoincareSeries::polynomial(UniPoly::one_plus_power(2)) *
        PoincareSeries::polynomial(UniPoly::one_plus_power(3)) *
        PoincareSeries::free_ring({2});
    CHECK(spheres.series.equals(spheres_expected));

    EquivariantCohomology odd_sphere = equivariant_cohomology(u2_diag_circle());
    CHECK(odd_sphere.exterior_degrees == std::vector<int>{3});
    PoincareSeries odd_expected = PoincareSeries::polynomial(UniPoly::one_plus_power(3)) *
                                  PoincareSeries::free_ring({2});
    CHECK(odd_sphere.series.equals(odd_expected));

    CHECK_THROWS_AS(equivariant_cohomology(su3_torus_rotation_override()), uncovered_error);
}

TEST_CASE("cohomology dimensions agree with the K-theory ranks") {
    for (const GroupPair& pair : {su2_torus(), su3_torus(), su4_sp2(), identity_pair(),
                                  product_diag_circle(), u2_diag_circle()}) {
        CAPTURE(pair.ambient.label);
        FormalityReport rep = st_battery(pair);
        KTheoryReport kt = assemble_ktheory(pair);
        REQUIRE(rep.total_dimension.has_value());
        REQUIRE(kt.fiber.has_value());
        CHECK(*rep.total_dimension == *kt.fiber * (1L << kt.exterior_rank));
        CHECK(kt.exterior_rank == rep.rank_difference);
        EquivariantCohomology eq = equivariant_cohomology(pair);
        CHECK(static_cast<int>(eq.exterior_degrees.size()) == rep.rank_difference);
        CHECK(eq.exterior_degrees.size() == kt.odd_names.size());
    }
}
