#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "isoring/ktheory.hpp"

using namespace isoring;

namespace {

ExactPoly laurent(int nvars, const std::vector<std::pair<Monomial, int>>& terms) {
    ExactPoly p(nvars);
    for (const auto& [m, c] : terms) p.add_term(m, Rat(c));
    return p;
}

ExactPoly var(int nvars, int index) {
    Monomial m(nvars, 0);
    m[index] = 1;
    return ExactPoly::monomial(m, Rat(1));
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

// The circle diag(z, z^-1, z^2, z^-2) inside SU(4).
GroupPair su4_circle() {
    GroupPair pair;
    pair.ambient = make_su(4);
    pair.subgroup = make_torus(1);
    pair.restriction = {{Int(1), Int(-1), Int(2)}};
    return pair;
}

// The diagonal circle of the product of two rank-one torus factors.
GroupPair product_diag_circle() {
    GroupPair pair;
    pair.ambient = make_product(make_sp(1), make_sp(1));
    pair.subgroup = make_torus(1);
    pair.restriction = {{Int(1), Int(1)}};
    return pair;
}

GroupPair sp2_circle() {
    GroupPair pair;
    pair.ambient = make_sp(2);
    pair.subgroup = make_torus(1);
    pair.restriction = {{Int(1), Int(0)}};
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

bool has_note(const HypothesisReport& rep, const std::string& needle) {
    for (const auto& n : rep.notes)
        if (n.find(needle) != std::string::npos) return true;
    return false;
}

// Convert a doubled rank-one Laurent polynomial (exponent slots t, u) into
// the four saturated generator variables (x1, x1inv, x1p, x1invp).
ExactPoly doubled_laurent_to_generators(const ExactPoly& p) {
    REQUIRE(p.nvars == 2);
    ExactPoly out(4);
    for (const auto& [m, c] : p.terms) {
        Monomial s(4, 0);
        s[0] = std::max(m[0], 0);
        s[1] = std::max(-m[0], 0);
        s[2] = std::max(m[1], 0);
        s[3] = std::max(-m[1], 0);
        out.add_term(s, c);
    }
    return out;
}

ExactPoly derivative_oracle(const ExactPoly& p, int v) {
    ExactPoly out(p.nvars);
    for (const auto& [m, c] : p.terms) {
        if (m[v] <= 0) continue;
        Monomial n = m;
        n[v] -= 1;
        out.add_term(n, c * Rat(m[v]));
    }
    return out;
}

}  // namespace

TEST_CASE("pair classification walks the certificate ladder in priority order") {
    SUBCASE("surjective restriction is detected first") {
        auto rep = classify_pair(su4_sp2());
        CHECK(rep.kind == PairCase::surjective);
        CHECK(pair_case_name(rep.kind) == "surjective");
        CHECK(rep.pi1_free_abelian);
        CHECK(rep.pi1_certificate.find("free rank 0") != std::string::npos);
        CHECK(rep.inverted_primes.empty());
        CHECK(has_note(rep, "preimage certificates"));
        CHECK(has_note(rep, "spectral collapse"));
    }

    SUBCASE("the identity pair is surjective") {
        auto rep = classify_pair(identity_pair());
        CHECK(rep.kind == PairCase::surjective);
    }

    SUBCASE("circle preimages may need inverted primes") {
        auto rep = classify_pair(u2_diag_circle());
        CHECK(rep.kind == PairCase::surjective);
        REQUIRE(rep.inverted_primes.size() == 1);
        CHECK(rep.inverted_primes[0] == 2);
        CHECK(has_note(rep, "inverting"));
        CHECK(rep.pi1_certificate.find("free rank 1") != std::string::npos);
    }

    SUBCASE("maximal tori fall into the equal-rank case") {
        auto rep = classify_pair(su2_torus());
        CHECK(rep.kind == PairCase::equal_rank);
        CHECK(has_note(rep, "no preimage for x1"));
        CHECK(has_note(rep, "full rank"));
        auto rep3 = classify_pair(su3_torus());
        CHECK(rep3.kind == PairCase::equal_rank);
    }

    SUBCASE("the declared fixed-point flag is honored after the cheaper cases") {
        GroupPair pair = product_diag_circle();
        pair.sigma_pair = true;
        auto rep = classify_pair(pair);
        CHECK(rep.kind == PairCase::sigma_pair);
        CHECK(has_note(rep, "input flag"));
        CHECK_FALSE(has_note(rep, "rationally"));

        GroupPair u2 = u2_diag_circle();
        u2.restriction = {{Int(1), Int(-1)}};  // circle inside the derived subgroup
        u2.sigma_pair = true;
        auto urep = classify_pair(u2);
        CHECK(urep.kind == PairCase::sigma_pair);
        CHECK(has_note(urep, "conclusion holds rationally"));
    }

    SUBCASE("polynomial image with a finite-module certificate") {
        auto rep = classify_pair(product_diag_circle());
        CHECK(rep.kind == PairCase::image_polynomial_free);
        CHECK(has_note(rep, "independent restricted generators: x1"));
        CHECK(has_note(rep, "module-finite"));

        auto sp = classify_pair(sp2_circle());
        CHECK(sp.kind == PairCase::image_polynomial_free);
        CHECK(has_note(sp, "independent restricted generators: x1"));
    }

    SUBCASE("torsion in the ambient fundamental group refuses the pair") {
        auto rep = classify_pair(so3_so2());
        CHECK_FALSE(rep.pi1_free_abelian);
        CHECK(rep.kind == PairCase::not_covered);
        CHECK(rep.reason.find("torsion") != std::string::npos);
        CHECK(rep.pi1_certificate.find("invariant factors 2") != std::string::npos);

        GroupPair psu;
        psu.ambient = make_psu(3);
        psu.subgroup = make_torus(2);
        psu.restriction = {{Int(1), Int(0)}, {Int(0), Int(1)}};
        auto prep = classify_pair(psu);
        CHECK(prep.kind == PairCase::not_covered);
        CHECK(prep.reason.find("torsion") != std::string::npos);
        CHECK(prep.pi1_certificate.find("invariant factors 3") != std::string::npos);
    }

    SUBCASE("a singular image hypersurface certifies non-freeness") {
        auto rep = classify_pair(su4_circle());
        CHECK(rep.pi1_free_abelian);
        CHECK(rep.kind == PairCase::not_covered);
        CHECK(rep.reason.find("could not possibly be free") != std::string::npos);
        CHECK(rep.reason.find("singular") != std::string::npos);
        CHECK(has_note(rep, "no preimage for x1"));
        CHECK(has_note(rep, "independent restricted generators: x1 x2"));
    }

    SUBCASE("malformed pairs are rejected as input") {
        GroupPair bad = su2_torus();
        bad.restriction = {{Int(2)}};  // index-two sublattice, not a subtorus
        CHECK_THROWS_AS(classify_pair(bad), input_error);
    }
}

TEST_CASE("the non-free circle image is pinned down by an explicit hypersurface") {
    // Independent of the classifier: restrict the two independent SU(4)
    // generators to the circle and present the image subalgebra directly.
    GroupPair pair = su4_circle();
    auto ambient = representation_ring(pair.ambient);
    auto subgroup = representation_ring(pair.subgroup);
    auto res = restriction_map(pair, ambient, subgroup);
    REQUIRE(res.images.size() == 3);
    // z + z^-1 + z^2 + z^-2 and 2 + z + z^-1 + z^3 + z^-3 in the generators.
    ExactPoly a = laurent(2, {{{1, 0}, 1}, {{0, 1}, 1}, {{2, 0}, 1}, {{0, 2}, 1}});
    ExactPoly b = laurent(2, {{{0, 0}, 2}, {{1, 0}, 1}, {{0, 1}, 1}, {{3, 0}, 1}, {{0, 3}, 1}});
    CHECK(res.images[0] == a);
    CHECK(res.images[1] == b);
    CHECK(res.images[2] == a);

    auto machine = ring_map_image(subgroup.relations, {a, b}, {"g1", "g2"});
    REQUIRE(machine.image_pres.gens.size() == 1);
    const ExactPoly& f = machine.image_pres.gens[0];

    // The curve has a rational singular point at (g1, g2) = (-1, 1): the
    // relation and both partial derivatives vanish there simultaneously.
    std::vector<ExactPoly> point = {ExactPoly::constant(2, Rat(-1)),
                                    ExactPoly::constant(2, Rat(1))};
    CHECK(f.substitute(point).terms.empty());
    CHECK(derivative_oracle(f, 0).substitute(point).terms.empty());
    CHECK(derivative_oracle(f, 1).substitute(point).terms.empty());

    // The torus coordinate c = t + t^-1 is integral over the image (it solves
    // c^2 + c - (2 + a) = 0) but does not lie in it.
    ExactPoly c = laurent(2, {{{1, 0}, 1}, {{0, 1}, 1}});
    CHECK_FALSE(machine.membership(c).has_value());
    CHECK(machine.membership(a * a).has_value());
}

TEST_CASE("doubled presentations glue two copies of the subgroup ring along restrictions") {
    SUBCASE("rank-one quotient pair: one glue relation, fiber two") {
        auto t = tor0_presentation(so3_so2());
        CHECK(t.first_names == std::vector<std::string>{"x1", "x1inv"});
        CHECK(t.second_names == std::vector<std::string>{"x1p", "x1invp"});
        REQUIRE(t.augmentations.size() == 2);
        CHECK(t.augmentations[0] == Rat(1));
        CHECK(t.augmentations[1] == Rat(1));
        // t + t^-1 - u - u^-1 lies in the ideal (the constants of the orbit
        // characters cancel between the two copies).
        ExactPoly glue = var(4, 0) + var(4, 1) - var(4, 2) - var(4, 3);
        CHECK(t.ring.reduce(glue).terms.empty());
        CHECK(tor0_fiber_dimension(t, 0) == 2);
        CHECK(tor0_fiber_dimension(t, 1) == 2);
        CHECK_THROWS_AS(tor0_fiber_dimension(t, 2), input_error);
    }

    SUBCASE("maximal torus of the rank-one simply connected group") {
        auto t = tor0_presentation(su2_torus());
        ExactPoly glue = var(4, 0) + var(4, 1) - var(4, 2) - var(4, 3);
        CHECK(t.ring.reduce(glue).terms.empty());
        CHECK(tor0_fiber_dimension(t, 0) == 2);
        CHECK(tor0_fiber_dimension(t, 1) == 2);
    }

    SUBCASE("maximal torus of the rank-two special unitary group: fiber six") {
        auto t = tor0_presentation(su3_torus());
        CHECK(t.first_names.size() == 4);
        CHECK(tor0_fiber_dimension(t, 0) == 6);
        CHECK(tor0_fiber_dimension(t, 1) == 6);
    }

    SUBCASE("identity pair: the glue forces the two copies to agree") {
        auto t = tor0_presentation(identity_pair());
        REQUIRE(t.first_names == std::vector<std::string>{"x1"});
        REQUIRE(t.second_names == std::vector<std::string>{"x1p"});
        CHECK(t.ring.reduce(var(2, 0) - var(2, 1)).terms.empty());
        CHECK(tor0_fiber_dimension(t, 0) == 1);
        CHECK(t.augmentations[0] == Rat(2));
    }

    SUBCASE("free module of rank two over a polynomial image") {
        auto t = tor0_presentation(product_diag_circle());
        CHECK(tor0_fiber_dimension(t, 0) == 2);
        CHECK(tor0_fiber_dimension(t, 1) == 2);
    }
}

TEST_CASE("fixed-point restriction is a ring map onto Weyl-translated coordinates") {
    SUBCASE("rank-one components reproduce the two pole restrictions") {
        for (const auto& pair : {so3_so2(), su2_torus()}) {
            auto iota = iota_map(pair);
            REQUIRE(iota.weyl_order.size() == 2);
            CHECK(iota.weyl_order[0] == ZMatrix{{Int(1)}});
            CHECK(iota.weyl_order[1] == ZMatrix{{Int(-1)}});

            ExactPoly t_tensor_1 = laurent(2, {{{1, 0}, 1}});
            ExactPoly one_tensor_t = laurent(2, {{{0, 1}, 1}});
            ExactPoly one = laurent(2, {{{0, 0}, 1}});
            CHECK(iota_component(iota, 0, t_tensor_1) == laurent(1, {{{1}, 1}}));
            CHECK(iota_component(iota, 1, t_tensor_1) == laurent(1, {{{1}, 1}}));
            CHECK(iota_component(iota, 0, one_tensor_t) == laurent(1, {{{1}, 1}}));
            CHECK(iota_component(iota, 1, one_tensor_t) == laurent(1, {{{-1}, 1}}));
            CHECK(iota_component(iota, 0, one) == laurent(1, {{{0}, 1}}));
            CHECK(iota_component(iota, 1, one) == laurent(1, {{{0}, 1}}));
        }
    }

    SUBCASE("each component is multiplicative") {
        auto iota = iota_map(su2_torus());
        ExactPoly p = laurent(2, {{{1, 0}, 1}, {{0, -1}, 2}});
        ExactPoly q = laurent(2, {{{-1, 2}, 3}, {{0, 0}, 1}});
        for (std::size_t w = 0; w < iota.weyl_order.size(); ++w)
            CHECK(iota_component(iota, w, p * q) ==
                  iota_component(iota, w, p) * iota_component(iota, w, q));
    }

    SUBCASE("the glue relations die in every component") {
        ExactPoly glue = laurent(2, {{{1, 0}, 1}, {{-1, 0}, 1}, {{0, 1}, -1}, {{0, -1}, -1}});
        for (const auto& pair : {so3_so2(), su2_torus()}) {
            auto iota = iota_map(pair);
            for (std::size_t w = 0; w < iota.weyl_order.size(); ++w)
                CHECK(iota_component(iota, w, glue).terms.empty());
        }
    }

    SUBCASE("rank-two torus: six components, orbit weights hit twice each") {
        auto iota = iota_map(su3_torus());
        REQUIRE(iota.weyl_order.size() == 6);
        CHECK(iota.weyl_order[0] == ZMatrix{{Int(1), Int(0)}, {Int(0), Int(1)}});
        ExactPoly one_tensor_t1 = laurent(4, {{{0, 0, 1, 0}, 1}});
        std::vector<ExactPoly> orbit = {laurent(2, {{{1, 0}, 1}}), laurent(2, {{{0, 1}, 1}}),
                                        laurent(2, {{{-1, -1}, 1}})};
        for (const auto& expected : orbit) {
            int count = 0;
            for (std::size_t w = 0; w < 6; ++w)
                if (iota_component(iota, w, one_tensor_t1) == expected) ++count;
            CHECK(count == 2);
        }
    }

    SUBCASE("joint window kernel lies in the doubled ideal") {
        for (const auto& pair : {so3_so2(), su2_torus()}) {
            auto iota = iota_map(pair);
            auto t = tor0_presentation(pair);
            const int window = 2;
            std::vector<Monomial> cols;
            for (int a = -window; a <= window; ++a)
                for (int b = -window; b <= window; ++b) cols.push_back(Monomial{a, b});
            const int span = 4 * window + 1;
            QMatrix mat(2 * span, std::vector<Rat>(cols.size(), Rat(0)));
            for (std::size_t j = 0; j < cols.size(); ++j) {
                ExactPoly mono = ExactPoly::monomial(cols[j], Rat(1));
                for (std::size_t w = 0; w < 2; ++w) {
                    ExactPoly img = iota_component(iota, w, mono);
                    REQUIRE(img.terms.size() == 1);
                    int e = img.terms.begin()->first[0];
                    mat[w * span + e + 2 * window][j] = Rat(1);
                }
            }
            auto kernel = q_nullspace(mat);
            CHECK(!kernel.empty());  // the glue relation is supported in the window
            for (const auto& vec : kernel) {
                ExactPoly f(2);
                for (std::size_t j = 0; j < cols.size(); ++j)
                    if (vec[j] != 0) f.add_term(cols[j], vec[j]);
                CHECK(t.ring.reduce(doubled_laurent_to_generators(f)).terms.empty());
            }
        }
    }

    SUBCASE("non-torus and non-maximal subgroups are rejected") {
        CHECK_THROWS_AS(iota_map(su4_sp2()), input_error);
        CHECK_THROWS_AS(iota_map(su4_circle()), input_error);
    }
}

TEST_CASE("rank-one image comparison separates sphere classes from the edge image") {
    SUBCASE("order-one equator: the class (1, t) is missed by the edge map") {
        auto rep = iota_image_comparison(so3_so2(), 3);
        CHECK(rep.window == 3);
        CHECK(rep.equator_order == 1);
        CHECK_FALSE(rep.lambda_covers_iota);
        REQUIRE(rep.witness.has_value());
        CHECK(rep.witness->first == 0);
        CHECK(rep.witness->second == 1);
        CHECK(rep.certificate.find("parity") != std::string::npos);
        CHECK(rep.certificate.find("odd sum 1") != std::string::npos);
    }

    SUBCASE("order-two equator: every glued pair lifts") {
        auto rep = iota_image_comparison(su2_torus(), 3);
        CHECK(rep.equator_order == 2);
        CHECK(rep.lambda_covers_iota);
        CHECK_FALSE(rep.witness.has_value());
        CHECK(rep.certificate.find("lift") != std::string::npos);
    }

    SUBCASE("window and shape preconditions") {
        CHECK_THROWS_AS(iota_image_comparison(so3_so2(), 0), input_error);
        CHECK_THROWS_AS(iota_image_comparison(su3_torus(), 3), input_error);
        CHECK_THROWS_AS(iota_image_comparison(su4_sp2(), 3), input_error);
    }
}

TEST_CASE("assembled reports carry grading, fibers, and provenance") {
    SUBCASE("surjective case simplifies to the subgroup ring") {
        auto rep = assemble_ktheory(su4_sp2());
        CHECK(rep.hypotheses.kind == PairCase::surjective);
        CHECK(rep.even_names == std::vector<std::string>{"x1", "x2"});
        CHECK(rep.odd_names == std::vector<std::string>{"z1"});
        CHECK(rep.exterior_rank == 1);
        CHECK(rep.tor0.pres.gens.empty());  // free polynomial ring on two generators
        CHECK(rep.fiber == 1);
        CHECK(rep.predicted_rank == 1);
        CHECK(rep.provenance.find("surjective") != std::string::npos);
    }

    SUBCASE("equal-rank case doubles the torus ring") {
        auto rep = assemble_ktheory(su2_torus());
        CHECK(rep.hypotheses.kind == PairCase::equal_rank);
        CHECK(rep.exterior_rank == 0);
        CHECK(rep.odd_names.empty());
        CHECK(rep.even_names ==
              std::vector<std::string>{"x1", "x1inv", "x1p", "x1invp"});
        CHECK(rep.fiber == 2);
        CHECK(rep.predicted_rank == 2);

        auto rep3 = assemble_ktheory(su3_torus());
        CHECK(rep3.fiber == 6);
        CHECK(rep3.predicted_rank == 6);
        CHECK(rep3.exterior_rank == 0);
    }

    SUBCASE("identity pair returns the ambient ring with no exterior factor") {
        auto rep = assemble_ktheory(identity_pair());
        CHECK(rep.exterior_rank == 0);
        CHECK(rep.even_names == std::vector<std::string>{"x1"});
        CHECK(rep.fiber == 1);
        CHECK(rep.tor0.pres.gens.empty());
    }

    SUBCASE("general case keeps the doubled presentation without a predicted rank") {
        auto rep = assemble_ktheory(product_diag_circle());
        CHECK(rep.hypotheses.kind == PairCase::image_polynomial_free);
        CHECK(rep.exterior_rank == 1);
        CHECK(rep.odd_names == std::vector<std::string>{"z1"});
        CHECK(rep.fiber == 2);
        CHECK_FALSE(rep.predicted_rank.has_value());

        auto sp = assemble_ktheory(sp2_circle());
        CHECK(sp.exterior_rank == 1);
        CHECK(sp.fiber == 2);
    }

    SUBCASE("uncovered pairs are refused with the classification reason") {
        CHECK_THROWS_WITH_AS(assemble_ktheory(so3_so2()),
                             doctest::Contains("torsion"), uncovered_error);
        CHECK_THROWS_WITH_AS(assemble_ktheory(su4_circle()),
                             doctest::Contains("could not possibly be free"), uncovered_error);
    }
}

TEST_CASE("forgetting equivariance counts cells through augmented quotients") {
    SUBCASE("two-cell sphere from the rank-one torus quotient") {
        auto rep = ordinary_ktheory(su2_torus());
        CHECK(rep.exterior_rank == 0);
        CHECK(rep.base_fiber == 2);
        CHECK(rep.total_rank == 2);
        // The ring is the Laurent circle ring modulo t + t^-1 = 2.
        ExactPoly aug_rel = var(2, 0) + var(2, 1) - ExactPoly::constant(2, Rat(2));
        CHECK(rep.ring.reduce(aug_rel).terms.empty());
    }

    SUBCASE("full flag of the rank-two group has six cells") {
        auto rep = ordinary_ktheory(su3_torus());
        CHECK(rep.base_fiber == 6);
        CHECK(rep.total_rank == 6);
    }

    SUBCASE("five-sphere: one even cell and the exterior class") {
        auto rep = ordinary_ktheory(su4_sp2());
        CHECK(rep.exterior_rank == 1);
        CHECK(rep.odd_names == std::vector<std::string>{"z1"});
        CHECK(rep.base_fiber == 1);
        CHECK(rep.total_rank == 2);
    }

    SUBCASE("three-sphere from the diagonal circle of the unitary group") {
        auto rep = ordinary_ktheory(u2_diag_circle());
        CHECK(rep.exterior_rank == 1);
        CHECK(rep.base_fiber == 1);
        CHECK(rep.total_rank == 2);
    }

    SUBCASE("identity pair is a point") {
        auto rep = ordinary_ktheory(identity_pair());
        CHECK(rep.exterior_rank == 0);
        CHECK(rep.base_fiber == 1);
        CHECK(rep.total_rank == 1);
    }

    SUBCASE("cases without a collapse certificate are refused") {
        CHECK_THROWS_AS(ordinary_ktheory(su4_circle()), uncovered_error);
        CHECK_THROWS_WITH_AS(ordinary_ktheory(product_diag_circle()),
                             doctest::Contains("no collapse certificate"), uncovered_error);
    }
}

TEST_CASE("weak formality quotients keep the one-sided augmentation surjective") {
    SUBCASE("rank-one torus quotient") {
        auto rep = formality_criterion_tor(su2_torus());
        CHECK(rep.degree_zero_surjective);
        CHECK(rep.exterior_rank == 0);
        CHECK(rep.quotient_fiber == 2);
        CHECK(rep.total_rank == 2);
        REQUIRE(rep.witnesses.size() == 2);
        CHECK(rep.witnesses[0].find("x1p") != std::string::npos);
        CHECK(rep.witnesses[0].find("x1") != std::string::npos);
    }

    SUBCASE("surjective pair matches its ordinary rank") {
        auto rep = formality_criterion_tor(su4_sp2());
        CHECK(rep.degree_zero_surjective);
        CHECK(rep.exterior_rank == 1);
        CHECK(rep.quotient_fiber == 1);
        CHECK(rep.total_rank == 2);
    }

    SUBCASE("identity pair is trivially surjective") {
        auto rep = formality_criterion_tor(identity_pair());
        CHECK(rep.degree_zero_surjective);
        CHECK(rep.quotient_fiber == 1);
        CHECK(rep.total_rank == 1);
    }

    SUBCASE("uncovered pairs are refused") {
        CHECK_THROWS_AS(formality_criterion_tor(so3_so2()), uncovered_error);
    }
}
