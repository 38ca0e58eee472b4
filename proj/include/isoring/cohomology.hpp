#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isoring/groebner.hpp"
#include "isoring/invariants.hpp"
#include "isoring/lie.hpp"
#include "isoring/series.hpp"

namespace isoring {

// Rational cohomology of the classifying space: the Weyl-invariant polynomials
// on the weight space, graded with each linear coordinate in degree two.
struct BorelData {
    PresentedRing ring;                    // free graded ring on the generators
    std::vector<std::string> gen_names;    // u1..ur for tori, p1..pr otherwise
    std::vector<int> degrees;              // invariant degrees d_i, ascending
    std::vector<int> cohomological_degrees;  // 2 * d_i
    std::vector<int> primitive_degrees;      // 2 * d_i - 1 (odd side of the group)
    std::vector<ExactPoly> invariant_polys;  // generators in the weight coordinates
    long weyl_order = 1;
};
BorelData borel_cohomology(const CompactGroup& g, long budget = kDefaultPairBudget);

// Component group of the subgroup's normalizer in its action on the
// subgroup's rational character space / the indecomposables of its Borel ring.
struct NormalizerData {
    FiniteMatrixGroup group;  // induced matrices, deduplicated
    std::string source;       // "weyl-stabilizer" or "descriptor-override"
};
// Public entry point for torus subgroups (the tangent-space action).
NormalizerData normalizer_action(const GroupPair& pair, long budget = kDefaultPairBudget);

// The map induced on classifying-space cohomology by the inclusion: each
// ambient invariant generator restricted along the weight lattice map and
// re-expressed in the subgroup's generators.
struct CohomRestriction {
    std::vector<ExactPoly> images;  // in the subgroup generator variables
    std::vector<int> ambient_degrees;  // invariant degrees of the ambient generators
    BorelData ambient;
    BorelData subgroup;
};
CohomRestriction restriction_cohomology(const GroupPair& pair, long budget = kDefaultPairBudget);

// Complete-intersection test for the cohomology quotient H*BK // H*BG.
struct FormalityCheckReport {
    std::optional<bool> ci;            // true, or nullopt = undecided (never false)
    std::vector<int> picked;           // indices of the certified regular sequence
    bool regular = false;              // picked sequence passed the Koszul test
    bool generates = false;            // picked sequence generates the full image ideal
    std::optional<long> quotient_dimension;  // dim of the full quotient, when finite
    PresentedRing quotient;            // subgroup ring modulo all restricted generators
    std::string reason;                // set when undecided
};
FormalityCheckReport formality_check(const GroupPair& pair, long budget = kDefaultPairBudget);

// One verdict of the equivalent-formality battery; nullopt = undecided.
struct StCondition {
    std::optional<bool> verdict;
    std::string certificate;
};

struct FormalityReport {
    StCondition dimension_formula;      // total dimension = |N| * 2^(rank difference)
    StCondition quotient_and_image;     // complete intersection + surjection onto N-invariants
    StCondition indecomposable_action;  // N acts on the indecomposables by pseudoreflections
    StCondition tangent_action;         // torus subgroups: N acts on the tangent space likewise
    std::optional<bool> isotropy_formal;  // common value of the decided verdicts
    std::optional<long> total_dimension;  // quotient dimension * 2^(rank difference)
    long normalizer_order = 1;
    int rank_difference = 0;
    std::optional<bool> ci_flag;
    std::string normalizer_source;
};
// Evaluates the four equivalent conditions; decided verdicts must agree
// (std::logic_error otherwise), undecided ones are reported as such.
FormalityReport st_battery(const GroupPair& pair, long budget = kDefaultPairBudget);

// Doubled-generator presentation of the equivariant cohomology of G/H with
// its exterior factor and Poincare series. Refuses (uncovered_error) when the
// battery does not certify isotropy formality.
struct EquivariantCohomology {
    PresentedRing ring;                     // doubled presentation, even part
    std::vector<std::string> first_names;
    std::vector<std::string> second_names;
    std::vector<int> exterior_degrees;      // odd degrees 2*d_i - 1 of the remaining primitives
    PoincareSeries series;                  // cohomological Poincare series, exterior included
    bool redundancy_verified = false;       // non-sequence differences reduce to zero
};
EquivariantCohomology equivariant_cohomology(const GroupPair& pair,
                                             long budget = kDefaultPairBudget);

}  // namespace isoring
