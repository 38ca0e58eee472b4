#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isoring/groebner.hpp"
#include "isoring/lie.hpp"

namespace isoring {

// A (virtual) character: Laurent polynomial in the torus variables t1..t_rank.
struct Character {
    ExactPoly poly;
    std::optional<std::vector<Int>> highest_weight;  // extreme weight when known
};

// Character of the irreducible representation with the given dominant highest
// weight, computed by recursive weight-multiplicity descent.
Character irreducible_character(const CompactGroup& g, const std::vector<Int>& lambda,
                                long budget = 200000);

// Dimension by the closed product formula over positive roots; an oracle kept
// independent from the character expansion.
Int weyl_dimension(const CompactGroup& g, const std::vector<Int>& lambda);

// Sum of the monomials in the Weyl orbit of lambda.
ExactPoly orbit_sum(const CompactGroup& g, const std::vector<Int>& lambda, long budget = 100000);

// Is this Laurent polynomial invariant under the Weyl group action on exponents?
bool is_weyl_invariant(const CompactGroup& g, const ExactPoly& laurent);

struct RepRingPresentation {
    std::vector<std::string> gen_names;             // x1, x2, ... (units carry an 'inv' partner)
    std::vector<Character> gen_chars;               // character of each generator
    std::vector<std::pair<int, int>> unit_pairs;    // indices (i, j) with gen_i * gen_j = 1
    IdealPresentation relations;                    // relations among the generators
    RingMapImage expression;                        // membership machinery into the torus ring
    IdealPresentation torus_pres;                   // saturated torus presentation (2*rank vars)
    int torus_rank = 0;
};

// Presentation of the representation ring: fundamental characters plus unit
// characters for the Weyl-fixed directions when the weight lattice provides
// integral fundamental weights; otherwise (central quotients) a provably
// complete set of dominant-orbit generators found by a monoid Hilbert-basis
// search, minimalized by membership.
RepRingPresentation representation_ring(const CompactGroup& g, long budget = kDefaultPairBudget);

// Expresses a W-invariant Laurent polynomial in the ring generators; nullopt
// when it is not in the subring (e.g. a non-character).
std::optional<ExactPoly> express_in_generators(const RepRingPresentation& ring,
                                               const ExactPoly& laurent);

struct RestrictionMap {
    std::vector<ExactPoly> images;       // one per ambient generator, in subgroup generators
    std::vector<Int> inverted_primes;    // primes in coefficient denominators (metadata)
};
// The restriction homomorphism on generators; throws input_error when a
// restricted character is not invariant under the subgroup Weyl group.
RestrictionMap restriction_map(const GroupPair& pair, const RepRingPresentation& ambient,
                               const RepRingPresentation& subgroup,
                               long budget = kDefaultPairBudget);

struct SurjectivityReport {
    bool surjective = false;
    std::vector<ExactPoly> preimages;    // per subgroup generator, in ambient generators
    std::string failing_generator;       // first subgroup generator with no preimage
    std::vector<Int> inverted_primes;    // primes in preimage denominators (metadata)
};
// Does restriction map the ambient representation ring onto the subgroup's?
// Decided by elimination; preimages are returned as certificates.
SurjectivityReport is_restriction_surjective(const GroupPair& pair,
                                             const RepRingPresentation& ambient,
                                             const RepRingPresentation& subgroup,
                                             long budget = kDefaultPairBudget);

}  // namespace isoring
