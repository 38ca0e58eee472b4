#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isoring/groebner.hpp"
#include "isoring/lie.hpp"
#include "isoring/rep_ring.hpp"

namespace isoring {

// Structural case of a pair, tested in certificate-priority order.
enum class PairCase { surjective, equal_rank, sigma_pair, image_polynomial_free, not_covered };
std::string pair_case_name(PairCase c);

struct HypothesisReport {
    bool pi1_free_abelian = false;
    std::string pi1_certificate;       // free rank / invariant factors of the ambient pi1
    PairCase kind = PairCase::not_covered;
    std::string reason;                // set when not_covered: why no case applies
    std::vector<Int> inverted_primes;  // denominators appearing in certificates
    std::vector<std::string> notes;
};

// Hypothesis ladder: ambient pi1 torsion test, restriction surjectivity, rank
// comparison, the declared fixed-point-pair flag, then the general
// polynomial-image + finite-module certificate. Certificate failures become
// not_covered verdicts; only malformed input throws.
HypothesisReport classify_pair(const GroupPair& pair, long budget = kDefaultPairBudget);

struct Tor0Data {
    PresentedRing ring;                     // doubled presentation of RH (x)_RG RH
    std::vector<std::string> first_names;   // first-copy generator names
    std::vector<std::string> second_names;  // second-copy generator names
    std::vector<Rat> augmentations;         // dimension of each subgroup generator
    RepRingPresentation subgroup_ring;
    RepRingPresentation ambient_ring;
    RestrictionMap restriction;             // ambient generators in subgroup generators
};

// Two copies of the subgroup ring's generators, subject to both copies of its
// relations and, for each ambient generator x_j, the difference of the two
// embeddings of its restriction.
Tor0Data tor0_presentation(const GroupPair& pair, long budget = kDefaultPairBudget);

// Vector-space dimension of tor0 after sending one copy (0 = first,
// 1 = second) to its augmentation values; nullopt when infinite.
std::optional<long> tor0_fiber_dimension(const Tor0Data& t, int copy,
                                         long budget = kDefaultPairBudget);

// Restriction to the Weyl-indexed fixed points of the torus action on G/T:
// the component at w sends a (x) b to a * w(b) inside the Laurent ring RT.
struct IotaData {
    std::vector<ZMatrix> weyl_order;  // Weyl elements in subgroup coordinates, identity first
    int torus_rank = 0;
};
IotaData iota_map(const GroupPair& pair, long budget = 10000);
// Apply component w to a doubled Laurent polynomial (2*rank exponent slots,
// first copy then second); the result is a Laurent polynomial in rank slots.
ExactPoly iota_component(const IotaData& iota, std::size_t w_index, const ExactPoly& doubled);

struct IotaComparisonReport {
    int window = 0;
    Int equator_order = 1;            // order of the generic-orbit stabilizer in the torus
    bool lambda_covers_iota = false;  // every fixed-point pair monomial lifts through lambda
    // Exponents (m, n) of a pair (t^m, t^n) restricted from the sphere but not
    // in the image of the edge map; empty when lambda covers.
    std::optional<std::pair<Int, Int>> witness;
    std::string certificate;  // why the witness fails globally, not just in the window
};
// Rank-one ambient group with maximal-torus subgroup: compares the image of
// the fixed-point restriction (kernel of the glued augmentation difference)
// with the image of the edge map composed with it, over a finite exponent
// window, certifying non-membership by an exponent-parity functional.
IotaComparisonReport iota_image_comparison(const GroupPair& pair, int window);

struct KTheoryReport {
    HypothesisReport hypotheses;
    PresentedRing tor0;                     // simplified to the subgroup ring when surjective
    std::vector<std::string> even_names;    // mod-2 degree 0 generators
    std::vector<std::string> odd_names;     // exterior generators z1..zs, mod-2 degree 1
    int exterior_rank = 0;                  // s = rk G - rk H
    std::optional<long> fiber;              // tor0 over one copy's augmentation
    std::optional<long> predicted_rank;     // set when a freeness certificate is claimed
    std::vector<Int> inverted_primes;
    std::string provenance;                 // which structural case produced the answer
};
// K*_H(G/H) = tor0 (x) exterior algebra, with the mod-2 grading recorded per
// generator name. Throws uncovered_error when classification is not_covered.
KTheoryReport assemble_ktheory(const GroupPair& pair, long budget = kDefaultPairBudget);

struct OrdinaryKTheoryReport {
    PresentedRing ring;                   // subgroup ring modulo augmented restrictions
    int exterior_rank = 0;
    std::vector<std::string> odd_names;
    std::optional<long> base_fiber;       // dimension of the quotient ring
    std::optional<long> total_rank;       // base_fiber * 2^exterior_rank
};
// K*(G/H) for the collapse cases (surjective / equal rank / declared
// fixed-point pair): subgroup ring with each restricted ambient generator set
// to its augmentation value, tensored with the exterior factor.
OrdinaryKTheoryReport ordinary_ktheory(const GroupPair& pair, long budget = kDefaultPairBudget);

struct TorFormalityReport {
    bool degree_zero_surjective = false;
    std::vector<std::string> witnesses;  // generator-level lifts through the comparison map
    PresentedRing weak_quotient;         // tor0 with the first copy augmented away
    int exterior_rank = 0;
    std::optional<long> quotient_fiber;  // dimension of weak_quotient
    std::optional<long> total_rank;      // quotient_fiber * 2^exterior_rank
};
// Degree-zero comparison from the doubled presentation onto the one-sided
// quotient (augment the coefficient copy), with the weak-formality quotient
// presentation. Throws uncovered_error when classification is not_covered.
TorFormalityReport formality_criterion_tor(const GroupPair& pair, long budget = kDefaultPairBudget);

}  // namespace isoring
