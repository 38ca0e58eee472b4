#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isoring/polynomial.hpp"
#include "isoring/series.hpp"

namespace isoring {

inline constexpr long kDefaultPairBudget = 1000000;

// Ambient polynomial ring data plus ideal generators. Laurent directions are
// modelled by saturation pairs (i, j) meaning names[i]*names[j] = 1; the
// relation polynomials themselves must be included in `gens` by the caller
// (or via add_saturation_relations).
struct IdealPresentation {
    std::vector<std::string> var_names;
    std::vector<long> degrees;  // positive weights; used for grading-aware ops
    MonomialOrder order;
    std::vector<ExactPoly> gens;
    std::vector<std::pair<int, int>> sat_pairs;

    int nvars() const { return static_cast<int>(var_names.size()); }
    void add_saturation_relations();  // appends x_i*x_j - 1 for each sat pair
    std::string render(const std::string& sep = ", ") const;
};

struct GroebnerStats {
    long pair_reductions = 0;
    long basis_size = 0;
    bool from_cache = false;
};

struct GroebnerResult {
    std::vector<ExactPoly> basis;  // reduced, monic, deterministic order
    MonomialOrder order;
    GroebnerStats stats;
};

// Buchberger with the sugar strategy and the coprime/chain criteria.
// Throws budget_error when pair reductions exceed `budget`.
GroebnerResult groebner_basis(const IdealPresentation& pres, long budget = kDefaultPairBudget,
                              bool use_cache = true);

ExactPoly normal_form(const ExactPoly& p, const std::vector<ExactPoly>& basis,
                      const MonomialOrder& ord);

// A ring presented as ambient/ideal, carrying its Groebner basis.
struct PresentedRing {
    IdealPresentation pres;
    GroebnerResult gb;

    static PresentedRing make(IdealPresentation p, long budget = kDefaultPairBudget,
                              bool use_cache = true);
    ExactPoly reduce(const ExactPoly& p) const { return normal_form(p, gb.basis, gb.order); }
};

// Hilbert series of ambient/ideal with the given positive variable degrees.
// Requires homogeneous generators (ungraded_error otherwise).
PoincareSeries hilbert_series(const PresentedRing& ring);

// Krull dimension of ambient/ideal via leading-term combinatorics.
int krull_dimension(const PresentedRing& ring);

// Dimension over Q of the quotient as a vector space; nullopt when infinite.
std::optional<long> vector_space_dimension(const PresentedRing& ring);
std::vector<Monomial> standard_monomials(const PresentedRing& ring, long cap);

// Regular-sequence test in a graded ring: Hilbert series of ring/(elements)
// must equal the Koszul prediction HS(ring) * prod(1 - t^{deg f}).
struct RegularSequenceReport {
    bool regular = false;
    PoincareSeries actual;
    PoincareSeries predicted;
};
RegularSequenceReport is_regular_sequence(const PresentedRing& ring,
                                          const std::vector<ExactPoly>& elements);

// Image of a ring map Q[X_1..X_r] -> target, X_j |-> images[j], where target is
// an ambient/ideal presentation. Built via tag variables and elimination.
struct RingMapImage {
    // Presentation of the image subalgebra in the tag variables.
    IdealPresentation image_pres;           // relations among tags (may be empty)
    std::vector<std::string> tag_names;
    // Machinery for membership queries.
    GroebnerResult elim_gb;                 // in [target vars | tags]
    int n_target = 0;
    int n_tags = 0;

    // If p (in target vars) lies in the image subalgebra, return a preimage
    // polynomial in the tags; nullopt otherwise.
    std::optional<ExactPoly> membership(const ExactPoly& p) const;
};

RingMapImage ring_map_image(const IdealPresentation& target, const std::vector<ExactPoly>& images,
                            const std::vector<std::string>& tag_names,
                            long budget = kDefaultPairBudget);

// Dimension over Q of ring/(subst[i].first - subst[i].second) — the fiber of
// the presented ring over the point cut out by the substitutions. An empty
// substitution list measures the ring itself. nullopt = infinite.
std::optional<long> fiber_dimension(const PresentedRing& ring,
                                    const std::vector<std::pair<ExactPoly, Rat>>& subst,
                                    long budget = kDefaultPairBudget);

// Check that sending each generator to the given value defines a ring map to Q
// (every ideal generator must vanish at the point).
bool is_valid_augmentation(const IdealPresentation& pres, const std::vector<Rat>& values);

// Laurent helpers: convert a polynomial with possibly negative exponents into
// the doubled presentation where variable i has partner n+i.
ExactPoly laurent_to_saturated(const ExactPoly& p);  // n vars -> 2n vars
ExactPoly saturated_to_laurent(const ExactPoly& p);  // 2n vars -> n vars

// Content-hash cache directory: ISORING_CACHE_DIR when set (empty value
// disables), otherwise the user cache directory ($XDG_CACHE_HOME/isoring or
// ~/.cache/isoring).
std::string groebner_cache_dir();
void set_groebner_cache_enabled(bool on);

}  // namespace isoring
