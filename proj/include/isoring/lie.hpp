#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isoring/linalg.hpp"
#include "isoring/polynomial.hpp"

namespace isoring {

// One factor of the simply-connected (or torus) cover underlying a group.
struct GroupFactor {
    char family = 'T';  // 'A' = SU(param), 'B' = Spin(2p+1), 'C' = Sp(p), 'D' = Spin(2p), 'T' = torus
    int param = 0;      // SU(n): n; Spin(2p+1)/Spin(2p): p; Sp(n): n; torus: rank
};

// Compact connected Lie group encoded by its root datum: the weight lattice is
// Z^rank in a designated basis, with simple roots, an invariant inner product,
// and reflection generators acting integrally on the lattice.
struct CompactGroup {
    std::string label;
    int rank = 0;
    std::vector<std::vector<Int>> simple_roots;         // rows of length rank
    std::vector<std::vector<Int>> fundamental_weights;  // rows; empty when not all lattice-integral
    std::vector<ZMatrix> weyl_generators;               // simple reflections on the lattice
    QMatrix gram;                                       // invariant inner product on the weight space
    std::vector<GroupFactor> factors;                   // cover decomposition
    ZMatrix lattice_in_cover;                           // columns: this lattice's basis in cover coordinates
    Int cover_index = 1;                                // index [cover lattice : this lattice]

    bool is_torus() const { return simple_roots.empty(); }
    std::vector<std::string> torus_var_names() const;   // t1..t_rank
};

CompactGroup make_su(int n);      // n >= 2
CompactGroup make_sp(int n);      // n >= 1
CompactGroup make_spin(int n);    // n >= 3
CompactGroup make_torus(int k);   // k >= 1
CompactGroup make_so(int n);      // n >= 2 (SO(2) = circle)
CompactGroup make_u(int n);       // n >= 1
CompactGroup make_psu(int n);     // n >= 2
CompactGroup make_product(const CompactGroup& a, const CompactGroup& b,
                          const std::string& label = "");
// Quotient by a finite central subgroup, encoded as the sublattice of
// characters that survive: columns must span a finite-index sublattice
// containing every root.
CompactGroup make_central_quotient(const CompactGroup& g, const ZMatrix& sublattice_cols,
                                   const std::string& label);
// Parses "SU(3)", "Sp(2)", "Spin(5)", "SO(3)", "PSU(3)", "U(2)", "T1"/"T(1)",
// and products joined by 'x' such as "SU(2)xT1".
CompactGroup make_named(const std::string& name);

// Root-datum invariants: independence of simple roots, integrality and order-2
// of reflections, root-set permutation, Coxeter relations. Throws input_error.
void validate_group(const CompactGroup& g);

// The reflection matrix of alpha on the lattice; throws input_error if it is
// not integral (invalid root datum).
ZMatrix reflection_matrix(const QMatrix& gram, const std::vector<Int>& alpha);

// 2(lambda, alpha)/(alpha, alpha); throws input_error if non-integral.
Int coroot_pairing(const CompactGroup& g, const std::vector<Int>& lambda,
                   const std::vector<Int>& alpha);
bool is_dominant(const CompactGroup& g, const std::vector<Int>& lambda);
// W-translate of lambda with all simple pairings >= 0.
std::vector<Int> dominant_representative(const CompactGroup& g, const std::vector<Int>& lambda);

// Complete duplicate-free Weyl group, closed under products. budget caps |W|.
std::vector<ZMatrix> weyl_elements(const CompactGroup& g, long budget = 10000);
std::vector<std::vector<Int>> all_roots(const CompactGroup& g);
std::vector<std::vector<Int>> positive_roots(const CompactGroup& g);
// Half-sum of positive roots (rational coordinates in general).
std::vector<Rat> half_sum_positive_roots(const CompactGroup& g);
// Basis (columns) of the W-fixed sublattice L^W.
ZMatrix weyl_fixed_sublattice(const CompactGroup& g);

struct Pi1Report {
    bool free_abelian = true;
    int free_rank = 0;
    std::vector<Int> invariant_factors;  // nontrivial finite invariant factors (> 1)
    std::vector<Int> torsion_primes;
};
Pi1Report pi1_report(const CompactGroup& g);

struct GroupPair {
    CompactGroup ambient;
    CompactGroup subgroup;
    ZMatrix restriction;  // rank(subgroup) x rank(ambient)
    bool sigma_pair = false;
    // Optional user-supplied normalizer component group: generators acting on
    // the subgroup's rational weight space (closed by the consumer).
    std::optional<std::vector<QMatrix>> n_override;
};

struct PairValidation {
    bool valid = false;
    int rank_difference = 0;  // s = rk G - rk H
    std::string failure;      // names the failing character when invalid
};
// Checks shape, rank inequality, and that restricted W_G-orbit sums of the
// ambient fundamental weights (or basis characters) are W_H-stable multisets.
PairValidation validate_pair(const GroupPair& pair, long budget = 10000);

// Restriction of a weight along the pair's lattice map.
std::vector<Int> restrict_weight(const GroupPair& pair, const std::vector<Int>& lambda);

}  // namespace isoring
