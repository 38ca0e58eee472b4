#pragma once

#include <string>
#include <vector>

#include "isoring/groebner.hpp"
#include "isoring/linalg.hpp"
#include "isoring/series.hpp"

namespace isoring {

// A finite group of exact rational matrices acting on Q^degree, stored as a
// complete element list (closed under product and inverse, identity present).
struct FiniteMatrixGroup {
    int degree = 0;
    std::vector<QMatrix> elements;

    long order() const { return static_cast<long>(elements.size()); }
};

// Close a generator list into a full group; input_error on singular or
// ill-shaped generators, budget_error when the closure exceeds the budget
// (e.g. an infinite-order generator).
FiniteMatrixGroup close_matrix_group(int degree, const std::vector<QMatrix>& generators,
                                     long budget = 20000);

// Identity present, shapes right, closed under product: throws input_error
// with the reason otherwise.
void validate_matrix_group(const FiniteMatrixGroup& gamma);

// The polynomial action f |-> f(gamma . x), with (gamma . x)_j = sum_k
// gamma[j][k] x_k. Averaging over the group projects onto the invariants.
ExactPoly matrix_group_apply(const QMatrix& gamma, const ExactPoly& f);
ExactPoly reynolds_average(const FiniteMatrixGroup& gamma, const ExactPoly& f);

struct MolienData {
    PoincareSeries series;          // canonical reduced form
    bool polynomial_flag = false;   // series == prod 1/(1 - t^d)
    std::vector<int> degrees;       // sorted d_i, set when polynomial_flag
};
// (1/|Gamma|) sum_gamma 1/det(I - t gamma), with the degrees extracted by
// greedy (1 - t^d) factor peeling and verified exactly.
MolienData molien_series(const FiniteMatrixGroup& gamma);

struct ReflectionReport {
    bool is_reflection_group = false;
    std::vector<QMatrix> reflections;  // all elements with rank(gamma - I) == 1
};
// True iff the pseudoreflections generate the whole group.
ReflectionReport is_pseudoreflection_group(const FiniteMatrixGroup& gamma, long budget = 20000);

// Does prod(degrees) equal the group order? (Sufficient condition for the
// invariants of a parameter system of those degrees to be the whole ring.)
bool parameter_degree_test(const std::vector<int>& degrees, long order);

struct InvariantBasis {
    std::vector<ExactPoly> generators;  // minimal algebra generators found
    std::vector<int> degrees;           // their degrees, ascending
    bool complete = false;              // true when degree_bound >= |Gamma| (Noether)
};
// Minimal generators of the invariant ring in degrees <= degree_bound, by
// Reynolds averaging of monomials and linear-algebra minimalization.
InvariantBasis invariant_generators(const FiniteMatrixGroup& gamma, int degree_bound);

struct CoinvariantReport {
    long dimension = 0;      // dim_Q Q[V]/(positive-degree invariants), or a lower bound
    bool exact = false;      // false: bound too small, `dimension` is only a lower bound
    int degree_bound = 0;    // the bound actually used
    std::string trichotomy;  // "equality", "strict", or "undecided"
};
// Dimension of the coinvariant algebra; degree_bound < 0 means the Noether
// bound |Gamma| (always sufficient in characteristic zero).
CoinvariantReport coinvariant_dimension(const FiniteMatrixGroup& gamma, int degree_bound = -1,
                                        long budget = kDefaultPairBudget);

struct CstReport {
    bool reflection_group = false;
    bool molien_polynomial = false;
    bool coinvariants_equal_order = false;
    bool verdict = false;       // the common value of the three tests
    std::vector<int> degrees;   // invariant degrees when the verdict is positive
};
// Runs the three equivalent polynomiality tests and checks that they agree;
// disagreement is an internal hard error (std::logic_error).
CstReport cst_verdict(const FiniteMatrixGroup& gamma, long budget = kDefaultPairBudget);

struct CollapseReport {
    bool ideals_equal = false;
    std::string detail;  // certified conclusion, or the first witness of inequality
};
// Ideal-equality test behind the subalgebra collapse lemma: in B, compare the
// ideal generated by a_gens with the ideal of positive-degree Gamma-invariants
// of B; equality certifies that the subalgebra generated by a_gens is all of
// B^Gamma. a_gens must be Gamma-invariant in B (input_error naming offenders).
CollapseReport subalgebra_collapse_check(const std::vector<ExactPoly>& a_gens,
                                         const PresentedRing& b, const FiniteMatrixGroup& gamma,
                                         long budget = kDefaultPairBudget);

}  // namespace isoring
