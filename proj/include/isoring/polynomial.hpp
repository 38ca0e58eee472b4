#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace isoring {

using Int = mpz_class;
using Rat = mpq_class;

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ungraded_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct uncovered_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exponent vector; negative entries are allowed outside Groebner contexts.
using Monomial = std::vector<int>;

Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b, nonnegative exponents
Monomial mono_div(const Monomial& b, const Monomial& a);  // b / a
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);
long mono_degree(const Monomial& a, const std::vector<long>& weights);

struct MonomialOrder {
    enum class Kind { grevlex, lex, elim };
    Kind kind = Kind::grevlex;
    // Per-variable weights for the graded comparison (default all 1).
    std::vector<long> weights;
    // For elim: the first `block` variables are eliminated (they dominate).
    int block = 0;

    static MonomialOrder make_grevlex(int nvars);
    static MonomialOrder make_lex(int nvars);
    static MonomialOrder make_elim(int nvars, int block);
    static MonomialOrder make_weighted_grevlex(std::vector<long> weights);

    // true if a > b
    bool greater(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are stored under the structural (lexicographic vector) compare so the
// representation is canonical independently of any monomial order.
struct ExactPoly {
    int nvars = 0;
    std::map<Monomial, Rat> terms;

    ExactPoly() = default;
    explicit ExactPoly(int n) : nvars(n) {}

    static ExactPoly zero(int n) { return ExactPoly(n); }
    static ExactPoly constant(int n, const Rat& c);
    static ExactPoly variable(int n, int i, int power = 1);
    static ExactPoly monomial(Monomial m, const Rat& c);

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const;
    Rat constant_value() const;  // requires is_constant()

    void add_term(const Monomial& m, const Rat& c);

    ExactPoly operator+(const ExactPoly& o) const;
    ExactPoly operator-(const ExactPoly& o) const;
    ExactPoly operator*(const ExactPoly& o) const;
    ExactPoly operator-() const;
    ExactPoly scaled(const Rat& c) const;
    bool operator==(const ExactPoly& o) const { return nvars == o.nvars && terms == o.terms; }

    ExactPoly pow(int k) const;

    // Leading data with respect to an order (linear scan; fine at this scale).
    const Monomial& leading_monomial(const MonomialOrder& ord) const;
    Rat leading_coeff(const MonomialOrder& ord) const;
    ExactPoly make_monic(const MonomialOrder& ord) const;

    // Substitute variable i by the given polynomials (all in the same target ring).
    // Every exponent must be nonnegative unless the substitute is a plain variable.
    ExactPoly substitute(const std::vector<ExactPoly>& images) const;

    // Apply an integer matrix to every exponent vector: e -> M e (rows x cols = m x nvars).
    ExactPoly apply_lattice_map(const std::vector<std::vector<Int>>& mat) const;

    Rat evaluate(const std::vector<Rat>& point) const;

    long total_degree() const;  // max weight-1 degree, -1 for zero
    long weighted_degree(const std::vector<long>& weights) const;
    bool is_homogeneous(const std::vector<long>& weights) const;
    bool has_negative_exponent() const;
    bool integral_coefficients() const;

    // Sum of coefficients (image of every variable under v -> 1).
    Rat augmentation() const;
};

// Text grammar: terms joined by '+'/'-', each term 'c*v1^e1*v2^e2' with integer
// or rational 'p/q' coefficient; exponents may be negative. Example:
//   3*t1^2*t2^-1 + 1
std::string poly_to_string(const ExactPoly& p, const std::vector<std::string>& names);
ExactPoly poly_from_string(const std::string& text, const std::vector<std::string>& names);

// Fails (input_error) on repeated names or names that could not be tokenised.
void validate_var_names(const std::vector<std::string>& names);

}  // namespace isoring
