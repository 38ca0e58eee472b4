#pragma once

#include <string>
#include <vector>

#include "isoring/polynomial.hpp"

namespace isoring {

// Dense univariate polynomial over Q, coefficient of t^i at index i.
struct UniPoly {
    std::vector<Rat> c;

    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }
    static UniPoly constant(const Rat& v);
    static UniPoly one_minus_power(int d);  // 1 - t^d
    static UniPoly one_plus_power(int d);   // 1 + t^d

    void trim();
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    Rat coeff(int i) const { return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : Rat(0); }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    bool operator==(const UniPoly& o) const { return c == o.c; }

    // Exact division; returns false if the remainder is nonzero.
    bool divide_exact(const UniPoly& divisor, UniPoly& quotient) const;

    Rat evaluate(const Rat& x) const;
    std::string to_string(const std::string& var = "t") const;
};

// num / prod_{d in den} (1 - t^d), an exact rational generating function.
struct PoincareSeries {
    UniPoly num = UniPoly::constant(1);
    std::vector<int> den;  // multiset, kept sorted

    static PoincareSeries one();
    static PoincareSeries free_ring(const std::vector<int>& degrees);  // 1/prod(1-t^d)
    static PoincareSeries polynomial(UniPoly p);

    PoincareSeries operator*(const PoincareSeries& o) const;
    PoincareSeries operator+(const PoincareSeries& o) const;
    PoincareSeries operator-(const PoincareSeries& o) const;
    bool equals(const PoincareSeries& o) const;  // as rational functions

    // Cancel numerator factors against denominator factors (canonical form:
    // repeatedly remove (1-t^d) factors that divide the numerator, largest d first).
    PoincareSeries canonical() const;

    // Power series expansion coefficients up to degree k inclusive.
    std::vector<Rat> truncate(int k) const;

    // Value at t=1 when the rational function is regular there (pole_error otherwise).
    Rat eval_at_one() const;
    bool has_pole_at_one() const;

    std::string to_string(const std::string& var = "t") const;
    // Rendering used by text reports: factored form plus expansion to `k`.
    std::string render_with_truncation(int k, const std::string& var = "t") const;
};

// Convert P/Q (univariate rational function, Q(0) != 0) into PoincareSeries
// form with denominator a product of (1-t^d). Throws input_error if Q has a
// root that is not a root of unity (cannot happen for Molien inputs).
PoincareSeries rational_to_poincare(const UniPoly& P, const UniPoly& Q, int max_order);

UniPoly uni_gcd(UniPoly a, UniPoly b);

// Power-series coefficients of P/Q up to degree k (Q(0) != 0).
std::vector<Rat> series_coeffs(const UniPoly& P, const UniPoly& Q, int k);

}  // namespace isoring
