#pragma once

#include "wplink/numeric.hpp"
#include "wplink/weight_system.hpp"

#include <string>
#include <vector>

namespace wplink {

/// One term: exponent vector plus a nonzero exact rational coefficient.
struct Monomial {
    std::vector<int> exponents;
    Rat coefficient = 1;

    int total_degree() const;
    bool operator==(const Monomial& o) const = default;
};

/// Weighted degree sum(e_i * w_i).  Lengths must agree.
long long monomial_degree(const std::vector<int>& exponents,
                          const std::vector<long long>& weights);

/// A weighted homogeneous polynomial: distinct exponent vectors, all of the
/// same weighted degree, stored in descending lexicographic exponent order.
struct WeightedPolynomial {
    WeightSystem system;            // weights plus the common degree
    std::vector<Monomial> monomials;

    /// Validates homogeneity against `weights`, merges duplicate exponent
    /// vectors, drops cancelled terms, infers the degree from the first term.
    static WeightedPolynomial make(std::vector<long long> weights,
                                   std::vector<Monomial> terms);

    bool operator==(const WeightedPolynomial& o) const = default;

    /// True if some monomial has a nonzero exponent at `var`.
    bool uses_variable(std::size_t var) const;

    /// True if some monomial has total degree 1.
    bool has_linear_term() const;
};

/// Parse a polynomial in the variables x,y,z,t (or z0..z3); '^' exponents,
/// optional '*', optional integer (or p/q) coefficients.  The arity is the
/// length of `weights`.
WeightedPolynomial parse_polynomial(const std::string& text,
                                    const std::vector<long long>& weights);

/// Canonical rendering; parse(to_string(p)) reproduces p exactly.
std::string to_string(const WeightedPolynomial& p);

/// All exponent vectors e >= 0 with sum(e_i w_i) = d, in descending
/// lexicographic order.
std::vector<std::vector<int>> degree_d_monomials(const std::vector<long long>& weights,
                                                 long long d);

} // namespace wplink
