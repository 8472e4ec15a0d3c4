#pragma once

#include "wplink/polynomial.hpp"
#include "wplink/weight_system.hpp"

#include <string>
#include <vector>

namespace wplink {

/// `support` tests the three conditions against the monomials actually
/// present in f; `linear_system` tests them against all of O(d).  A support
/// pass implies a linear-system pass for the same (weights, degree).
enum class QsMode { support, linear_system };

const char* to_string(QsMode m);

struct QsFailure {
    int condition = 0;              // 1, 2 or 3
    std::vector<int> indices;       // the variable(s) the condition is about
    std::string detail;

    bool operator==(const QsFailure& o) const = default;
};

struct QsWitness {
    int condition = 0;
    std::vector<int> indices;
    std::vector<std::vector<int>> monomials;   // exponent vectors, degree d each

    bool operator==(const QsWitness& o) const = default;
};

struct QuasismoothVerdict {
    bool passed = false;
    QsMode mode = QsMode::support;
    std::vector<QsFailure> failures;
    std::vector<QsWitness> witnesses;
};

/// Quasismoothness test for a 4-variable weighted homogeneous polynomial
/// without linear terms.  The cone over the hypersurface is smooth away from
/// the origin iff
///   1. every variable z_i appears in a monomial z_i^m (m >= 2) or
///      z_i^m z_j (m >= 1, j != i) of degree d;
///   2. every pair {i,j} with h = gcd(w_i,w_j) > 1 and h | d carries a
///      monomial supported in {i,j} of degree d (pure powers count; pairs
///      with h not dividing d admit no such monomial for any member of the
///      degree-d system and are exempt);
///   3. every pair {i,j} carries either a degree-d monomial supported in
///      {i,j}, or two degree-d monomials z_i^{c_i} z_j^{c_j} z_k and
///      z_i^{e_i} z_j^{e_j} z_l with k != l the two remaining variables.
/// All witnesses are reported; failures carry the condition and indices.
QuasismoothVerdict check_quasismooth(const WeightedPolynomial& f,
                                     QsMode mode = QsMode::support);

/// Weights-only form: linear_system mode over O(d).  Raises
/// linear_term_present if some w_i = d (the degree-d system contains a
/// linear monomial, which the criteria above assume away).
QuasismoothVerdict check_quasismooth(const WeightSystem& ws);

} // namespace wplink
