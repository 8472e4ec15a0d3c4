#pragma once

#include "wplink/numeric.hpp"
#include "wplink/polynomial.hpp"
#include "wplink/weight_system.hpp"

#include <vector>

namespace wplink {

/// One component of the branch divisor: the curve cut on {z_index = 0},
/// carrying ramification m = gcd of the other three weights.
struct BranchComponent {
    int index = -1;
    long long m = 1;                        // ramification order, > 1
    std::vector<long long> curve_weights;   // 3 weights, primitive
    long long curve_degree = 0;
    Int genus = 0;

    bool operator==(const BranchComponent& o) const = default;
};

/// Genus of the general degree-d curve in P(w0,w1,w2), from
///   2g = d^2/(w0 w1 w2) - d * sum_{i<j} gcd(w_i,w_j)/(w_i w_j)
///        + sum_i gcd(d,w_i)/w_i - 1,
/// evaluated in exact rationals.  Raises non_integral_genus unless the right
/// side is a nonnegative even integer.
Int curve_genus(const std::vector<long long>& weights, long long degree);

/// Branch components of the hypersurface {f = 0}: for every i whose
/// complementary weights share m_i = gcd > 1, check that f does not vanish on
/// {z_i = 0} (raises contains_coordinate_hyperplane otherwise), restrict,
/// drop the variable, normalize by the overall gcd (= m_i), compute genus.
std::vector<BranchComponent> branch_divisor(const WeightedPolynomial& f);

/// General-member form: containment is tested against O(d) (some degree-d
/// monomial must omit z_i).
std::vector<BranchComponent> branch_divisor(const WeightSystem& ws);

struct TorsionPart {
    long long order = 1;    // the ramification m
    Int exponent = 0;       // 2g copies of Z/m

    bool operator==(const TorsionPart& o) const = default;
};

/// H_2 of the link: Z^rank plus, for every branch component of positive
/// genus, (Z/m)^{2g}.
struct HomologySummary {
    long long rank = 0;
    std::vector<TorsionPart> torsion;   // only positive-genus components, by index order

    bool torsion_free() const { return torsion.empty(); }
    bool operator==(const HomologySummary& o) const = default;
};

HomologySummary second_homology(long long b2, const std::vector<BranchComponent>& components);

} // namespace wplink
