#pragma once

#include "wplink/polynomial.hpp"
#include "wplink/topology.hpp"
#include "wplink/weight_system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wplink {

/// Closed-form expectations attached to a generated instance; the pipeline
/// must reproduce every value that is present.
struct FamilyExpected {
    std::optional<long long> b2;
    std::optional<long long> index_gap;
    std::vector<std::pair<long long, Int>> branch;   // (ramification m, genus)
};

struct FamilyInstance {
    std::string family;                 // "case-I", "case-II", "cyclic"
    std::vector<long long> params;
    WeightedPolynomial polynomial;
    FamilyExpected expected;
};

/// x^4 + y^2 + z^k + t^k in P(k, 2k, 4, 4), degree 4k, for odd k >= 3.
/// Expected: b2 = k-1, one branch component (m=2, genus 0), gap k-8.
FamilyInstance case_I(long long k);

/// x^4 + y^{8k+2} + z^{4k+1} t + t^{2k+1} z in
/// P((4k+1)(4k+3), 2(4k+3), 4(4k+1), 8(4k+1)), degree 4(4k+1)(4k+3), k >= 1.
/// Expected: b2 = 2k+1, branch (m=2, g=0) and (m=4k+1, g=0),
/// gap 8k(8k+2) - (4k+3)^2.
FamilyInstance case_II(long long k);

/// Primitive positive solution of the loop system a_i w_i + w_{i+1} = d
/// (indices mod 4).  All exponents 1 degenerates to the quadric (1,1,1,1; 2);
/// a system without a positive solution raises degenerate_system.
WeightSystem cyclic_weights(long long a0, long long a1, long long a2, long long a3);

/// The loop polynomial x^{a0} y + y^{a1} z + z^{a2} t + t^{a3} x on the
/// weights from cyclic_weights.
FamilyInstance cyclic_instance(long long a0, long long a1, long long a2, long long a3);

} // namespace wplink
