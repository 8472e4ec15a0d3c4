#pragma once

#include "wplink/errors.hpp"

#include <string>
#include <vector>

namespace wplink {

/// A tuple of positive integer weights together with a positive degree.
/// Arities 2..4 are accepted at this level; individual operations impose the
/// arity they need (links use 4 weights, branch curves use 3).
struct WeightSystem {
    std::vector<long long> weights;
    long long degree = 0;

    WeightSystem() = default;
    WeightSystem(std::vector<long long> w, long long d);

    std::size_t arity() const { return weights.size(); }
    long long sum() const;

    bool operator==(const WeightSystem& o) const = default;

    /// "P(9,18,4,4) degree 36" style display.
    std::string str() const;
};

void require_arity(const WeightSystem& ws, std::size_t n, const char* where);

} // namespace wplink
