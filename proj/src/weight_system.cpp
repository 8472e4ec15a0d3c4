#include "wplink/weight_system.hpp"

#include <numeric>
#include <sstream>

namespace wplink {

WeightSystem::WeightSystem(std::vector<long long> w, long long d)
    : weights(std::move(w)), degree(d) {
    if (weights.size() < 2 || weights.size() > 4)
        fail(errc::wrong_arity,
             "weight system needs 2..4 weights, got " + std::to_string(weights.size()));
    for (long long wi : weights)
        if (wi <= 0)
            fail(errc::invalid_argument, "weights must be positive, got " + std::to_string(wi));
    if (degree <= 0)
        fail(errc::invalid_argument, "degree must be positive, got " + std::to_string(degree));
}

long long WeightSystem::sum() const {
    long long s = 0;
    for (long long wi : weights) s += wi;
    return s;
}

std::string WeightSystem::str() const {
    std::ostringstream os;
    os << "P(";
    for (std::size_t i = 0; i < weights.size(); ++i)
        os << (i ? "," : "") << weights[i];
    os << ") degree " << degree;
    return os.str();
}

void require_arity(const WeightSystem& ws, std::size_t n, const char* where) {
    if (ws.arity() != n)
        fail(errc::wrong_arity, std::string(where) + " needs " + std::to_string(n) +
                                    " weights, got " + std::to_string(ws.arity()));
}

} // namespace wplink
