#include "wplink/topology.hpp"

#include "wplink/ambient.hpp"
#include "wplink/errors.hpp"

#include <numeric>
#include <sstream>

namespace wplink {

Int curve_genus(const std::vector<long long>& weights, long long degree) {
    if (weights.size() != 3)
        fail(errc::wrong_arity, "curve_genus needs 3 weights, got " +
                                    std::to_string(weights.size()));
    for (long long w : weights)
        if (w <= 0) fail(errc::invalid_argument, "weights must be positive");
    if (degree <= 0) fail(errc::invalid_argument, "degree must be positive");

    const Int d = degree;
    Rat two_g = Rat(d * d, Int(weights[0]) * weights[1] * weights[2]);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            two_g -= Rat(d * std::gcd(weights[i], weights[j]),
                         Int(weights[i]) * weights[j]);
    for (std::size_t i = 0; i < 3; ++i)
        two_g += Rat(std::gcd(degree, weights[i]), weights[i]);
    two_g -= 1;

    if (!is_integer(two_g) || two_g < 0 || numerator(two_g) % 2 != 0) {
        std::ostringstream os;
        os << "2g = " << two_g << " is not a nonnegative even integer for degree " << degree
           << " in P(" << weights[0] << "," << weights[1] << "," << weights[2] << ")";
        fail(errc::non_integral_genus, os.str());
    }
    return numerator(two_g) / 2;
}

namespace {

template <typename OmitsVariable>
std::vector<BranchComponent> branch_components(const std::vector<long long>& w, long long d,
                                               OmitsVariable omits_variable) {
    std::vector<BranchComponent> out;
    for (std::size_t i = 0; i < 4; ++i) {
        long long m = 0;
        for (std::size_t j = 0; j < 4; ++j)
            if (j != i) m = std::gcd(m, w[j]);
        if (m <= 1) continue;

        if (!omits_variable(i))
            fail(errc::contains_coordinate_hyperplane,
                 "every degree-" + std::to_string(d) + " monomial uses z" + std::to_string(i) +
                     "; the hypersurface contains {z" + std::to_string(i) + " = 0}");

        // Restrict to {z_i = 0}, drop the variable, normalize: the remaining
        // weights share exactly m, and every monomial degree on them is a
        // multiple of m, so the division is exact.
        BranchComponent c;
        c.index = static_cast<int>(i);
        c.m = m;
        for (std::size_t j = 0; j < 4; ++j)
            if (j != i) c.curve_weights.push_back(w[j] / m);
        c.curve_degree = d / m;
        c.genus = curve_genus(c.curve_weights, c.curve_degree);
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace

std::vector<BranchComponent> branch_divisor(const WeightedPolynomial& f) {
    require_arity(f.system, 4, "branch_divisor");
    return branch_components(f.system.weights, f.system.degree, [&](std::size_t i) {
        for (const Monomial& m : f.monomials)
            if (m.exponents[i] == 0) return true;
        return false;
    });
}

std::vector<BranchComponent> branch_divisor(const WeightSystem& ws) {
    require_arity(ws, 4, "branch_divisor");
    return branch_components(ws.weights, ws.degree, [&](std::size_t i) {
        std::vector<long long> rest;
        for (std::size_t j = 0; j < 4; ++j)
            if (j != i) rest.push_back(ws.weights[j]);
        // Some degree-d monomial must omit z_i: a three-weight representation.
        for (long long a = 0; a * rest[0] <= ws.degree; ++a) {
            long long r1 = ws.degree - a * rest[0];
            for (long long b = 0; b * rest[1] <= r1; ++b)
                if ((r1 - b * rest[1]) % rest[2] == 0) return true;
        }
        return false;
    });
}

HomologySummary second_homology(long long b2, const std::vector<BranchComponent>& components) {
    if (b2 < 0) fail(errc::invalid_argument, "negative rank");
    HomologySummary h;
    h.rank = b2;
    for (const BranchComponent& c : components)
        if (c.genus > 0) h.torsion.push_back({c.m, 2 * c.genus});
    return h;
}

} // namespace wplink
