#include "wplink/ambient.hpp"

#include "wplink/errors.hpp"

#include <algorithm>
#include <numeric>

namespace wplink {

WeightSystem normalize(const WeightSystem& ws) {
    long long g = gcd_all(ws.weights);
    if (g == 1) return ws;
    if (ws.degree % g != 0)
        fail(errc::degree_not_divisible, "gcd " + std::to_string(g) + " of weights does not divide degree " +
                                             std::to_string(ws.degree));
    std::vector<long long> w = ws.weights;
    for (long long& wi : w) wi /= g;
    return WeightSystem(std::move(w), ws.degree / g);
}

WellFormedResult is_well_formed_space(const std::vector<long long>& weights) {
    if (gcd_all(weights) != 1)
        fail(errc::not_primitive, "weights share a common factor " +
                                      std::to_string(gcd_all(weights)));
    for (std::size_t i = 0; i < weights.size(); ++i) {
        long long g = 0;
        for (std::size_t j = 0; j < weights.size(); ++j)
            if (j != i) g = std::gcd(g, weights[j]);
        if (g > 1) return {false, static_cast<int>(i), g};
    }
    return {};
}

std::vector<Stratum> singular_strata(const std::vector<long long>& weights) {
    if (gcd_all(weights) != 1)
        fail(errc::not_primitive, "weights share a common factor " +
                                      std::to_string(gcd_all(weights)));
    const std::size_t n = weights.size();
    std::vector<Stratum> out;
    // Proper nonempty zero-sets; isotropy order = gcd of the surviving weights.
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        long long g = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (!(mask & (1u << j))) g = std::gcd(g, weights[j]);
        if (g <= 1) continue;
        Stratum s;
        s.order = g;
        for (std::size_t j = 0; j < n; ++j)
            if (mask & (1u << j)) s.zero_set.push_back(static_cast<int>(j));
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const Stratum& a, const Stratum& b) {
        if (a.zero_set.size() != b.zero_set.size()) return a.zero_set.size() < b.zero_set.size();
        return a.zero_set < b.zero_set;
    });
    return out;
}

namespace {

/// Is some a*wk + b*wl = d solvable with a,b >= 0?
bool pair_representable(long long wk, long long wl, long long d) {
    if (d < 0) return false;
    for (long long a = 0; a * wk <= d; ++a)
        if ((d - a * wk) % wl == 0) return true;
    return false;
}

template <typename HasPairMonomial>
HypersurfaceWellFormed check_hypersurface(const std::vector<long long>& w, long long d,
                                          HasPairMonomial has_pair_monomial) {
    HypersurfaceWellFormed r;
    WellFormedResult amb = is_well_formed_space(w);
    if (!amb.ok) {
        r.ok = false;
        r.ambient_failure = amb;
        return r;
    }
    const std::size_t n = w.size();
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = k + 1; l < n; ++l) {
            long long h = std::gcd(w[k], w[l]);
            // Pairs whose gcd misses the degree cannot carry any degree-d
            // monomial at all; the corresponding (rational) stratum lies on
            // every hypersurface of this degree and is not counted against
            // well-formedness.
            if (h <= 1 || d % h != 0) continue;
            if (has_pair_monomial(k, l)) continue;
            r.ok = false;
            Stratum s;
            s.order = h;
            for (std::size_t j = 0; j < n; ++j)
                if (j != k && j != l) s.zero_set.push_back(static_cast<int>(j));
            r.contained_stratum = std::move(s);
            return r;
        }
    }
    return r;
}

} // namespace

HypersurfaceWellFormed is_well_formed_hypersurface(const WeightedPolynomial& f) {
    require_arity(f.system, 4, "is_well_formed_hypersurface");
    return check_hypersurface(f.system.weights, f.system.degree, [&](std::size_t k, std::size_t l) {
        for (const Monomial& m : f.monomials) {
            bool on_pair = true;
            for (std::size_t j = 0; j < m.exponents.size(); ++j)
                if (j != k && j != l && m.exponents[j] != 0) { on_pair = false; break; }
            if (on_pair) return true;
        }
        return false;
    });
}

HypersurfaceWellFormed is_well_formed_hypersurface(const WeightSystem& ws) {
    require_arity(ws, 4, "is_well_formed_hypersurface");
    return check_hypersurface(ws.weights, ws.degree, [&](std::size_t k, std::size_t l) {
        return pair_representable(ws.weights[k], ws.weights[l], ws.degree);
    });
}

} // namespace wplink
