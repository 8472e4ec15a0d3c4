#include "wplink/quasismooth.hpp"

#include "wplink/errors.hpp"

#include <numeric>
#include <optional>
#include <sstream>

namespace wplink {

const char* to_string(QsMode m) {
    return m == QsMode::support ? "support" : "linear_system";
}

namespace {

using ExpVec = std::vector<int>;

/// Answers the three monomial-existence questions either against the support
/// of a concrete polynomial or against the whole degree-d system.
class MonomialSource {
public:
    MonomialSource(const std::vector<long long>& w, long long d,
                   const std::vector<Monomial>* support)
        : w_(w), d_(d), support_(support) {}

    /// z_i^m (m >= 2) or z_i^m z_j (m >= 1, j != i) of degree d; scans j
    /// ascending with j == i meaning the pure power.
    std::optional<ExpVec> vertex_monomial(std::size_t i) const {
        for (std::size_t j = 0; j < w_.size(); ++j) {
            if (support_) {
                for (const Monomial& m : *support_) {
                    const ExpVec& e = m.exponents;
                    if (j == i) {
                        if (e[i] >= 2 && only_on(e, i, i)) return e;
                    } else if (e[i] >= 1 && e[j] == 1 && only_on(e, i, j)) {
                        return e;
                    }
                }
            } else {
                if (j == i) {
                    if (d_ % w_[i] == 0 && d_ / w_[i] >= 2)
                        return monomial(i, d_ / w_[i], i, 0);
                } else {
                    long long rest = d_ - w_[j];
                    if (rest >= 1 && rest % w_[i] == 0)
                        return monomial(i, rest / w_[i], j, 1);
                }
            }
        }
        return std::nullopt;
    }

    /// Any degree-d monomial supported in {i,j} (pure powers included).
    std::optional<ExpVec> pair_monomial(std::size_t i, std::size_t j) const {
        if (support_) {
            for (const Monomial& m : *support_)
                if (only_on(m.exponents, i, j)) return m.exponents;
            return std::nullopt;
        }
        for (long long a = 0; a * w_[i] <= d_; ++a) {
            long long rest = d_ - a * w_[i];
            if (rest % w_[j] == 0) return monomial(i, a, j, rest / w_[j]);
        }
        return std::nullopt;
    }

    /// z_i^c z_j^c' z_k of degree d with e_k exactly 1 and nothing outside
    /// {i,j,k}; c + c' >= 1 (a bare z_k would be a linear term).
    std::optional<ExpVec> pair_plus_one(std::size_t i, std::size_t j, std::size_t k) const {
        if (support_) {
            for (const Monomial& m : *support_) {
                const ExpVec& e = m.exponents;
                if (e[k] != 1) continue;
                bool ok = e[i] + e[j] >= 1;
                for (std::size_t v = 0; v < e.size() && ok; ++v)
                    if (v != i && v != j && v != k && e[v] != 0) ok = false;
                if (ok) return e;
            }
            return std::nullopt;
        }
        long long target = d_ - w_[k];
        if (target < 1) return std::nullopt;
        for (long long a = 0; a * w_[i] <= target; ++a) {
            long long rest = target - a * w_[i];
            if (rest % w_[j] == 0) {
                ExpVec e = monomial(i, a, j, rest / w_[j]);
                e[k] += 1;
                return e;
            }
        }
        return std::nullopt;
    }

private:
    static bool only_on(const ExpVec& e, std::size_t i, std::size_t j) {
        for (std::size_t v = 0; v < e.size(); ++v)
            if (v != i && v != j && e[v] != 0) return false;
        return true;
    }

    ExpVec monomial(std::size_t i, long long ei, std::size_t j, long long ej) const {
        ExpVec e(w_.size(), 0);
        e[i] += static_cast<int>(ei);
        e[j] += static_cast<int>(ej);
        return e;
    }

    const std::vector<long long>& w_;
    long long d_;
    const std::vector<Monomial>* support_;
};

QuasismoothVerdict run_check(const std::vector<long long>& w, long long d,
                             const std::vector<Monomial>* support, QsMode mode) {
    MonomialSource src(w, d, support);
    QuasismoothVerdict v;
    v.mode = mode;

    for (std::size_t i = 0; i < 4; ++i) {
        if (auto e = src.vertex_monomial(i)) {
            v.witnesses.push_back({1, {static_cast<int>(i)}, {*e}});
        } else {
            std::ostringstream os;
            os << "no degree-" << d << " monomial z" << i << "^m or z" << i << "^m*zj";
            v.failures.push_back({1, {static_cast<int>(i)}, os.str()});
        }
    }

    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            long long h = std::gcd(w[i], w[j]);
            // A pair gcd that misses d rules out every {i,j}-monomial for
            // every member of the system; the condition is inapplicable.
            if (h <= 1 || d % h != 0) continue;
            if (auto e = src.pair_monomial(i, j)) {
                v.witnesses.push_back({2, {static_cast<int>(i), static_cast<int>(j)}, {*e}});
            } else {
                std::ostringstream os;
                os << "gcd(w" << i << ",w" << j << ") = " << h
                   << " divides the degree but no degree-" << d << " monomial lives on {z"
                   << i << ",z" << j << "}";
                v.failures.push_back({2, {static_cast<int>(i), static_cast<int>(j)}, os.str()});
            }
        }
    }

    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            if (auto e = src.pair_monomial(i, j)) {
                v.witnesses.push_back({3, {static_cast<int>(i), static_cast<int>(j)}, {*e}});
                continue;
            }
            // Need both remaining variables to appear linearly over {i,j}.
            std::vector<std::size_t> rest;
            for (std::size_t k = 0; k < 4; ++k)
                if (k != i && k != j) rest.push_back(k);
            auto e1 = src.pair_plus_one(i, j, rest[0]);
            auto e2 = src.pair_plus_one(i, j, rest[1]);
            if (e1 && e2) {
                v.witnesses.push_back({3, {static_cast<int>(i), static_cast<int>(j)}, {*e1, *e2}});
            } else {
                std::ostringstream os;
                os << "pair {z" << i << ",z" << j << "}: no degree-" << d
                   << " monomial on the pair, and the outside variables are not both reachable"
                      " linearly";
                v.failures.push_back({3, {static_cast<int>(i), static_cast<int>(j)}, os.str()});
            }
        }
    }

    v.passed = v.failures.empty();
    return v;
}

} // namespace

QuasismoothVerdict check_quasismooth(const WeightedPolynomial& f, QsMode mode) {
    require_arity(f.system, 4, "check_quasismooth");
    if (f.has_linear_term())
        fail(errc::linear_term_present, "polynomial has a linear term");
    if (mode == QsMode::linear_system)
        return check_quasismooth(f.system);
    return run_check(f.system.weights, f.system.degree, &f.monomials, QsMode::support);
}

QuasismoothVerdict check_quasismooth(const WeightSystem& ws) {
    require_arity(ws, 4, "check_quasismooth");
    for (std::size_t i = 0; i < 4; ++i)
        if (ws.weights[i] == ws.degree)
            fail(errc::linear_term_present, "w" + std::to_string(i) + " equals the degree; the degree-" +
                                                std::to_string(ws.degree) +
                                                " system contains a linear monomial");
    return run_check(ws.weights, ws.degree, nullptr, QsMode::linear_system);
}

} // namespace wplink
