#include "wplink/divisor_ring.hpp"

#include "wplink/errors.hpp"

#include <sstream>

namespace wplink {

DivisorElement DivisorElement::lambda(const Int& index, const Rat& coeff) {
    if (index < 1) fail(errc::invalid_argument, "divisor index must be >= 1, got " + index.str());
    DivisorElement e;
    e.add_term(index, coeff);
    return e;
}

void DivisorElement::add_term(const Int& index, const Rat& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(index);
    if (it == terms_.end()) {
        terms_.emplace(index, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

DivisorElement DivisorElement::operator+(const DivisorElement& o) const {
    DivisorElement r = *this;
    for (const auto& [idx, c] : o.terms_) r.add_term(idx, c);
    return r;
}

DivisorElement DivisorElement::operator-(const DivisorElement& o) const {
    DivisorElement r = *this;
    for (const auto& [idx, c] : o.terms_) r.add_term(idx, -c);
    return r;
}

DivisorElement DivisorElement::operator*(const DivisorElement& o) const {
    // Bilinear extension of Lambda_a Lambda_b = gcd(a,b) Lambda_{lcm(a,b)};
    // Lambda_1 is the identity since gcd(1,b) = 1 and lcm(1,b) = b.
    DivisorElement r;
    for (const auto& [a, ca] : terms_) {
        for (const auto& [b, cb] : o.terms_) {
            Int g = gcd_int(a, b);
            r.add_term(a / g * b, ca * cb * Rat(g));
        }
    }
    return r;
}

DivisorElement DivisorElement::operator*(const Rat& scalar) const {
    DivisorElement r;
    if (scalar == 0) return r;
    for (const auto& [idx, c] : terms_) r.terms_.emplace(idx, c * scalar);
    return r;
}

Rat DivisorElement::coefficient_sum() const {
    Rat s = 0;
    for (const auto& [idx, c] : terms_) s += c;
    return s;
}

bool DivisorElement::all_integral() const {
    for (const auto& [idx, c] : terms_)
        if (!is_integer(c)) return false;
    return true;
}

std::string DivisorElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest index first reads like a polynomial in descending order.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rat& c = it->second;
        bool neg = c < 0;
        Rat a = neg ? Rat(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (a != 1) {
            if (denominator(a) == 1)
                os << numerator(a).str();
            else
                os << "(" << numerator(a).str() << "/" << denominator(a).str() << ")";
        }
        os << "L" << it->first.str();
    }
    return os.str();
}

DivisorElement lambda_mul(const DivisorElement& a, const DivisorElement& b) { return a * b; }

std::vector<ReducedRatio> reduced_ratios(const WeightSystem& ws) {
    std::vector<ReducedRatio> out;
    for (long long w : ws.weights) {
        long long g = std::gcd(ws.degree, w);
        out.push_back({Int(ws.degree / g), Int(w / g)});
    }
    return out;
}

DivisorElement alexander_divisor(const WeightSystem& ws) {
    require_arity(ws, 4, "alexander_divisor");
    auto ratios = reduced_ratios(ws);
    DivisorElement prod = DivisorElement::one();
    bool integral_case = true;
    for (const ReducedRatio& r : ratios) {
        if (r.v != 1) integral_case = false;
        DivisorElement factor = DivisorElement::lambda(r.u, Rat(Int(1), r.v));
        factor.add_term(1, -1);
        prod = prod * factor;
    }
    if (integral_case && !prod.all_integral())
        fail(errc::non_integral_betti,
             "expansion with unit denominators must have integral coefficients");
    return prod;
}

long long betti2(const WeightSystem& ws) {
    Rat s = alexander_divisor(ws).coefficient_sum();
    if (!is_integer(s) || s < 0) {
        std::string txt = numerator(s).str();
        if (denominator(s) != 1) txt += "/" + denominator(s).str();
        fail(errc::non_integral_betti,
             "coefficient sum " + txt + " is not a nonnegative integer for " + ws.str());
    }
    return to_ll(numerator(s));
}

Int oracle_lcm(const WeightSystem& ws) {
    Int L = 1;
    for (const ReducedRatio& r : reduced_ratios(ws)) L = lcm_int(L, r.u);
    return L;
}

long long betti2_oracle(const WeightSystem& ws, long long cap) {
    require_arity(ws, 4, "betti2_oracle");
    Int L_big = oracle_lcm(ws);
    if (L_big > cap)
        fail(errc::cap_exceeded, "lcm of reduced numerators is " + L_big.str() +
                                     ", above the cap " + std::to_string(cap));
    const long long L = to_ll(L_big);

    // Work in the group ring of Z/L: entry s stands for the root class
    // <s/L>.  Lambda_j maps to the indicator of the subgroup of index L/j.
    // Multiplying an accumulator by (1/v) Lambda_u - <0> needs only the
    // residue-class sums mod L/u:
    //   (acc * Lambda_u)[t] = sum of acc over the class t mod (L/u).
    auto ratios = reduced_ratios(ws);
    std::vector<Rat> acc(static_cast<std::size_t>(L), Rat(0));
    {
        long long u = to_ll(ratios[0].u);
        long long step = L / u;
        Rat inv_v = Rat(Int(1), ratios[0].v);
        for (long long a = 0; a < u; ++a) acc[static_cast<std::size_t>(a * step)] += inv_v;
        acc[0] -= 1;
    }
    for (std::size_t i = 1; i < 4; ++i) {
        long long u = to_ll(ratios[i].u);
        long long g = L / u;
        Rat inv_v = Rat(Int(1), ratios[i].v);
        std::vector<Rat> class_sum(static_cast<std::size_t>(g), Rat(0));
        for (long long t = 0; t < L; ++t)
            class_sum[static_cast<std::size_t>(t % g)] += acc[static_cast<std::size_t>(t)];
        std::vector<Rat> next(static_cast<std::size_t>(L));
        for (long long t = 0; t < L; ++t)
            next[static_cast<std::size_t>(t)] =
                inv_v * class_sum[static_cast<std::size_t>(t % g)] -
                acc[static_cast<std::size_t>(t)];
        acc.swap(next);
    }

    const Rat& b = acc[0];
    if (!is_integer(b) || b < 0)
        fail(errc::non_integral_betti, "oracle produced a non-integral multiplicity for " + ws.str());
    return to_ll(numerator(b));
}

} // namespace wplink
