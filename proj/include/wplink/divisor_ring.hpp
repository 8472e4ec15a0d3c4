#pragma once

#include "wplink/numeric.hpp"
#include "wplink/weight_system.hpp"

#include <map>
#include <string>

namespace wplink {

/// Element of the rational divisor ring on roots of unity, written in the
/// basis Lambda_j = divisor of t^j - 1.  Products obey
///   Lambda_a * Lambda_b = gcd(a,b) * Lambda_{lcm(a,b)},
/// with Lambda_1 the identity.  Coefficients are exact rationals; indices are
/// arbitrary-precision (lcm growth must not overflow).  Zero coefficients are
/// never stored, so equality is representation equality.
class DivisorElement {
public:
    DivisorElement() = default;

    static DivisorElement lambda(const Int& index, const Rat& coeff = 1);
    static DivisorElement one() { return lambda(1); }

    void add_term(const Int& index, const Rat& coeff);

    DivisorElement operator+(const DivisorElement& o) const;
    DivisorElement operator-(const DivisorElement& o) const;
    DivisorElement operator*(const DivisorElement& o) const;
    DivisorElement operator*(const Rat& scalar) const;

    bool operator==(const DivisorElement& o) const { return terms_ == o.terms_; }

    const std::map<Int, Rat>& terms() const { return terms_; }

    /// Sum of every coefficient, the Lambda_1 constant included.  Each
    /// Lambda_j contains the root 1 exactly once, so this is the multiplicity
    /// of the eigenvalue 1 in the divisor.
    Rat coefficient_sum() const;

    bool all_integral() const;

    /// "7L36 - 7L18 + 7L9 + L4 - L2 + L1" style display.
    std::string str() const;

private:
    std::map<Int, Rat> terms_;
};

DivisorElement lambda_mul(const DivisorElement& a, const DivisorElement& b);

/// d/w_i in lowest terms.
struct ReducedRatio {
    Int u;  // numerator
    Int v;  // denominator

    bool operator==(const ReducedRatio& o) const = default;
};

std::vector<ReducedRatio> reduced_ratios(const WeightSystem& ws);

/// The Alexander-polynomial divisor of the 4-variable weighted homogeneous
/// link: product over i of ((1/v_i) Lambda_{u_i} - Lambda_1) with
/// u_i/v_i = d/w_i reduced.  When all v_i = 1 the expansion is asserted to be
/// integral.
DivisorElement alexander_divisor(const WeightSystem& ws);

/// Second Betti number of the link: the coefficient sum of the Alexander
/// divisor (multiplicity of eigenvalue 1 of the monodromy).  Raises
/// non_integral_betti if the sum is not a nonnegative integer.
long long betti2(const WeightSystem& ws);

/// Independent cross-check: expand the same product in the group ring of
/// Q/Z, sending Lambda_j to sum of <a/j> for 0 <= a < j, and read off the
/// coefficient of <0>.  Requires L = lcm(u_i) <= cap (raises cap_exceeded).
long long betti2_oracle(const WeightSystem& ws, long long cap = 1000000);

/// L = lcm of the reduced numerators u_i; the oracle enumerates Z/L.
Int oracle_lcm(const WeightSystem& ws);

} // namespace wplink
