#include "wplink/families.hpp"

#include "wplink/ambient.hpp"
#include "wplink/errors.hpp"

namespace wplink {

namespace {

int exponent_of(long long e, const char* where) {
    if (e < 1 || e > 1000000)
        fail(errc::invalid_argument,
             std::string(where) + ": exponent " + std::to_string(e) + " out of range 1..1000000");
    return static_cast<int>(e);
}

Monomial mono(int e0, int e1, int e2, int e3) { return Monomial{{e0, e1, e2, e3}, 1}; }

} // namespace

FamilyInstance case_I(long long k) {
    if (k % 2 == 0) fail(errc::even_k, "case I needs an odd parameter, got " + std::to_string(k));
    if (k < 3)
        fail(errc::invalid_argument,
             "case I needs k >= 3 (k = 1 has linear terms), got " + std::to_string(k));
    int ke = exponent_of(k, "case_I");
    FamilyInstance inst;
    inst.family = "case-I";
    inst.params = {k};
    inst.polynomial = WeightedPolynomial::make(
        {k, 2 * k, 4, 4}, {mono(4, 0, 0, 0), mono(0, 2, 0, 0), mono(0, 0, ke, 0), mono(0, 0, 0, ke)});
    inst.expected.b2 = k - 1;
    inst.expected.index_gap = k - 8;
    inst.expected.branch = {{2, Int(0)}};
    return inst;
}

FamilyInstance case_II(long long k) {
    if (k < 1) fail(errc::invalid_argument, "case II needs k >= 1, got " + std::to_string(k));
    if (k > 100000) fail(errc::invalid_argument, "case II parameter too large");
    long long a = 4 * k + 1, b = 4 * k + 3;
    FamilyInstance inst;
    inst.family = "case-II";
    inst.params = {k};
    inst.polynomial = WeightedPolynomial::make(
        {a * b, 2 * b, 4 * a, 8 * a},
        {mono(4, 0, 0, 0), mono(0, exponent_of(8 * k + 2, "case_II"), 0, 0),
         mono(0, 0, exponent_of(4 * k + 1, "case_II"), 1),
         mono(0, 0, 1, exponent_of(2 * k + 1, "case_II"))});
    inst.expected.b2 = 2 * k + 1;
    inst.expected.index_gap = 8 * k * (8 * k + 2) - b * b;
    inst.expected.branch = {{2, Int(0)}, {a, Int(0)}};
    return inst;
}

WeightSystem cyclic_weights(long long a0, long long a1, long long a2, long long a3) {
    std::vector<long long> a = {a0, a1, a2, a3};
    for (long long e : a)
        if (e < 1)
            fail(errc::invalid_argument, "cyclic exponents must be positive");
    if (a0 == 1 && a1 == 1 && a2 == 1 && a3 == 1)
        return WeightSystem({1, 1, 1, 1}, 2);

    // Solve a_i w_i + w_{i+1} = d exactly with d = 1; the loop closes iff
    // w0 = (1 - a3 + a3 a2 - a3 a2 a1) / (1 - a3 a2 a1 a0), and the
    // denominator vanishes only in the all-ones case handled above.
    Int A0 = a0, A1 = a1, A2 = a2, A3 = a3;
    // Plain division: the two-argument rational constructor requires a
    // positive denominator, and this one is negative for most inputs.
    Rat w0 = Rat(Int(1) - A3 + A3 * A2 - A3 * A2 * A1) /
             Rat(Int(1) - A3 * A2 * A1 * A0);
    Rat w1 = 1 - Rat(A0) * w0;
    Rat w2 = 1 - Rat(A1) * w1;
    Rat w3 = 1 - Rat(A2) * w2;
    std::vector<Rat> w = {w0, w1, w2, w3};
    for (const Rat& x : w)
        if (x <= 0)
            fail(errc::degenerate_system, "the loop system has no positive weight solution");

    Int scale = 1;
    for (const Rat& x : w) scale = lcm_int(scale, denominator(x));
    std::vector<long long> wi;
    for (const Rat& x : w) wi.push_back(to_ll(numerator(x) * (scale / denominator(x))));
    return normalize(WeightSystem(wi, to_ll(scale)));
}

FamilyInstance cyclic_instance(long long a0, long long a1, long long a2, long long a3) {
    WeightSystem ws = cyclic_weights(a0, a1, a2, a3);
    FamilyInstance inst;
    inst.family = "cyclic";
    inst.params = {a0, a1, a2, a3};
    inst.polynomial = WeightedPolynomial::make(
        ws.weights, {mono(exponent_of(a0, "cyclic"), 1, 0, 0), mono(0, exponent_of(a1, "cyclic"), 1, 0),
                     mono(0, 0, exponent_of(a2, "cyclic"), 1),
                     mono(1, 0, 0, exponent_of(a3, "cyclic"))});
    return inst;
}

} // namespace wplink
