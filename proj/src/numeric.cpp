#include "wplink/numeric.hpp"

#include "wplink/errors.hpp"

#include <limits>

namespace wplink {

long long to_ll(const Int& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        fail(errc::invalid_argument, "value " + v.str() + " exceeds 64-bit range");
    return static_cast<long long>(v);
}

const char* errc_name(errc c) {
    switch (c) {
        case errc::syntax_error: return "SyntaxError";
        case errc::not_homogeneous: return "NotHomogeneous";
        case errc::zero_polynomial: return "ZeroPolynomial";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::degree_not_divisible: return "DegreeNotDivisible";
        case errc::not_primitive: return "NotPrimitive";
        case errc::linear_term_present: return "LinearTermPresent";
        case errc::wrong_arity: return "WrongArity";
        case errc::contains_coordinate_hyperplane: return "ContainsCoordinateHyperplane";
        case errc::non_integral_genus: return "NonIntegralGenus";
        case errc::non_integral_betti: return "NonIntegralBetti";
        case errc::cap_exceeded: return "CapExceeded";
        case errc::even_k: return "EvenK";
        case errc::degenerate_system: return "DegenerateSystem";
        case errc::invalid_argument: return "InvalidArgument";
    }
    return "UnknownError";
}

} // namespace wplink
