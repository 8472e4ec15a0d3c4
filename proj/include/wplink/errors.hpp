#pragma once

#include <stdexcept>
#include <string>

namespace wplink {

/// Machine-readable failure codes.  Everything a caller can trip over is one
/// of these; messages carry the offending values.
enum class errc {
    syntax_error,
    not_homogeneous,
    zero_polynomial,
    length_mismatch,
    degree_not_divisible,
    not_primitive,
    linear_term_present,
    wrong_arity,
    contains_coordinate_hyperplane,
    non_integral_genus,   // internal assertion: genus formula must yield 2g in 2*Z>=0
    non_integral_betti,   // internal assertion: coefficient sum must be a nonnegative integer
    cap_exceeded,
    even_k,
    degenerate_system,
    invalid_argument,
};

const char* errc_name(errc c);

class DomainError : public std::runtime_error {
public:
    DomainError(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const { return code_; }

    /// True for the two integrality assertions that must never fire on valid
    /// input; the CLI maps them to a distinct exit code.
    bool internal() const {
        return code_ == errc::non_integral_genus || code_ == errc::non_integral_betti;
    }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
    throw DomainError(code, msg);
}

} // namespace wplink
