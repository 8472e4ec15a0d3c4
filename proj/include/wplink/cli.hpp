#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wplink::cli {

/// Entry point behind the `wplink` binary, separated for testing.
/// Exit codes: 0 success, 1 invalid input, 2 a requested certification
/// failed, 3 internal integrality assertion.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wplink::cli
