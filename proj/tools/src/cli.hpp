#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace invqm::cli {

inline constexpr int schema_version = 1;

/// Exit codes: 0 success, 1 internal error, 2 usage or precondition failure.
int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);
/// argv[0] is supplied internally.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace invqm::cli
