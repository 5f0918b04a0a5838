#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pga::cli {

/// Runs one command. Returns the process exit code: 0 for success, equal
/// or member; 1 for unequal or non-member; 2 for any error. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pga::cli
