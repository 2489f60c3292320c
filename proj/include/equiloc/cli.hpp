#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace equiloc::cli {

// Exit codes: 0 success, 1 domain error, 2 malformed input. Errors are
// written to err as a single JSON object {"error": kind, "message": text}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace equiloc::cli
