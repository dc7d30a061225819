#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pbdom::cli {

/// Runs one command line (without the program name). JSON goes to `out`,
/// diagnostics to `err`. Returns the process exit status: 0 success or
/// verdict true, 1 verdict false, 2 usage/parse/structural/resource errors,
/// 3 failed verification.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pbdom::cli
