#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ivpp::cli {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 when `verify` finds a failing check and 2 on usage or domain errors,
/// which are reported on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ivpp::cli
