#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lmlab::cli {

/// Runs one subcommand. Returns 0 on success, 1 when a result contradicts
/// --expect (or a check fails), 2 on usage and parameter errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lmlab::cli
