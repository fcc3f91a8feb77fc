#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace catmon::cli {

/// Runs the command line tool on args (without the program name). Returns
/// 0 on success, 1 when a property check fails, 2 on bad input.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace catmon::cli
