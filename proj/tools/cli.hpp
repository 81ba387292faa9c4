#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace plumblat::cli {

/// Runs `plumb-lattice` with `args` (program name excluded). Returns 0 when the
/// analysis ran, whatever its verdict, and nonzero on bad input or I/O errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plumblat::cli
