#pragma once

#include <iosfwd>

namespace sixj {

/// Runs the command line tool. Exit codes: 0 success, 1 other failure, 2 usage,
/// 3 inadmissible spins, 4 non-Euclidean or degenerate geometry.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sixj
