#pragma once

#include <ostream>

namespace mzv::cli {

/// Parses argv, runs one subcommand and writes its records to out.
/// Returns 0 when every requested check passes, 1 when one fails and 2 on a
/// usage error. Diagnostics go to err.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace mzv::cli
