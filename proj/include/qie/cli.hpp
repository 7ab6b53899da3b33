#pragma once

#include <iosfwd>

namespace qie::cli {

/// Parses and executes one CLI invocation. Exit codes: 0 success,
/// 1 deviating table cells, 2 usage error, 3 numerical or I/O failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace qie::cli
