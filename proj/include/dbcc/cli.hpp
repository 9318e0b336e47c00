#pragma once

#include <iosfwd>

namespace dbcc::cli {

/// Entry point shared by the dbcc binary and the CLI tests. Exit code 0 on
/// success (including "verified covering"), 1 for a verified non-covering
/// string, 2 for usage, input or resource errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace dbcc::cli
