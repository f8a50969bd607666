#pragma once

#include <iosfwd>

namespace cproof::cli
{

// Exit codes: 0 Valid, 1 Unknown or Invalid (or a fuzz violation), 2 usage,
// parse or validation error, 3 oracle bound exceeded.
int run_cli( int argc, const char* const* argv, std::ostream& out, std::ostream& err );

} // namespace cproof::cli
