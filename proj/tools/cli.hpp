#pragma once

#include <iosfwd>

namespace chkit::cli {

// Exit codes: 0 success, 1 a checked property failed or a counterexample was
// found, 2 input or usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chkit::cli
