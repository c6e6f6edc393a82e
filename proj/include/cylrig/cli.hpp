#pragma once

#include <ostream>

namespace cylrig {

// Exit codes: 0 verdict computed (even a negative one), 1 input error,
// 2 internal invariant breach.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cylrig
