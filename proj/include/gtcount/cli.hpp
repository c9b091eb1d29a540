#pragma once

namespace gtc {

// Full command-line surface. Returns the process exit code:
// 0 success, 1 invalid input, 2 cross-check or verification failure.
int run_cli(int argc, const char* const* argv);

}  // namespace gtc
