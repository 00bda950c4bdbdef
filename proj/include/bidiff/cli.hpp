#pragma once

namespace bidiff {

// Entry point for the bidiff command-line tool. Exit codes: 0 success,
// 1 no-solution outcome, 2 usage or parse error, 3 precision exhaustion.
int run_cli(int argc, const char* const* argv);

}  // namespace bidiff
