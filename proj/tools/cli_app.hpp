#pragma once

namespace merf::cli {

// Exit codes: 0 ok, 2 bad arguments, 3 threshold violation,
// 4 no convergence, 5 bound violation, 1 anything else.
int run_cli(int argc, const char* const* argv);

}  // namespace merf::cli
