#pragma once

namespace twistsieve {

// Entry point behind the twistsieve binary; exposed so the subcommands
// can be driven in-process by tests. Returns the process exit code:
// 0 success, 1 usage/input error, 2 campaign-level failure.
int cli_run(int argc, const char* const* argv);

}  // namespace twistsieve
