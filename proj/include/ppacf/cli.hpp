#pragma once

namespace ppacf {

/// Entry point of the `ppacf` command line tool. Returns 0 on success, 1 on
/// validation errors, 2 on numerical degeneracies. With --json-errors a
/// machine-readable error object is printed to stderr instead of plain text.
int cli_main(int argc, const char* const* argv);

}  // namespace ppacf
