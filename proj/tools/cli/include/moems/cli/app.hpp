#pragma once

namespace moems::cli {

// Whole command line: 0 success, 1 usage, 2 schema, 3 physics, 4 I/O.
// Diagnostics go to stderr as one JSON object per line.
int run_app(int argc, const char* const* argv);

}  // namespace moems::cli
