#pragma once

#include <iosfwd>

namespace sepsym::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kScaleLimit = 2 };

// Runs the command line; output files go where --out says, everything else
// to `out` (results) and `err` (messages).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sepsym::cli
