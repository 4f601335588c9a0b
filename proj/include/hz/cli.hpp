#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hz {

// Runs the hz command line against the given argument list (without the
// program name). Returns the process exit code: 0 on success (including
// claims that hold, tight or slack), 2 when a verified claim is violated,
// 1 on usage, parse, or I/O errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace hz
