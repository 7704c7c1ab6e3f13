#pragma once

#include <iosfwd>

namespace qord {

// Command-line front end. Exit codes: 0 success (verdicts included),
// 1 domain rejection, 2 malformed input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qord
