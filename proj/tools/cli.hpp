#pragma once

#include <iosfwd>

namespace genknot::cli {

// Exit codes of the genknot tool.
enum ExitCode : int {
  kOk = 0,
  kSemantic = 1,      // a violation: invalid diagram, failed inequality, failed check
  kInput = 2,         // unreadable file, parse error, bad command line
  kPrecondition = 3,  // hypotheses of a bound not met
};

// Entry point shared by the executable and the tests. Input path "-" reads
// from `in`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace genknot::cli
