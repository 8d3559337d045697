#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pairtopo::cli {

/// Exit codes.
enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kParse = 2,        // bad input text, JSON, flags or arity
  kUnsupported = 3,  // formula outside the supported fragment, or not flattenable where required
  kBudget = 4,       // a Groebner, cell or clause budget ran out
  kMismatch = 5,     // memberCert and decideDirect disagree
};

/// Run one command; args exclude the program name. `in` supplies formula text
/// when none is given inline.
int runCli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pairtopo::cli
