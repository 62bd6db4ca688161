#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lexcover::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,         // usage, parse or I/O errors
  kVerification = 2,  // a verification or bounded check failed
  kCapOverflow = 3,
};

// Runs one command line (args[0] is the program name). Results go to `out`,
// the run report and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace lexcover::cli
