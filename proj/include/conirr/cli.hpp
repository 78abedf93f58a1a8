#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace conirr::cli {

enum ExitCode : int {
  kVerdict = 0,            ///< a verdict was produced
  kHypothesisFailure = 1,  ///< a hypothesis of the criterion failed
  kInputError = 2,         ///< malformed input, unknown fixture, oversize lattice
  kSoundness = 3,          ///< oracle disagreement or a certificate that does not verify
};

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conirr::cli
