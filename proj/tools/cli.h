#ifndef LEADINF_TOOLS_CLI_H_
#define LEADINF_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace leadinf {
namespace cli {

// Process exit codes. Stable; documented in the README.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,       // I/O errors, unexpected failures
  kExitUsage = 2,         // bad command line
  kExitParse = 3,         // malformed hand, deal, card or prior text
  kExitInfeasible = 4,    // lead visible to declarer
  kExitZeroEvidence = 5,  // no holding or hand explains the lead
  kExitNoSamples = 6,     // Monte Carlo accepted nothing
  kExitBenchFail = 7,     // a timed run broke its bound
};

// Runs one command. `args` excludes the program name. Reports go to `out`,
// diagnostics to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cli
}  // namespace leadinf

#endif  // LEADINF_TOOLS_CLI_H_
