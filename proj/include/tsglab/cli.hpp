#ifndef TSGLAB_CLI_HPP
#define TSGLAB_CLI_HPP

#include <ostream>
#include <string>

#include "tsglab/geom.hpp"
#include "tsglab/oracle.hpp"

namespace tsglab {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,         // bad flags, schema mismatch, invalid parameters
  kExitInadmissible = 3,  // necessity check rejects (group, m)
  kExitKnotted = 4,       // plan needs a knotted construction
  kExitCheckFailed = 5,   // certificate or oracle disagreement
};

int cmd_classify(GroupName group, long m, std::ostream& out);
/// CSV; A4/A5 reproduce the profile tables, S4 prints the congruence chain.
int cmd_table(GroupName group, std::ostream& out);
int cmd_realize(GroupName group, long m, const std::string& out_path, const ModelParams& params, std::ostream& out);
int cmd_verify(const std::string& in_path, std::ostream& out);
int cmd_oracle(GroupName group, const OracleOptions& options, std::ostream& out);

/// Seed from TSGLAB_SEED, or 1.
std::uint64_t default_seed();

/// Parses argv and dispatches; returns the process exit code.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace tsglab

#endif  // TSGLAB_CLI_HPP
