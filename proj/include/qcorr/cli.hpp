#pragma once

#include <ostream>

namespace qcorr {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitBadConfig = 1,
    kExitAuditFailure = 2,
    kExitIoFailure = 3,
};

/// Entry point shared by the `qcorr` binary and the in-process tests.
/// Subcommands: sweep, conserve, dominance, werner, geometric.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qcorr
