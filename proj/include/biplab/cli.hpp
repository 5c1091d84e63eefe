#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace biplab::cli {

/// Runs one `bip-ramsey-lab` invocation. Reports go to `out`, diagnostics
/// to `err`. Exit codes: 0 pass/success, 1 fail verdict, 2 usage or error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_main(int argc, char** argv);

}  // namespace biplab::cli
