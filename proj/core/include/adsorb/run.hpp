#ifndef ADSORB_RUN_HPP_
#define ADSORB_RUN_HPP_

#include <iosfwd>

#include "adsorb/config.hpp"

namespace adsorb {

// Executes one configured run: writes CSV output files and prints
// mode-specific summaries to `out`. Throws adsorb errors on failure.
void run(const RunConfig& cfg, std::ostream& out);

// Command-line front end:
//   adsorb-frac <mode> [--config <file>] [--set key=value]... [--out <path>]
//               [--strict]
// Exit codes: 0 success, 2 config error, 3 model-validity error,
// 4 accuracy error (including strict-mode clamps), 1 anything else.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace adsorb

#endif  // ADSORB_RUN_HPP_
