#ifndef RATCALC_CLI_HPP
#define RATCALC_CLI_HPP

namespace ratcalc {

/// Full command-line entry point: parses argv, reads the JSON payload from
/// --in or stdin, writes the JSON result (or structured error) to --out or
/// stdout. Returns 0 on success, 1 on domain errors, 2 on malformed input.
int cli_run(int argc, const char* const* argv);

}  // namespace ratcalc

#endif
