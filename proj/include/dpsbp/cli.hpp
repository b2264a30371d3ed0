#ifndef DPSBP_CLI_HPP
#define DPSBP_CLI_HPP

namespace dpsbp {

// Exit codes: 0 success/pass, 1 verification or acceptance failure,
// 2 usage or configuration error. A recorded crash in `run` is a normal
// outcome (exit 0) with crash metadata in the summary.
int run_cli(int argc, char** argv);

}  // namespace dpsbp

#endif
