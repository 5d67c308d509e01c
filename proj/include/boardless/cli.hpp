#pragma once

namespace boardless {

/// Entry point of the boardless command line: growth, bench, play, verify.
/// Returns the process exit status.
int cli_dispatch(int argc, char** argv);

}  // namespace boardless
