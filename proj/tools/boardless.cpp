#include "boardless/cli.hpp"

int main(int argc, char** argv) { return boardless::cli_dispatch(argc, argv); }
