#include "dpsbp/cli.hpp"

int main(int argc, char** argv) { return dpsbp::run_cli(argc, argv); }
