#include "ratcalc/cli.hpp"

int main(int argc, char** argv) { return ratcalc::cli_run(argc, argv); }
