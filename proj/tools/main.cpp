#include "ppacf/cli.hpp"

int main(int argc, char** argv) { return ppacf::cli_main(argc, argv); }
