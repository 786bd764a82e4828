#include "hyperperm/cli.hpp"

int main(int argc, char** argv) { return hyperperm::cli::run_main(argc, argv); }
