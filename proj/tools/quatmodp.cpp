#include "quatmodp/cli.hpp"

int main(int argc, char** argv) { return quatmodp::cli::run(argc, argv); }
