#include "equicob/cli.hpp"

int main(int argc, char** argv) { return equicob::cli::run(argc, argv); }
