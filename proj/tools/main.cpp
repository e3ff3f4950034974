#include "cli.hpp"

int main(int argc, char** argv) { return repring::cli::run(argc, argv); }
