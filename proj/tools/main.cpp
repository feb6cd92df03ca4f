#include "cli.hpp"

int main(int argc, char** argv) { return b2weight::cli::run(argc, argv); }
