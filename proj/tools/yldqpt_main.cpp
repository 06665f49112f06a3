#include "yldqpt/cli.hpp"

int main(int argc, char** argv) { return yldqpt::cli::run(argc, argv); }
