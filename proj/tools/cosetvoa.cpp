#include "cosetvoa/cli.hpp"

int main(int argc, char** argv) { return cosetvoa::cli::run(argc, argv); }
