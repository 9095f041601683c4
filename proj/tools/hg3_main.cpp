#include "hg3/cli.hpp"

int main(int argc, char** argv) { return hg3::run_cli(argc, argv); }
