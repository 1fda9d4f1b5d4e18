#include "rotsys/cli.hpp"

int main(int argc, char** argv) { return rotsys::run_cli(argc, argv); }
