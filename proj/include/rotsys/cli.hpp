#pragma once

namespace rotsys {

// The planesub command line.  Returns the process exit code:
//   0  success
//   1  a requested check failed
//   2  usage or input file trouble
//   3  a precondition of the requested operation does not hold
int run_cli(int argc, char** argv);

}  // namespace rotsys
