#ifndef CONFHOM_CLI_HPP
#define CONFHOM_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace confhom {

// Full command-line front end; args exclude the program name. Exit codes:
// 0 success, 1 verified-property violation, 2 invalid input or hypothesis,
// 3 basis-size cap exceeded.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace confhom

#endif
