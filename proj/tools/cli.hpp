#ifndef COMPATLIE_CLI_HPP
#define COMPATLIE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace compatlie {

/// Exit codes: 0 all verdicts positive, 1 a verified mathematical property
/// fails, 2 input or usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace compatlie

#endif
