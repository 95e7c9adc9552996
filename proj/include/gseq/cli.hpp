#ifndef GSEQ_CLI_HPP
#define GSEQ_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace gseq::cli {

// Dispatches one CLI invocation. Results go to out, warnings and progress to
// err. Returns 0 on success, 1 on a domain refusal (precondition or range),
// 2 on a parse error (bad syntax, unknown subcommand or flags).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gseq::cli

#endif
