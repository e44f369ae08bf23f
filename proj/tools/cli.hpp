#ifndef SFT_TOOLS_CLI_HPP_
#define SFT_TOOLS_CLI_HPP_

#include <ostream>

namespace sft::cli {

  // Entry point of the `sft` tool. Exit codes: 0 on success, 1 when a
  // verified report turns out to be invalid, 2 on input errors.
  int run(int argc, char const* const* argv, std::ostream& out,
          std::ostream& err);

}  // namespace sft::cli

#endif  // SFT_TOOLS_CLI_HPP_
