#ifndef SKBRACE_TOOLS_CLI_HPP_
#define SKBRACE_TOOLS_CLI_HPP_

#include <ostream>  // for ostream
#include <string>   // for string
#include <vector>   // for vector

namespace skb::cli {

  //! Version of the JSON documents the tool reads and writes.
  inline constexpr int json_format_version = 1;

  //! Exit codes: 0 success, 1 usage or precondition error, 2 internal
  //! consistency failure (including a corpus fixture that does not match).
  enum exit_code : int { ok = 0, precondition = 1, internal = 2 };

  //! Runs one command line (without the program name).  Results go to `out`
  //! as JSON; errors go to `err` as {"error": {"kind", "message"}}.
  int run_command(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace skb::cli

#endif  // SKBRACE_TOOLS_CLI_HPP_
