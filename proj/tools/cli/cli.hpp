#ifndef TOLREP_TOOLS_CLI_HPP_
#define TOLREP_TOOLS_CLI_HPP_

#include <iosfwd>  // for ostream
#include <string>  // for string
#include <vector>  // for vector

namespace tolrep::cli {

  enum exit_code : int {
    holds    = 0,
    fails    = 1,
    usage    = 2,
    resource = 3,
  };

  // Runs one command; args excludes the program name. FILE arguments are
  // paths, or "corpus:NAME" for a built-in corpus entry.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace tolrep::cli

#endif  // TOLREP_TOOLS_CLI_HPP_
