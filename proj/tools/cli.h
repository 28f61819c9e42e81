#ifndef LATPATH_TOOLS_CLI_H_
#define LATPATH_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "latpath/lattice_path.h"
#include "latpath/set_system.h"

namespace latpath::cli {

enum ExitCode : int {
  kOk = 0,
  kRejected = 1,
  kInputError = 2,
};

// {"ground": [...], "sets": [[...], ...]}; ground entries are strings or
// integers and set members refer to them by value. Throws DomainError.
SetSystem ParseSystemDoc(std::string_view text);
std::string SystemDocJson(const SetSystem& system);

// Two whitespace-separated words.
BoundingPair ParsePairText(std::string_view text);

// `args` excludes the program name.
int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace latpath::cli

#endif  // LATPATH_TOOLS_CLI_H_
