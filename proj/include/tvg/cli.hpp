#ifndef TVG_CLI_HPP
#define TVG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tvg {

// Entry point of the `tvg` tool. args excludes the program name. Returns 0
// on success / true, 1 on false / invalid input, 2 on usage errors.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tvg

#endif  // TVG_CLI_HPP
