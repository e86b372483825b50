#ifndef TDI_CLI_HPP
#define TDI_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tdi {

/// Full command-line entry point; `args` excludes the program name. Streams
/// receive everything the tool prints, which keeps runs capturable in tests.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tdi

#endif
