#ifndef BETTILAB_CLI_HPP
#define BETTILAB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bettilab {

/// Front end behind the bettilab binary, exposed for testing. `args` excludes
/// the program name. Results go to `out`, diagnostics and progress to `err`;
/// `in` backs the "-" file argument. Exit codes: 0 success/holds, 1 usage or
/// input errors, 2 a verified claim is violated or no coloring exists,
/// 3 a size cap or search budget was exceeded.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace bettilab

#endif
