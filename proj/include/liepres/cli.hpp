#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace liepres {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failure = 1;       // verify diff, unrecognized type
inline constexpr int usage = 2;         // parse, schema or usage error
inline constexpr int disagreement = 3;  // engines disagree
inline constexpr int unstable = 4;      // quotient not stabilized
inline constexpr int jacobi = 5;        // Jacobi identity fails
}  // namespace exit_code

/// Runs one `liepres` command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liepres
