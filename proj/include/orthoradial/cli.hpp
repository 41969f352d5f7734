#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orthoradial {

// Command line front end.  Exit codes: 0 success (or valid), 1 invalid input
// instance (a certificate is printed) or oracle disagreement, 2 usage or
// parse errors, 3 inconclusive (the cycle cap was hit).
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace orthoradial
