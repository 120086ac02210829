#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace alphawidth {

/// Exit codes: 0 success, 1 property violation, 2 usage or parse error.
int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace alphawidth
