#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arrangeo {

/// Exit codes: 0 success or predicate true, 1 predicate false, 2 error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arrangeo
