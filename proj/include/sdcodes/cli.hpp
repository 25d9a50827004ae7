// Command-line front end. Results go to `out`, progress and errors to `err`.
#pragma once

#include <ostream>

namespace sdc::cli {

/// Exit status: 0 success, 1 domain error, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sdc::cli
