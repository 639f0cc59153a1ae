#pragma once

#include <iosfwd>

namespace ghfp {

/// Entry point of the ghfp tool. Exit codes: 0 when every requested check
/// passes, 1 on a failed check or a library error, 2 on a command-line or
/// file parse error.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace ghfp
