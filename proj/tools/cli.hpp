#pragma once

#include <ostream>

namespace indcut::cli {

/// Exit codes: 0 clean run, 1 internal failure, 2 usage or contract error, 3 parameter too small.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace indcut::cli
