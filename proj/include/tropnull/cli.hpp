#pragma once

#include <ostream>

namespace tropnull::cli {

/// Exit codes: 0 member / PASS, 1 non-member / FAIL, 2 input error,
/// 3 internal error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tropnull::cli
