#pragma once

#include <ostream>

namespace hopf::cli {

/// Runs one `hopfimg` command. The JSON report goes to `out`, diagnostics to
/// `err`. Returns 0 on success/true, 1 on a computed negative answer or a
/// failed check, 2 on invalid input.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace hopf::cli
