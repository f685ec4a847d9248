#pragma once

// Command-line front end. Verbs: walks, dims, invariants, poincare, egf,
// bratteli, quiver, diagalg, verify.
//
// Exit codes: 0 success, 2 usage or parse error, 3 unsupported combination,
// 4 consistency failure. Output goes to `out` in one write at the end.

#include <ostream>
#include <string>
#include <vector>

namespace tensorwalks {

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tensorwalks
