#pragma once

#include <iosfwd>

namespace f2lin::selftest {

// Cross-checks the elimination paths against each other and the reference
// oracles at small dimensions. Returns 0 on success, 1 on the first failure,
// which is described on `log`.
int run(std::ostream& log);

} // namespace f2lin::selftest
