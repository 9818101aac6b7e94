#pragma once

#include <stdexcept>
#include <string>

namespace prefcone {

// Bad input: malformed rationals, dimension/space mismatches, domain
// violations (mixing weight outside [0,1], query on a pair outside the
// declared order, ...). The CLI maps this to exit code 2.
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A resource guard tripped: face-enumeration budget, fixture size cap.
// The CLI maps this to exit code 3.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace prefcone
