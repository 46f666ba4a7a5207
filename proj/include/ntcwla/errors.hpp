#pragma once

#include <stdexcept>

namespace ntcwla {

// Bad input the caller can fix: malformed files, invalid configs,
// out-of-contract arguments at external boundaries. The CLI maps this
// to exit code 1; everything else that escapes maps to 2.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ntcwla
