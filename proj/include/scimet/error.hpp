#pragma once

#include <stdexcept>
#include <string>

namespace scimet {

// Bad input data: malformed tables, values outside a function's domain,
// unknown labels. The CLI maps this to exit status 1.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace scimet
