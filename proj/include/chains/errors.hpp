#pragma once

#include <stdexcept>
#include <string>

namespace chains {

/// Domain validation failure: bad input data or a violated precondition.
/// The CLI maps this to exit code 2.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace chains
