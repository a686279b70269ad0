#pragma once

#include <stdexcept>
#include <string>

namespace nullcone {

// Mismatched ambient dimensions in a vector operation.
struct DimensionError : std::invalid_argument {
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// Invalid domain input (rank out of range, non-dominant weight, ...).
struct ValidationError : std::invalid_argument {
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// A configured budget (orbit cap, module dimension cap, subset budget) was exceeded.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nullcone
