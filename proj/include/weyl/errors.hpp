#pragma once

#include <stdexcept>
#include <string>

namespace weyl {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct InvalidDimension : Error {
    using Error::Error;
};

struct NotHermitian : Error {
    using Error::Error;
};

struct NoConvergence : Error {
    using Error::Error;
};

struct NormTooLarge : Error {
    using Error::Error;
};

struct TruncationWeightTooLarge : Error {
    using Error::Error;
};

struct NonCommensurate : Error {
    using Error::Error;
};

}  // namespace weyl
