#pragma once

#include <stdexcept>
#include <string>

namespace cyclekit {

/// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct SigmaMismatchError : Error {
    using Error::Error;
};

/// Division by a zero divisor of the plane (or by an exact zero).
struct ZeroDivisorError : Error {
    using Error::Error;
};

/// Operation needs k != 0 (straight lines have no finite centre/radius).
struct DegenerateCycleError : Error {
    using Error::Error;
};

struct UndefinedFocusError : Error {
    using Error::Error;
};

/// The all-zero quadruple is not a point of the cycle space.
struct ZeroCycleError : Error {
    using Error::Error;
};

struct BadMatrixShapeError : Error {
    using Error::Error;
};

struct NoExtremumError : Error {
    using Error::Error;
};

struct NoSuchCycleError : Error {
    using Error::Error;
};

struct NonSmoothError : Error {
    using Error::Error;
};

struct SingularResolventError : Error {
    using Error::Error;
};

struct IllConditionedError : Error {
    using Error::Error;
};

struct ConstantMapError : Error {
    using Error::Error;
};

struct OutOfPatchError : Error {
    using Error::Error;
};

struct SceneError : Error {
    using Error::Error;
};

}  // namespace cyclekit
