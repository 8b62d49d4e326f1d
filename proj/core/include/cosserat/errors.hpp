#pragma once

#include <stdexcept>
#include <string>

namespace cosserat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// det F <= threshold where a polar decomposition is required.
class DegenerateDeformation : public Error {
public:
    using Error::Error;
};

class ZeroDenominator : public Error {
public:
    using Error::Error;
};

/// The cubic in omega^2 has no nonnegative root.
class NoRealBranch : public Error {
public:
    using Error::Error;
};

class ImaginarySpeed : public Error {
public:
    using Error::Error;
};

class InfeasibleDensity : public Error {
public:
    using Error::Error;
};

class NonFiniteState : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace cosserat
