#pragma once

#include <stdexcept>
#include <string>

namespace chit {

/// Base of every error raised by the library. The CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// A bound's preconditions do not hold for the given input (e.g. p(lambda_1) <= lambda(p)).
class BoundInapplicable : public Error {
public:
    using Error::Error;
};

class OutOfRange : public Error {
public:
    using Error::Error;
};

class NotRegular : public Error {
public:
    using Error::Error;
};

/// Iterative numerics failed to converge or hit a breakdown.
class NumericFailure : public Error {
public:
    using Error::Error;
};

class TooLarge : public Error {
public:
    using Error::Error;
};

}  // namespace chit
