#pragma once

#include <stdexcept>
#include <string>

namespace ppzc {

// Base of every error raised by the library. Anything derived from
// PreconditionError means the caller passed arguments outside an operation's
// domain; the CLI maps those to exit status 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class NotBijective : public PreconditionError {
public:
    NotBijective(long long first, long long second, long long value)
        : PreconditionError("polynomial is not a permutation: k=" + std::to_string(first) +
                            " and k=" + std::to_string(second) + " both map to " +
                            std::to_string(value)),
          first_(first), second_(second), value_(value) {}

    long long first() const noexcept { return first_; }
    long long second() const noexcept { return second_; }
    long long value() const noexcept { return value_; }

private:
    long long first_;
    long long second_;
    long long value_;
};

class BadRoot : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class LengthMismatch : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class CapExceeded : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class BadDecimation : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class InvalidQpp : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class DZero : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class CaseNotCovered : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class HypothesisNotMet : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

} // namespace ppzc
