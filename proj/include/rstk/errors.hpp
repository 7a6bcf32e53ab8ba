#pragma once

#include <stdexcept>
#include <string>

namespace rstk {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the region where a series, product or kernel is defined.
class DomainError : public Error {
public:
    using Error::Error;
};

// A series or product did not reach its tolerance within the term budget.
class NonConvergence : public Error {
public:
    using Error::Error;
};

class SingularPoint : public Error {
public:
    using Error::Error;
};

class QuadratureFailure : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

// mu = 0 makes the symmetric uncertainty ratio 0/0.
class DegenerateLabel : public Error {
public:
    using Error::Error;
};

// Raised when a truncated coefficient vector drops more probability than allowed.
class TruncationWarning : public Error {
public:
    using Error::Error;
};

}  // namespace rstk
