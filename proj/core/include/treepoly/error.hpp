#pragma once

#include <stdexcept>
#include <string>

namespace treepoly {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised by checked 64-bit arithmetic instead of wrapping.
class OverflowError : public Error {
public:
    using Error::Error;
};

// Precondition violations on values (bad composition, bad polynomial, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class SingularMatrixError : public Error {
public:
    using Error::Error;
};

} // namespace treepoly
