#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace blockcensus {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidPrimeError : Error {
    using Error::Error;
};

struct InvalidParamsError : Error {
    using Error::Error;
};

struct SingularMatrixError : Error {
    using Error::Error;
};

struct IndexOutOfRangeError : Error {
    using Error::Error;
};

/// Thrown when an element closure passes the configured cap. Carries the
/// number of distinct elements seen so far, which is a lower bound for the
/// group order.
struct CapExceededError : Error {
    std::uint64_t order_lower_bound;
    CapExceededError(std::uint64_t seen, const std::string& what)
        : Error(what), order_lower_bound(seen) {}
};

struct NotClosedError : Error {
    using Error::Error;
};

struct NotFoundError : Error {
    using Error::Error;
};

struct SymbolicModeError : Error {
    using Error::Error;
};

struct InvalidInstanceError : Error {
    using Error::Error;
};

struct OutOfTableError : Error {
    using Error::Error;
};

struct InvalidOrderError : Error {
    using Error::Error;
};

struct NoNormalSLFoundError : Error {
    using Error::Error;
};

struct DataMissingError : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line;
    ParseError(int line_no, const std::string& what) : Error(what), line(line_no) {}
};

struct ValidationError : Error {
    using Error::Error;
};

struct IncompleteRunError : Error {
    using Error::Error;
};

}  // namespace blockcensus
