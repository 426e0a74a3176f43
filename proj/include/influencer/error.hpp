#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace influencer {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input data could not be read or violates an operation's precondition.
class DataError : public Error {
public:
    using Error::Error;
};

/// Malformed edge-list row.
class ParseError : public DataError {
public:
    ParseError(std::size_t line, const std::string& what)
        : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Caller broke an operation's contract (wrong graph kind, bad parameter).
class ContractError : public DataError {
public:
    using DataError::DataError;
};

/// Power iteration ran out of iterations.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, std::vector<double> last_iterate, double residual)
        : Error(what), last_iterate_(std::move(last_iterate)), residual_(residual) {}

    const std::vector<double>& last_iterate() const noexcept { return last_iterate_; }
    double residual() const noexcept { return residual_; }

private:
    std::vector<double> last_iterate_;
    double residual_;
};

} // namespace influencer
