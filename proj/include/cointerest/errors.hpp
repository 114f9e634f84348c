#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cointerest {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad weight, partition mismatch, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A node label or cluster id that does not exist was requested.
class LookupError : public Error {
public:
    using Error::Error;
};

/// A quantity is mathematically undefined for the given input.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Input text does not follow the record format. `line()` is 1-based, 0 when
/// the problem is not tied to a specific line.
class FormatError : public Error {
public:
    FormatError(std::size_t line, const std::string& what)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what)
        , line_(line)
    {
    }

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// No resolution in the searched range produced the requested cluster count.
class InfeasibleError : public Error {
public:
    InfeasibleError(const std::string& what, std::size_t achieved_clusters)
        : Error(what)
        , achieved_(achieved_clusters)
    {
    }

    std::size_t achieved_clusters() const noexcept { return achieved_; }

private:
    std::size_t achieved_;
};

/// Power iteration hit its iteration cap. Carries the last iterate.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, std::vector<double> last_iterate, double residual)
        : Error(what)
        , last_iterate_(std::move(last_iterate))
        , residual_(residual)
    {
    }

    const std::vector<double>& last_iterate() const noexcept { return last_iterate_; }
    double residual() const noexcept { return residual_; }

private:
    std::vector<double> last_iterate_;
    double residual_;
};

} // namespace cointerest
