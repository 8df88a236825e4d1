#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

namespace eigenfloor {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input outside the mathematical domain of an operation (infeasible trace
// pair, nonpositive eigenvalue, bad precondition).
class DomainError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

// A bidiagonal factor has a zero diagonal entry.
class SingularMatrixError : public Error {
public:
    SingularMatrixError(std::size_t index)
        : Error("singular bidiagonal: zero diagonal entry at index " + std::to_string(index)),
          index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

// LDL^T of (T - shift*I) produced a nonpositive pivot.
class NotPositiveDefiniteError : public Error {
public:
    NotPositiveDefiniteError(std::size_t index, double pivot)
        : Error("matrix is not positive definite: pivot " + std::to_string(index) + " is " +
                std::to_string(pivot)),
          index_(index), pivot_(pivot) {}
    std::size_t index() const noexcept { return index_; }
    double pivot() const noexcept { return pivot_; }

private:
    std::size_t index_;
    double pivot_;
};

class OverflowError : public Error {
public:
    OverflowError(std::size_t index)
        : Error("trace accumulation overflowed at index " + std::to_string(index)), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

// A dqds transform met a nonpositive quantity: the shift was not below the
// smallest eigenvalue of the represented matrix.
class ShiftRejected : public Error {
public:
    ShiftRejected(std::size_t index, double shift)
        : Error("shift " + std::to_string(shift) + " rejected at index " + std::to_string(index)),
          index_(index), shift_(shift) {}
    std::size_t index() const noexcept { return index_; }
    double shift() const noexcept { return shift_; }

private:
    std::size_t index_;
    double shift_;
};

// An iteration stopped without converging. last_value() is the last
// trustworthy iterate (NaN when there is none).
class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string& what,
                              double last_value = std::numeric_limits<double>::quiet_NaN())
        : Error(what), last_value_(last_value) {}
    double last_value() const noexcept { return last_value_; }

private:
    double last_value_;
};

}  // namespace eigenfloor
