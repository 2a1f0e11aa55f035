// errors.hpp -- exception types shared across the library

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace subcomplex {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A substitution spec file could not be parsed; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// A letter image is empty.
class ErasingError : public Error {
public:
    using Error::Error;
};

/// The substitution cannot be brought to marked form by a single rotation.
class NotMarkableError : public Error {
public:
    using Error::Error;
};

/// The incidence matrix is not primitive.
class NonPrimitiveError : public Error {
public:
    using Error::Error;
};

/// The fixed point is (ultimately) periodic.
class PeriodicError : public Error {
public:
    using Error::Error;
};

/// The image of the requested seed letter does not begin with that letter.
class SeedNotExtendableError : public Error {
public:
    using Error::Error;
};

/// A word that was required to be a factor of the fixed point is not one.
class NotAFactorError : public Error {
public:
    using Error::Error;
};

/// Seed detection did not reach orbit closure at the probed length.
class NotStabilizedError : public Error {
public:
    using Error::Error;
};

/// Orbit alignment search exceeded its iteration budget.
class AlignmentBudgetError : public Error {
public:
    using Error::Error;
};

/// A recurrence query below the schedule's base index.
class BelowBaseError : public Error {
public:
    using Error::Error;
};

/// Oracle and recurrence formula disagree at some length.
class MismatchError : public Error {
public:
    MismatchError(std::int64_t n, std::int64_t oracle_value, std::int64_t formula_value)
        : Error("s(" + std::to_string(n) + ") mismatch: oracle " + std::to_string(oracle_value) +
                ", formula " + std::to_string(formula_value)),
          n_(n), oracle_(oracle_value), formula_(formula_value) {}
    std::int64_t n() const noexcept { return n_; }
    std::int64_t oracle_value() const noexcept { return oracle_; }
    std::int64_t formula_value() const noexcept { return formula_; }

private:
    std::int64_t n_, oracle_, formula_;
};

} // namespace subcomplex
