#pragma once

#include <stdexcept>
#include <string>

namespace artin {

/// Base class for all library errors. The CLI maps subclasses onto its
/// exit-code contract (usage -> 2, violation/indeterminate -> 1, budget -> 3).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// -- field layer --------------------------------------------------------

class MixedFields : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// Reducing a rational into F_q when q divides the reduced denominator.
class NonReducibleModQ : public Error {
public:
    using Error::Error;
};

// -- series layer --------------------------------------------------------

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// ord() of a series with no stored terms and finite precision: the true
/// order is somewhere at or above the precision cutoff, so it is unknown.
class IndeterminateOrder : public Error {
public:
    using Error::Error;
};

class NotAUnit : public Error {
public:
    using Error::Error;
};

/// truncate() asked to claim more precision than the input carries.
class PrecisionIncrease : public Error {
public:
    using Error::Error;
};

// -- construction layer ---------------------------------------------------

class CharTwo : public Error {
public:
    using Error::Error;
};

class NotASquareLeadingForm : public Error {
public:
    using Error::Error;
};

class PrecisionTooLow : public Error {
public:
    using Error::Error;
};

class BadParameters : public Error {
public:
    using Error::Error;
};

// -- experiment layer ------------------------------------------------------

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class SearchBudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Jet scan found no admissible B below the jet order.
class NoSuchB : public Error {
public:
    using Error::Error;
};

class BadParity : public Error {
public:
    using Error::Error;
};

/// Affine fit attempted on points that share a single abscissa.
class DegenerateInput : public Error {
public:
    using Error::Error;
};

// -- parser ---------------------------------------------------------------

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, int line, int col)
        : Error(what + " at line " + std::to_string(line) + ", col " +
                std::to_string(col)),
          line_(line),
          col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

class UnknownVariable : public Error {
public:
    using Error::Error;
};

class NegativeExponent : public Error {
public:
    using Error::Error;
};

}  // namespace artin
