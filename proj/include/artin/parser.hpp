#pragma once

#include <string>
#include <vector>

#include "artin/field.hpp"
#include "artin/poly_system.hpp"

namespace artin {

/// Syntax tree for polynomial expressions over the series variables T1..TN
/// and the unknowns X1..Xn. Numbers produced by the parser are nonnegative
/// (a leading minus sign becomes a Neg node), and Pow exponents are plain
/// nonnegative integers: the grammar only admits integer literals after '^'.
struct PolyExpr {
    enum class Kind { Number, SeriesVar, UnknownVar, Add, Sub, Mul, Neg, Pow };

    Kind kind;
    BigRational value;              // Number
    int index = 0;                  // SeriesVar / UnknownVar, 1-based
    long exponent = 0;              // Pow
    std::vector<PolyExpr> children; // Add/Sub/Mul: two, Neg/Pow: one

    static PolyExpr number(BigRational v);
    static PolyExpr series_var(int index);
    static PolyExpr unknown_var(int index);
    static PolyExpr add(PolyExpr a, PolyExpr b);
    static PolyExpr sub(PolyExpr a, PolyExpr b);
    static PolyExpr mul(PolyExpr a, PolyExpr b);
    static PolyExpr neg(PolyExpr a);
    static PolyExpr pow(PolyExpr base, long exponent);
};

bool operator==(const PolyExpr& a, const PolyExpr& b);
inline bool operator!=(const PolyExpr& a, const PolyExpr& b) {
    return !(a == b);
}

/// Parses one expression; the whole text must be consumed.
///
/// Variables are validated against the declared arities: T1..TN and X1..Xn,
/// with the aliases X, Y, Z for X1, X2, X3 when n <= 3 and T for T1 when
/// N = 1. Errors carry source positions: SyntaxError(line, col),
/// UnknownVariable, NegativeExponent.
PolyExpr parse_expr(const std::string& text, int N, int n);

/// Parses a semicolon-separated expression list (trailing ';' allowed).
std::vector<PolyExpr> parse_expr_list(const std::string& text, int N, int n);

/// Renders with canonical variable names (T1, X1, ...) and minimal
/// parentheses; reparsing the result gives a structurally equal tree.
std::string render(const PolyExpr& e);

/// Parse and lower: each expression becomes one polynomial of the system,
/// numeric literals are mapped into the requested field after parsing.
PolySystem parse_poly(const std::string& text, int N, int n,
                      const FieldDescriptor& d);

}  // namespace artin
