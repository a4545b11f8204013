#pragma once

#include <array>
#include <memory>
#include <string>
#include <string_view>

#include "riordan/series.hpp"

namespace riordan {

// Syntax error with a 1-based column into the source text.
struct ParseError : std::runtime_error {
    ParseError(int column, const std::string& msg)
        : std::runtime_error("column " + std::to_string(column) + ": " + msg),
          column(column) {}
    int column;
};

// Evaluation-time domain failure, tagged with the column of the operator or
// call that triggered it.
struct EvalError : MathError {
    EvalError(int column, const std::string& msg)
        : MathError("column " + std::to_string(column) + ": " + msg), column(column) {}
    int column;
};

/*
 * Expression grammar over rational literals and the variable x:
 *
 *   expr   := term (('+' | '-') term)*
 *   term   := factor (('*' | '/') factor)*
 *   factor := atom ('^' exponent)?
 *   atom   := ratlit | 'x' | '(' expr ')' | '-' atom | ident '(' expr ')'
 *   exponent := ['-'] ratlit | '(' ['-'] ratlit ')'
 *   ratlit := integer ('/' integer)?     (two-token lookahead)
 *   ident  := sqrt | C | exp | log | rev
 *
 * Whitespace is insignificant; juxtaposition is not multiplication ("2x" is
 * a syntax error at its second token).  The '/' of a ratlit binds tighter
 * than division, so 1/2 is the literal one-half while 1/(1-x) divides.
 */
struct Expr {
    enum class Kind { Number, Var, Neg, Add, Sub, Mul, Div, Pow, Call };

    Kind kind;
    int column = 0;            // 1-based position of the token that made the node
    Rat number;                // Number
    Rat exponent;              // Pow
    std::string callee;        // Call
    std::unique_ptr<Expr> lhs; // unary operand lives here
    std::unique_ptr<Expr> rhs;
};

using ExprPtr = std::unique_ptr<Expr>;

const std::array<std::string_view, 5>& builtin_names();

ExprPtr parse_expr(std::string_view text);

// Evaluate to a truncated series at the given order.  Domain failures from
// the series kernel are rethrown as EvalError with the operator's column.
Series eval(const Expr& e, int order);

// parse + eval in one step.
Series eval_expr(std::string_view text, int order);

// Round-trippable text form: parse(to_string(e)) is structurally equal to e.
std::string to_string(const Expr& e);

bool expr_equal(const Expr& a, const Expr& b);

}  // namespace riordan
