#pragma once

// Surface syntax for calpanic values: a small expression language with a
// recursive-descent parser, a left-to-right evaluator, an equivalence
// checker, and the canonical renderer / JSON serializer.
//
// Grammar (whitespace-insensitive, UTF-8):
//
//   expr    := term { ("+"|"-") term }            left-associative
//   term    := factor { ("*"|"/") factor }        left-associative
//   factor  := [ "-" | "+" ] power
//   power   := atom [ "^" ( integer | atom ) ]
//   atom    := number | "ka" | "i" | "(" expr ")" | "real(" expr ")"
//   number  := integer | decimal                  decimals become exact rationals
//
// "ka" names the reciprocal of zero; the Devanagari glyph for it is accepted
// as an alias. The literal 0 evaluates to +0. A bare-integer exponent selects
// repeated multiplication; any other exponent expression must evaluate to a
// pure zero. Because addition here is neither commutative nor associative,
// the tree preserves source grouping exactly and no algebraic rewriting
// happens at parse time.

#include "calpanic/number.hpp"

#include <memory>
#include <string>
#include <string_view>

namespace calpanic {

enum class ExprKind {
    rational_literal, // value in `literal`
    imaginary_unit,   // the token "i"
    ka_symbol,
    unknown_symbol,   // the equation unknown "x"; rejected by evaluate
    negate,           // child in `lhs`
    add,
    subtract,
    multiply,
    divide,
    power_int,        // base in `lhs`, exponent in `int_exponent`
    power_expr,       // base in `lhs`, symbolic exponent in `rhs`
    real_collapse,    // child in `lhs`
};

struct Expr {
    ExprKind kind;
    std::size_t offset = 0; // byte offset of the node's principal token
    Rational literal;
    long long int_exponent = 0;
    std::unique_ptr<Expr> lhs;
    std::unique_ptr<Expr> rhs;
};

using ExprPtr = std::unique_ptr<Expr>;

struct ParseOptions {
    // Accept the unknown `x` as an atom (used by the equation front end).
    bool allow_unknown = false;
};

// Throws SyntaxError (with byte offset and expected-token description).
ExprPtr parse(std::string_view text, const ParseOptions& options = {});

// Left-to-right structural recursion onto the core operations. Domain
// violations surface as EvalError carrying the offending node's offset.
CalpanicNumber evaluate(const Expr& e);

bool contains_unknown(const Expr& e);

struct Equivalence {
    bool equal = false;
    // "both evaluate to ..." or "first difference at order n: ...".
    std::string explanation;
};

// Conservation equivalence: the two expressions evaluate to identical
// canonical forms. Transposition across an equation is *not* equivalence;
// this compares finished values only.
Equivalence equivalent(const Expr& e1, const Expr& e2);

// Canonical text form, descending orders: "3*ka + 7", "3 + 7*0", "+0",
// "1*0^2", "(1 + 2*i)*ka". parse(render(x)) re-evaluates to x exactly.
std::string render(const CalpanicNumber& x);

// {"terms":[{"order":1,"re":"3","im":"0"}, ...]} — descending order,
// lowest-terms rational strings.
std::string to_json(const CalpanicNumber& x);

} // namespace calpanic
