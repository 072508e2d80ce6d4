#pragma once

// The solvable polynomial family x^n - x^n = k * x^(n-1). Classically the
// left side is identically zero; here it is a conserved self-subtraction,
// and the monomial x = k*ka satisfies the equation exactly for every n >= 1
// and nonzero rational k. Verification substitutes the candidate and
// compares both sides canonically; nothing is ever transposed across "=".

#include "calpanic/expr.hpp"
#include "calpanic/number.hpp"

#include <string_view>

namespace calpanic {

struct FamilyEquation {
    int n;      // >= 1
    Rational k; // != 0

    // Throws DomainError(unsupported_equation) for n < 1 and
    // DomainError(degenerate_rhs) for k = 0 (x - x = 0 would demand a
    // zero-coefficient term, which is unconstructible).
    FamilyEquation(int n, Rational k);
};

// Pattern-matches equation text of the family shape, e.g. "x - x = 5",
// "x^3 - x^3 = 2*x^2", "x^2 - x^2 = x". The right side's constant part may
// be any expression without the unknown that evaluates to a nonzero rational
// scalar. Anything outside the family (for example a right side mixing ka
// terms or several orders) is reported as unsupported rather than guessed
// at.
FamilyEquation parse_family_equation(std::string_view text);

// The family's monomial solution k*ka.
CalpanicNumber solve_family(const FamilyEquation& eq);

// Substitutes the candidate, evaluates LHS = x^n - x^n and
// RHS = k * x^(n-1) with core semantics, and compares canonically.
bool verify_solution(const FamilyEquation& eq, const CalpanicNumber& candidate);

} // namespace calpanic
