#include "calpanic/polynomial.hpp"

#include "calpanic/errors.hpp"

#include <optional>
#include <string>

namespace calpanic {

namespace {

// Degree of a bare power of the unknown: x -> 1, x^j -> j. Anything else is
// not a pure power.
std::optional<long long> unknown_power_degree(const Expr& e) {
    if (e.kind == ExprKind::unknown_symbol) return 1;
    if (e.kind == ExprKind::power_int &&
        e.lhs->kind == ExprKind::unknown_symbol)
        return e.int_exponent;
    return std::nullopt;
}

// Evaluates a constant (unknown-free) subexpression and extracts the
// rational scalar k. A pure zero is the degenerate k = 0; anything that is
// not a plain nonzero rational scalar is outside the family.
Rational constant_k(const Expr& e) {
    CalpanicNumber value = evaluate(e);
    if (value.is_pure_zero())
        throw DomainError(Errc::degenerate_rhs,
                          "the right side must be nonzero: x^n - x^n = 0 "
                          "would need a zero-coefficient solution term");
    bool plain_rational = value.is_monomial() && value.max_order() == 0 &&
                          value.terms().begin()->second.is_real();
    if (!plain_rational)
        throw DomainError(Errc::unsupported_equation,
                          "the constant factor k must be a plain nonzero "
                          "rational");
    return value.terms().begin()->second.re;
}

} // namespace

FamilyEquation::FamilyEquation(int n_arg, Rational k_arg)
    : n(n_arg), k(std::move(k_arg)) {
    if (n < 1)
        throw DomainError(Errc::unsupported_equation,
                          "the family is defined for n >= 1");
    if (k == 0)
        throw DomainError(Errc::degenerate_rhs, "the family requires k != 0");
}

FamilyEquation parse_family_equation(std::string_view text) {
    std::size_t eq_pos = text.find('=');
    if (eq_pos == std::string_view::npos)
        throw SyntaxError(text.size(), "'=' between the equation's sides");
    if (text.find('=', eq_pos + 1) != std::string_view::npos)
        throw SyntaxError(text.find('=', eq_pos + 1), "a single '='");

    ParseOptions with_unknown{.allow_unknown = true};
    ExprPtr lhs = parse(text.substr(0, eq_pos), with_unknown);
    ExprPtr rhs;
    try {
        rhs = parse(text.substr(eq_pos + 1), with_unknown);
    } catch (const SyntaxError& err) {
        // Re-anchor the offset into the full equation text.
        throw SyntaxError(err.offset() + eq_pos + 1, err.expected());
    }

    // Left side: x^n - x^n, identical degrees.
    const char* family_shape =
        "an equation of the family x^n - x^n = k*x^(n-1)";
    if (lhs->kind != ExprKind::subtract)
        throw DomainError(Errc::unsupported_equation, family_shape);
    auto deg_left = unknown_power_degree(*lhs->lhs);
    auto deg_right = unknown_power_degree(*lhs->rhs);
    if (!deg_left || !deg_right || *deg_left != *deg_right)
        throw DomainError(Errc::unsupported_equation, family_shape);
    long long n = *deg_left;
    if (n < 1)
        throw DomainError(Errc::unsupported_equation,
                          "the family is defined for n >= 1");

    // Right side: k, k*x^(n-1), or bare x^(n-1).
    if (!contains_unknown(*rhs)) {
        Rational k = constant_k(*rhs);
        if (n != 1)
            throw DomainError(Errc::unsupported_equation,
                              "a constant right side matches n = 1 only; "
                              "higher n needs k*x^(n-1)");
        return FamilyEquation(static_cast<int>(n), std::move(k));
    }
    std::optional<long long> rhs_degree;
    Rational k(1);
    if (auto bare = unknown_power_degree(*rhs)) {
        rhs_degree = bare;
    } else if (rhs->kind == ExprKind::multiply &&
               !contains_unknown(*rhs->lhs)) {
        rhs_degree = unknown_power_degree(*rhs->rhs);
        if (rhs_degree) k = constant_k(*rhs->lhs);
    }
    if (!rhs_degree)
        throw DomainError(Errc::unsupported_equation, family_shape);
    if (*rhs_degree != n - 1)
        throw DomainError(Errc::unsupported_equation,
                          "the right side's power must be x^(n-1)");
    return FamilyEquation(static_cast<int>(n), std::move(k));
}

CalpanicNumber solve_family(const FamilyEquation& eq) {
    return make_term(Coefficient(eq.k), 1);
}

bool verify_solution(const FamilyEquation& eq,
                     const CalpanicNumber& candidate) {
    CalpanicNumber power_n = pow_int(candidate, eq.n);
    CalpanicNumber lhs = subtract(power_n, pow_int(candidate, eq.n));
    CalpanicNumber rhs =
        multiply(make_real(Coefficient(eq.k)), pow_int(candidate, eq.n - 1));
    return equals_canonical(lhs, rhs);
}

} // namespace calpanic
