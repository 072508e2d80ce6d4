#pragma once

// Exact arithmetic for calpanic numbers.
//
// The system extends the complex rationals with a formal unit ka defined as
// the exact reciprocal of zero, ka = 1/0, and treats zero itself as a signed,
// graded quantity rather than an absorbing element. A calpanic number is a
// finite sum of terms
//
//     c * ka^n      (c a nonzero complex rational, n an integer)
//
// with at most one term per order n. Order n >= 1 is an n-th order
// singularity, order 0 is an ordinary (complex rational) scalar, and order
// n = -m <= -1 is an m-th order zero: 0 = 1/ka, so 0^m == ka^-m. The zeros
// are signed: +0 = (+1)*ka^-1 and -0 = (-1)*ka^-1 are distinct values, and
// promoting a plain scalar zero into the system yields +0 by convention.
//
// The defining principle is conservation: no quantity is ever silently
// destroyed by cancellation. When c and -c meet at order n, the pair does
// not vanish; it is re-emitted one order lower, with the sign of whichever
// operand came first:
//
//     1 - 1   = +0        (the cancelled unit survives as a first-order zero)
//     -1 + 1  = -0
//     ka - ka = 1         (cancelling singularities releases a real)
//     0 - 0   = 0^2       (cancelling zeros deepens the zero)
//
// Because the released quantity lands at order n-1 where it may meet another
// term and cancel again, a single addition can cascade downward through
// several orders. The cascade, and the sign rule "release follows the first
// operand", make addition neither commutative nor associative:
//
//     1 - 1 = +0   but   -1 + 1 = -0
//     (ka - ka) + ka = 1 + ka   but   ka + (-ka + ka) = ka - 1
//
// Every operation in this header therefore fixes an explicit evaluation
// order instead of assuming the classical laws hold. add(x, y) folds the
// terms of y into x one at a time in descending order; multiply(x, y) forms
// pairwise term products in descending-by-x, then descending-by-y order and
// folds them left to right. Cancellation acts componentwise on the real and
// imaginary parts of a coefficient: (1 + 2i) and (-1 + 5i) overlap only in
// their real parts.
//
// Values are kept canonical at all times: every stored coefficient is
// nonzero, there is at most one term per order, and a value has at least one
// term (the additive collapse of everything real produces +0, never an empty
// sum). Scalars recovered from purely real inputs agree with ordinary
// rational arithmetic; extract them with real_collapse().

#include "calpanic/coefficient.hpp"
#include "calpanic/errors.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace calpanic {

// One graded term, c * ka^order.
struct Term {
    int order = 0;
    Coefficient coeff;

    bool operator==(const Term&) const = default;
};

// Formal logarithm base ka. log of a unit monomial ka^n is n * LAMBDA where
// LAMBDA = log(ka) is an irreducible unit; the only arithmetic defined on it
// is negation and equality. log(+0) = -LAMBDA mirrors log(ka) = +LAMBDA.
struct LogValue {
    long long lambda_multiple = 0;

    bool operator==(const LogValue&) const = default;

    std::string str() const;
};

inline LogValue operator-(const LogValue& v) { return {-v.lambda_multiple}; }

// Instrumentation for the additive fold: number of slot meetings performed,
// including the final insert or merge of each incoming or released term.
struct FoldStats {
    std::size_t steps = 0;
};

class CalpanicNumber {
public:
    // Terms keyed by order, iterated highest order first.
    using TermMap = std::map<int, Coefficient, std::greater<int>>;

    // Promote a scalar. The scalar zero becomes +0 (order -1, coefficient
    // +1): there is no coefficient-zero term in the system.
    static CalpanicNumber real(const Coefficient& value);

    // Single term c * ka^order. Throws DomainError(zero_coefficient) when
    // c == 0: such a term cannot be represented, only reached by cancelling,
    // and cancelling never produces it (the pair re-emits lower instead).
    static CalpanicNumber term(const Coefficient& coeff, int order);

    // Builds from an already-canonical term map; asserts the invariants.
    static CalpanicNumber from_terms(TermMap terms);

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool has_order(int order) const { return terms_.count(order) != 0; }

    // Coefficient at an order, or 0 when the slot is empty.
    Coefficient coeff_at(int order) const;

    int max_order() const { return terms_.begin()->first; }
    int min_order() const { return std::prev(terms_.end())->first; }

    bool is_monomial() const { return terms_.size() == 1; }
    // Single term at order <= -1 (a pure graded zero).
    bool is_pure_zero() const { return is_monomial() && max_order() <= -1; }
    // No singular terms; such a value has a well-defined real collapse.
    bool is_singularity_free() const { return max_order() <= 0; }

    std::vector<Term> term_list() const;

    bool operator==(const CalpanicNumber&) const = default;

private:
    explicit CalpanicNumber(TermMap terms) : terms_(std::move(terms)) {}

    TermMap terms_;
};

// ---- constructors (free-function spellings used throughout) --------------

CalpanicNumber make_real(const Coefficient& value);
CalpanicNumber make_term(const Coefficient& coeff, int order);

// ---- arithmetic -----------------------------------------------------------

// Folds y into x, highest order of y first. Each meeting cancels the
// componentwise overlap of the two coefficients, keeps the remainder at the
// meeting order, and releases the overlap one order lower, where it takes
// the first-operand role at any further meeting. Ordinary incoming terms
// take the second-operand role against whatever the accumulator holds.
CalpanicNumber add(const CalpanicNumber& x, const CalpanicNumber& y);
CalpanicNumber add_traced(const CalpanicNumber& x, const CalpanicNumber& y,
                          FoldStats& stats);

// add(x, negate(y)).
CalpanicNumber subtract(const CalpanicNumber& x, const CalpanicNumber& y);

// Negates every coefficient. Exact involution; swaps +0 and -0.
CalpanicNumber negate(const CalpanicNumber& x);

// Pairwise term products (c_x c_y) * ka^(n_x + n_y), generated with x's
// terms in descending order in the outer loop and y's descending in the
// inner loop, folded left to right starting from the first product.
CalpanicNumber multiply(const CalpanicNumber& x, const CalpanicNumber& y);

// Defined for single-term divisors only: shifts every order of x down by
// the divisor's order and divides the coefficients. Division by a sum has
// no canonical fold order and is rejected (non_monomial_divisor).
CalpanicNumber divide(const CalpanicNumber& x, const CalpanicNumber& y);

// Repeated multiplication, left to right: x^0 = 1, x^k = x^(k-1) * x.
// Negative k is rejected (negative_exponent).
CalpanicNumber pow_int(const CalpanicNumber& x, long long k);

// ka^z for a pure graded zero z: any zero-order exponent collapses the
// power to 1, regardless of the zero's sign or depth (ka^0 = 1 taken at
// face value). The base must be the unit monomial ka^n with coefficient 1
// (unsupported_base otherwise); the exponent must be a pure zero
// (unsupported_exponent otherwise).
CalpanicNumber pow_zero_exponent(const CalpanicNumber& base,
                                 const CalpanicNumber& zero_exponent);

// ---- observation ----------------------------------------------------------

// The order-0 coefficient, i.e. the value an ordinary calculator would
// report after all zero-dust is discarded. Values still carrying a
// singular term (order >= 1) have no real collapse: singular_value.
Coefficient real_collapse(const CalpanicNumber& x);

// Formal log base ka of a unit monomial (+0, ka, ka^n, 0^m). Values with
// several terms or a non-unit coefficient are rejected (unsupported_operand).
LogValue log_ka(const CalpanicNumber& x);

// Exact equality of canonical forms.
bool equals_canonical(const CalpanicNumber& x, const CalpanicNumber& y);

// Equality of all terms at order >= 0, ignoring zero-dust. Distinguishes
// nothing an ordinary instrument could not see.
bool observable_equals(const CalpanicNumber& x, const CalpanicNumber& y);

// The coefficient that would annihilate x's term at the given singular
// order n >= 1 down one level: the c with add(x restricted to that term,
// c*ka^n) cancelling, i.e. simply -coeff. Absent order: no_such_order.
Coefficient elimination_partner(const CalpanicNumber& x, int order);

// {lowest order, highest order} of the stored terms.
std::pair<int, int> order_span(const CalpanicNumber& x);

// ---- operator sugar (fixed orders: left operand first) ---------------------

inline CalpanicNumber operator+(const CalpanicNumber& a, const CalpanicNumber& b) { return add(a, b); }
inline CalpanicNumber operator-(const CalpanicNumber& a, const CalpanicNumber& b) { return subtract(a, b); }
inline CalpanicNumber operator*(const CalpanicNumber& a, const CalpanicNumber& b) { return multiply(a, b); }
inline CalpanicNumber operator/(const CalpanicNumber& a, const CalpanicNumber& b) { return divide(a, b); }
inline CalpanicNumber operator-(const CalpanicNumber& a) { return negate(a); }

} // namespace calpanic
