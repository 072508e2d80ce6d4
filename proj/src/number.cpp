#include "calpanic/number.hpp"

#include <cassert>
#include <optional>
#include <sstream>

namespace calpanic {

namespace {

// Componentwise overlap of two coefficients meeting at one order: in each
// component, the portion that cancels is the smaller magnitude where the
// signs oppose, carrying the sign of the first operand. Components where the
// signs agree (or either side is 0) contribute nothing.
Rational component_overlap(const Rational& first, const Rational& second) {
    int sf = sign_of(first);
    if (sf == 0 || sf * sign_of(second) >= 0) return Rational(0);
    Rational af = abs_of(first);
    Rational as = abs_of(second);
    const Rational& m = af < as ? af : as;
    return sf > 0 ? m : Rational(-m);
}

Coefficient overlap(const Coefficient& first, const Coefficient& second) {
    return {component_overlap(first.re, second.re),
            component_overlap(first.im, second.im)};
}

// Mutable fold accumulator. fold() lands one term and runs its cancellation
// cascade to completion before the next term is folded.
struct Folder {
    CalpanicNumber::TermMap acc;
    std::size_t steps = 0;

    // as_first: whether the incoming side takes the first-operand role at a
    // meeting. Released overlaps always do; ordinary incoming terms face the
    // accumulator as the second operand.
    void fold(int order, Coefficient incoming, bool as_first) {
        int n = order;
        Coefficient b = std::move(incoming);
        for (;;) {
            ++steps;
            auto it = acc.find(n);
            if (it == acc.end()) {
                acc.emplace(n, std::move(b));
                return;
            }
            const Coefficient& held = it->second;
            Coefficient released =
                as_first ? overlap(b, held) : overlap(held, b);
            Coefficient remainder = held + b;
            if (released.is_zero()) {
                // No opposition: a plain merge. Both coefficients were
                // nonzero with agreeing signs per component, so the
                // remainder cannot vanish.
                it->second = std::move(remainder);
                return;
            }
            if (remainder.is_zero())
                acc.erase(it);
            else
                it->second = std::move(remainder);
            // The cancelled pair survives one order lower, inheriting the
            // slot's priority: it is the first operand from here on.
            b = std::move(released);
            n -= 1;
            as_first = true;
        }
    }
};

std::string describe_term(const CalpanicNumber& x) {
    std::ostringstream out;
    out << "value with orders [" << x.min_order() << ", " << x.max_order()
        << "]";
    return out.str();
}

} // namespace

std::string LogValue::str() const {
    if (lambda_multiple == 1) return "L";
    if (lambda_multiple == -1) return "-L";
    return std::to_string(lambda_multiple) + "*L";
}

CalpanicNumber CalpanicNumber::real(const Coefficient& value) {
    TermMap t;
    if (value.is_zero())
        t.emplace(-1, Coefficient(1)); // scalar zero promotes to +0
    else
        t.emplace(0, value);
    return CalpanicNumber(std::move(t));
}

CalpanicNumber CalpanicNumber::term(const Coefficient& coeff, int order) {
    if (coeff.is_zero())
        throw DomainError(Errc::zero_coefficient,
                          "cannot build a term with coefficient 0 at order " +
                              std::to_string(order) +
                              "; a cancelled pair re-emits one order lower "
                              "instead of vanishing");
    TermMap t;
    t.emplace(order, coeff);
    return CalpanicNumber(std::move(t));
}

CalpanicNumber CalpanicNumber::from_terms(TermMap terms) {
    assert(!terms.empty());
#ifndef NDEBUG
    for (const auto& [order, coeff] : terms) {
        (void)order;
        assert(!coeff.is_zero());
    }
#endif
    return CalpanicNumber(std::move(terms));
}

Coefficient CalpanicNumber::coeff_at(int order) const {
    auto it = terms_.find(order);
    return it == terms_.end() ? Coefficient() : it->second;
}

std::vector<Term> CalpanicNumber::term_list() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [order, coeff] : terms_) out.push_back({order, coeff});
    return out;
}

CalpanicNumber make_real(const Coefficient& value) {
    return CalpanicNumber::real(value);
}

CalpanicNumber make_term(const Coefficient& coeff, int order) {
    return CalpanicNumber::term(coeff, order);
}

CalpanicNumber add_traced(const CalpanicNumber& x, const CalpanicNumber& y,
                          FoldStats& stats) {
    Folder folder{x.terms(), 0};
    for (const auto& [order, coeff] : y.terms())
        folder.fold(order, coeff, /*as_first=*/false);
    stats.steps = folder.steps;
    return CalpanicNumber::from_terms(std::move(folder.acc));
}

CalpanicNumber add(const CalpanicNumber& x, const CalpanicNumber& y) {
    FoldStats ignored;
    return add_traced(x, y, ignored);
}

CalpanicNumber subtract(const CalpanicNumber& x, const CalpanicNumber& y) {
    return add(x, negate(y));
}

CalpanicNumber negate(const CalpanicNumber& x) {
    CalpanicNumber::TermMap t;
    for (const auto& [order, coeff] : x.terms()) t.emplace(order, -coeff);
    return CalpanicNumber::from_terms(std::move(t));
}

CalpanicNumber multiply(const CalpanicNumber& x, const CalpanicNumber& y) {
    // The product of two nonzero coefficients is nonzero, so every pairwise
    // product is a constructible term. Folding starts from the first product
    // itself; seeding with +0 would plant a spurious zero in the cascade.
    std::optional<CalpanicNumber> acc;
    for (const auto& [nx, cx] : x.terms()) {
        for (const auto& [ny, cy] : y.terms()) {
            CalpanicNumber p = make_term(cx * cy, nx + ny);
            acc = acc ? add(*acc, p) : p;
        }
    }
    return *acc;
}

CalpanicNumber divide(const CalpanicNumber& x, const CalpanicNumber& y) {
    if (!y.is_monomial())
        throw DomainError(Errc::non_monomial_divisor,
                          "divisor must be a single term; got " +
                              describe_term(y));
    const auto& [dorder, dcoeff] = *y.terms().begin();
    CalpanicNumber::TermMap t;
    for (const auto& [order, coeff] : x.terms())
        t.emplace(order - dorder, coeff / dcoeff);
    return CalpanicNumber::from_terms(std::move(t));
}

CalpanicNumber pow_int(const CalpanicNumber& x, long long k) {
    if (k < 0)
        throw DomainError(Errc::negative_exponent,
                          "negative exponents are not defined; divide by a "
                          "monomial instead");
    if (k == 0) return make_real(Coefficient(1));
    CalpanicNumber acc = x;
    for (long long i = 1; i < k; ++i) acc = multiply(acc, x);
    return acc;
}

CalpanicNumber pow_zero_exponent(const CalpanicNumber& base,
                                 const CalpanicNumber& zero_exponent) {
    if (!base.is_monomial() || !base.terms().begin()->second.is_one())
        throw DomainError(Errc::unsupported_base,
                          "zero exponents are defined on unit monomials "
                          "ka^n only");
    if (!zero_exponent.is_pure_zero())
        throw DomainError(Errc::unsupported_exponent,
                          "symbolic exponent must be a pure zero (a single "
                          "term of order <= -1)");
    return make_real(Coefficient(1));
}

Coefficient real_collapse(const CalpanicNumber& x) {
    if (x.max_order() >= 1)
        throw DomainError(Errc::singular_value,
                          "no real collapse: " + describe_term(x) +
                              " still carries a singular term");
    return x.coeff_at(0);
}

LogValue log_ka(const CalpanicNumber& x) {
    if (!x.is_monomial() || !x.terms().begin()->second.is_one())
        throw DomainError(Errc::unsupported_operand,
                          "log is defined on unit monomials ka^n only");
    return LogValue{x.max_order()};
}

bool equals_canonical(const CalpanicNumber& x, const CalpanicNumber& y) {
    return x.terms() == y.terms();
}

bool observable_equals(const CalpanicNumber& x, const CalpanicNumber& y) {
    auto ix = x.terms().begin();
    auto iy = y.terms().begin();
    // Terms iterate in descending order; compare until both sides sink
    // below order 0.
    while (ix != x.terms().end() && ix->first >= 0 && iy != y.terms().end() &&
           iy->first >= 0) {
        if (*ix != *iy) return false;
        ++ix;
        ++iy;
    }
    bool x_done = ix == x.terms().end() || ix->first < 0;
    bool y_done = iy == y.terms().end() || iy->first < 0;
    return x_done && y_done;
}

Coefficient elimination_partner(const CalpanicNumber& x, int order) {
    if (order < 1)
        throw DomainError(Errc::no_such_order,
                          "elimination targets singular orders (>= 1); got " +
                              std::to_string(order));
    if (!x.has_order(order))
        throw DomainError(Errc::no_such_order,
                          "no term at order " + std::to_string(order));
    return -x.coeff_at(order);
}

std::pair<int, int> order_span(const CalpanicNumber& x) {
    return {x.min_order(), x.max_order()};
}

std::string coefficient_str(const Coefficient& c) {
    if (c.is_real()) return rational_str(c.re);
    std::string im_part;
    if (c.im == 1)
        im_part = "i";
    else if (c.im == -1)
        im_part = "-i";
    else
        im_part = rational_str(c.im) + "i";
    if (c.re == 0) return im_part;
    if (c.im > 0) return rational_str(c.re) + "+" + im_part;
    return rational_str(c.re) + im_part;
}

} // namespace calpanic
