#include "calpanic/errors.hpp"

namespace calpanic {

const char* errc_name(Errc code) {
    switch (code) {
    case Errc::zero_coefficient: return "zero-coefficient";
    case Errc::non_monomial_divisor: return "non-monomial-divisor";
    case Errc::negative_exponent: return "negative-exponent";
    case Errc::unsupported_base: return "unsupported-base";
    case Errc::unsupported_exponent: return "unsupported-exponent";
    case Errc::singular_value: return "singular-value";
    case Errc::unsupported_operand: return "unsupported-operand";
    case Errc::no_such_order: return "no-such-order";
    case Errc::unbound_symbol: return "unbound-symbol";
    case Errc::shape_mismatch: return "shape-mismatch";
    case Errc::degenerate_rhs: return "degenerate-rhs";
    case Errc::unsupported_equation: return "unsupported-equation";
    }
    return "unknown";
}

DomainError::DomainError(Errc code, const std::string& what_arg)
    : std::runtime_error(what_arg), code_(code) {}

SyntaxError::SyntaxError(std::size_t offset, const std::string& expected)
    : std::runtime_error("syntax error at offset " + std::to_string(offset) +
                         ": expected " + expected),
      offset_(offset),
      expected_(expected) {}

EvalError::EvalError(const DomainError& cause, std::size_t offset)
    : DomainError(cause.code(), "evaluation error at offset " +
                                    std::to_string(offset) + ": " +
                                    cause.what()),
      offset_(offset) {}

} // namespace calpanic
