#pragma once

// Error taxonomy. Domain violations (an operation applied outside its
// defined domain) carry a machine-checkable code; syntax failures carry the
// byte offset of the failure and a description of what was expected; and
// evaluation failures are domain violations annotated with the offset of the
// offending expression node.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace calpanic {

enum class Errc {
    zero_coefficient,      // tried to build a term with coefficient 0
    non_monomial_divisor,  // divide() needs a single-term divisor
    negative_exponent,     // pow with k < 0
    unsupported_base,      // zero-exponent power needs a unit monomial base
    unsupported_exponent,  // symbolic exponent was not a pure zero
    singular_value,        // real collapse of a value with singular terms
    unsupported_operand,   // log of a non-unit or multi-term value
    no_such_order,         // elimination partner for an absent order
    unbound_symbol,        // evaluated an expression containing the unknown
    shape_mismatch,        // matrix dimensions do not fit the operation
    degenerate_rhs,        // equation family needs k != 0
    unsupported_equation,  // equation text outside the solvable family
};

const char* errc_name(Errc code);

class DomainError : public std::runtime_error {
public:
    DomainError(Errc code, const std::string& what_arg);

    Errc code() const { return code_; }

private:
    Errc code_;
};

class SyntaxError : public std::runtime_error {
public:
    SyntaxError(std::size_t offset, const std::string& expected);

    // Byte offset into the source text where parsing failed.
    std::size_t offset() const { return offset_; }
    // Human-readable description of the acceptable next tokens.
    const std::string& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

class EvalError : public DomainError {
public:
    EvalError(const DomainError& cause, std::size_t offset);

    // Byte offset of the expression node whose evaluation failed.
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

} // namespace calpanic
