#pragma once

// Matrices over calpanic numbers. The interesting behaviour is all in the
// dot-product bookkeeping: multiplying by the identity matrix is *not* the
// identity map, because off-diagonal +0 entries contribute real terms
// (b*ka times 0 is b) and retained zero terms (a times 0) to every entry.
//
// Two multiplication modes:
//   strict_conservation  keep every pairwise term product (the default;
//                        nothing is discarded, so totals are conserved)
//   paper_display        drop pair products of a real (order-0) term with a
//                        zero (order <= -1) term, in either order, which
//                        reproduces the conventionally displayed matrices
//
// Fold orders are fixed and observable: entry (i,j) accumulates the whole
// products multiply(A[i,k], B[k,j]) with core add, k ascending.

#include "calpanic/number.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace calpanic {

enum class MulMode {
    strict_conservation,
    paper_display,
};

class CalpanicMatrix {
public:
    CalpanicMatrix(std::size_t rows, std::size_t cols,
                   const CalpanicNumber& fill);

    // Ones on the diagonal, +0 everywhere else.
    static CalpanicMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const CalpanicNumber& at(std::size_t r, std::size_t c) const;
    CalpanicNumber& at(std::size_t r, std::size_t c);

    bool operator==(const CalpanicMatrix&) const = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<CalpanicNumber> entries_; // row-major
};

// Entrywise add(A_ij, B_ij) (A's entry is the left operand).
CalpanicMatrix mat_add(const CalpanicMatrix& a, const CalpanicMatrix& b);

CalpanicMatrix mat_mul(const CalpanicMatrix& a, const CalpanicMatrix& b,
                       MulMode mode = MulMode::strict_conservation);

// subtract(multiply(A11, A22), multiply(A12, A21)), exactly that order.
// 2x2 only: larger expansions need cofactor conventions the non-associative
// setting does not determine.
CalpanicNumber det2(const CalpanicMatrix& a);

struct DetProductReport {
    bool equal_canonical = false;
    bool equal_observable = false;
    CalpanicNumber lhs; // det2(mat_mul(A, B, mode))
    CalpanicNumber rhs; // multiply(det2(A), det2(B))
};

DetProductReport det_product_check(const CalpanicMatrix& a,
                                   const CalpanicMatrix& b, MulMode mode);

struct CommutationReport {
    // The ka-coefficient condition on A: b11 == b22 and b21 == b12.
    bool condition_holds = false;
    // Entrywise comparison of A*I and I*A.
    bool observable_equal = false;
    bool canonical_equal = false;
    std::vector<std::pair<std::size_t, std::size_t>> canonical_mismatches;
    CalpanicMatrix ai;
    CalpanicMatrix ia;
};

// Multiplies A by the identity on both sides and reports whether the two
// products agree. When the condition holds they agree observably; canonical
// agreement generally fails because the released zero dust differs by fold
// order.
CommutationReport identity_commutation_check(const CalpanicMatrix& a,
                                             MulMode mode);

// JSON array of arrays of expression strings, e.g.
// [["1 + 2*ka","3"],["0","ka"]]. Rows must be equal length and non-empty.
CalpanicMatrix matrix_from_json(const std::string& text);
std::string matrix_to_json(const CalpanicMatrix& m);

// Aligned plain-text grid of rendered entries.
std::string matrix_to_text(const CalpanicMatrix& m);

} // namespace calpanic
