#include "calpanic/matrix.hpp"

#include "calpanic/errors.hpp"
#include "calpanic/expr.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <optional>
#include <sstream>

namespace calpanic {

namespace {

void require_shape(bool ok, const std::string& what) {
    if (!ok) throw DomainError(Errc::shape_mismatch, what);
}

// Pairwise term products of x and y (x descending outer, y descending
// inner) folded into the running entry accumulator. In paper-display mode,
// products of a real (order-0) term with a zero (order <= -1) term are
// dropped in either orientation; a product all of whose terms drop simply
// contributes nothing.
void fold_product(std::optional<CalpanicNumber>& acc, const CalpanicNumber& x,
                  const CalpanicNumber& y, MulMode mode) {
    std::optional<CalpanicNumber> product;
    for (const auto& [nx, cx] : x.terms()) {
        for (const auto& [ny, cy] : y.terms()) {
            if (mode == MulMode::paper_display &&
                ((nx == 0 && ny <= -1) || (ny == 0 && nx <= -1)))
                continue;
            CalpanicNumber term = make_term(cx * cy, nx + ny);
            product = product ? add(*product, term) : term;
        }
    }
    if (!product) return;
    acc = acc ? add(*acc, *product) : *product;
}

} // namespace

CalpanicMatrix::CalpanicMatrix(std::size_t rows, std::size_t cols,
                               const CalpanicNumber& fill)
    : rows_(rows), cols_(cols), entries_(rows * cols, fill) {
    require_shape(rows >= 1 && cols >= 1,
                  "matrix dimensions must be positive");
}

CalpanicMatrix CalpanicMatrix::identity(std::size_t n) {
    CalpanicMatrix m(n, n, make_real(Coefficient(0)));
    for (std::size_t d = 0; d < n; ++d)
        m.at(d, d) = make_real(Coefficient(1));
    return m;
}

const CalpanicNumber& CalpanicMatrix::at(std::size_t r, std::size_t c) const {
    require_shape(r < rows_ && c < cols_, "entry index out of range");
    return entries_[r * cols_ + c];
}

CalpanicNumber& CalpanicMatrix::at(std::size_t r, std::size_t c) {
    require_shape(r < rows_ && c < cols_, "entry index out of range");
    return entries_[r * cols_ + c];
}

CalpanicMatrix mat_add(const CalpanicMatrix& a, const CalpanicMatrix& b) {
    require_shape(a.rows() == b.rows() && a.cols() == b.cols(),
                  "entrywise add needs equal shapes");
    CalpanicMatrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            out.at(r, c) = add(a.at(r, c), b.at(r, c));
    return out;
}

CalpanicMatrix mat_mul(const CalpanicMatrix& a, const CalpanicMatrix& b,
                       MulMode mode) {
    require_shape(a.cols() == b.rows(),
                  "inner dimensions must agree for multiplication");
    CalpanicMatrix out(a.rows(), b.cols(), make_real(Coefficient(0)));
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) {
            std::optional<CalpanicNumber> acc;
            for (std::size_t k = 0; k < a.cols(); ++k)
                fold_product(acc, a.at(r, k), b.at(k, c), mode);
            // Every product dropped: the entry is an honest promoted zero.
            out.at(r, c) = acc ? *acc : make_real(Coefficient(0));
        }
    }
    return out;
}

CalpanicNumber det2(const CalpanicMatrix& a) {
    require_shape(a.rows() == 2 && a.cols() == 2,
                  "determinant is defined for 2x2 only");
    return subtract(multiply(a.at(0, 0), a.at(1, 1)),
                    multiply(a.at(0, 1), a.at(1, 0)));
}

DetProductReport det_product_check(const CalpanicMatrix& a,
                                   const CalpanicMatrix& b, MulMode mode) {
    CalpanicNumber lhs = det2(mat_mul(a, b, mode));
    CalpanicNumber rhs = multiply(det2(a), det2(b));
    return {equals_canonical(lhs, rhs), observable_equals(lhs, rhs), lhs,
            rhs};
}

CommutationReport identity_commutation_check(const CalpanicMatrix& a,
                                             MulMode mode) {
    require_shape(a.rows() == 2 && a.cols() == 2,
                  "the commutation check covers the 2x2 case");
    CalpanicMatrix id = CalpanicMatrix::identity(2);
    CommutationReport report{.condition_holds = false,
                             .observable_equal = true,
                             .canonical_equal = true,
                             .canonical_mismatches = {},
                             .ai = mat_mul(a, id, mode),
                             .ia = mat_mul(id, a, mode)};
    report.condition_holds =
        a.at(0, 0).coeff_at(1) == a.at(1, 1).coeff_at(1) &&
        a.at(1, 0).coeff_at(1) == a.at(0, 1).coeff_at(1);
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            const CalpanicNumber& x = report.ai.at(r, c);
            const CalpanicNumber& y = report.ia.at(r, c);
            if (!observable_equals(x, y)) report.observable_equal = false;
            if (!equals_canonical(x, y)) {
                report.canonical_equal = false;
                report.canonical_mismatches.emplace_back(r, c);
            }
        }
    }
    return report;
}

CalpanicMatrix matrix_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw SyntaxError(err.byte, "a JSON array of arrays of expression "
                                    "strings");
    }
    require_shape(doc.is_array() && !doc.empty(),
                  "matrix JSON must be a non-empty array of rows");
    std::size_t rows = doc.size();
    require_shape(doc[0].is_array() && !doc[0].empty(),
                  "matrix rows must be non-empty arrays");
    std::size_t cols = doc[0].size();
    CalpanicMatrix out(rows, cols, make_real(Coefficient(0)));
    for (std::size_t r = 0; r < rows; ++r) {
        require_shape(doc[r].is_array() && doc[r].size() == cols,
                      "matrix rows must all have the same length");
        for (std::size_t c = 0; c < cols; ++c) {
            require_shape(doc[r][c].is_string(),
                          "matrix entries must be expression strings");
            out.at(r, c) =
                evaluate(*parse(doc[r][c].get<std::string>()));
        }
    }
    return out;
}

std::string matrix_to_json(const CalpanicMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(render(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows.dump();
}

std::string matrix_to_text(const CalpanicMatrix& m) {
    std::vector<std::vector<std::string>> cells(m.rows());
    std::vector<std::size_t> widths(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        cells[r].resize(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c) {
            cells[r][c] = render(m.at(r, c));
            widths[c] = std::max(widths[c], cells[r][c].size());
        }
    }
    std::ostringstream out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out << "[ ";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c != 0) out << "   ";
            out << cells[r][c]
                << std::string(widths[c] - cells[r][c].size(), ' ');
        }
        out << " ]\n";
    }
    return out.str();
}

} // namespace calpanic
