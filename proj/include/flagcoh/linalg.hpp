#pragma once

#include "flagcoh/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace flagcoh {

using Vector = std::vector<Rational>;

/// Exact rank of the given rows. Rows are cleared of denominators and
/// eliminated with the fraction-free (Bareiss) scheme over the integers.
std::size_t rank_fraction_free(const std::vector<Vector>& rows);

/// Reduced row echelon form built incrementally. A row's pivot is its
/// lowest-indexed nonzero column, so callers that want a preferred pivot
/// order (e.g. largest monomial first) arrange their columns accordingly.
class Echelon {
public:
    explicit Echelon(std::size_t cols) : cols_(cols), pivot_row_(cols) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }

    /// Adds a row to the span. Returns false if it was already in the span.
    bool insert(Vector row);

    /// Reduces v against every stored pivot; the result vanishes on all pivot
    /// columns and is zero exactly when v lies in the span.
    Vector reduce(Vector v) const;

    bool is_pivot(std::size_t col) const { return pivot_row_[col].has_value(); }

    /// The stored row whose pivot is col (pivot entry equal to 1).
    const Vector& row_for_pivot(std::size_t col) const { return rows_[*pivot_row_[col]]; }

    const std::vector<Vector>& rows() const { return rows_; }

private:
    std::size_t cols_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivot_of_row_;
    std::vector<std::optional<std::size_t>> pivot_row_;
};

/// Basis of {x : A x = 0} for A given by rows; one vector per free column,
/// with a 1 in that column.
std::vector<Vector> nullspace(const std::vector<Vector>& rows, std::size_t cols);

bool is_zero(const Vector& v);

}  // namespace flagcoh
