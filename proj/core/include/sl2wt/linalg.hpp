#pragma once

#include "sl2wt/rational.hpp"

#include <map>
#include <vector>

namespace sl2wt {

/// Dense matrix of rationals.  Row-major.
class QMatrix {
  public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::size_t rank() const;
    Rational determinant() const;

    /// Basis of the right kernel {x : Mx = 0}, each vector of length cols().
    std::vector<std::vector<Rational>> kernel_basis() const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

/// Incremental row-echelon span of sparse rational vectors.  Used for exact
/// rank/dimension counting and membership tests.  Pivoting is by column
/// order only; entries are exact so no magnitude pivoting applies.
class SparseSpan {
  public:
    using Vec = std::map<int, Rational>;

    /// Reduces v against the current span; returns the residue.
    Vec reduce(Vec v) const;

    /// Reduces and, if a residue remains, inserts it.  Returns true if the
    /// vector enlarged the span.
    bool insert(Vec v);

    bool contains(const Vec& v) const { return reduce(v).empty(); }
    std::size_t dim() const { return rows_.size(); }
    const std::map<int, Vec>& rows() const { return rows_; }

  private:
    std::map<int, Vec> rows_; // pivot column -> row with unit pivot
};

} // namespace sl2wt
