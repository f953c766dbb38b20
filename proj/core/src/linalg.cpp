#include "sl2wt/linalg.hpp"

#include <algorithm>

namespace sl2wt {

namespace {

// Exact Gauss-Jordan to reduced echelon form.  Pivot choice: within the
// current column, the nonzero entry of least bit complexity.  Returns the
// pivot column of each eliminated row.
std::vector<int> rref(std::vector<std::vector<Rational>>& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = rows;
        std::size_t best_cost = 0;
        for (std::size_t i = r; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            std::size_t cost = rat_complexity(m[i][c]);
            if (best == rows || cost < best_cost) {
                best = i;
                best_cost = cost;
            }
        }
        if (best == rows) continue;
        std::swap(m[r], m[best]);
        Rational inv = Rational(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t QMatrix::rank() const {
    std::vector<std::vector<Rational>> m(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        m[i].assign(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    return rref(m).size();
}

Rational QMatrix::determinant() const {
    if (rows_ != cols_) throw domain_error("determinant of non-square matrix");
    std::vector<std::vector<Rational>> m(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        m[i].assign(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    Rational det(1);
    for (std::size_t c = 0; c < cols_; ++c) {
        std::size_t best = rows_;
        std::size_t best_cost = 0;
        for (std::size_t i = c; i < rows_; ++i) {
            if (m[i][c] == 0) continue;
            std::size_t cost = rat_complexity(m[i][c]);
            if (best == rows_ || cost < best_cost) {
                best = i;
                best_cost = cost;
            }
        }
        if (best == rows_) return Rational(0);
        if (best != c) {
            std::swap(m[c], m[best]);
            det = -det;
        }
        det *= m[c][c];
        Rational inv = Rational(1) / m[c][c];
        for (std::size_t i = c + 1; i < rows_; ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] * inv;
            for (std::size_t j = c; j < cols_; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

std::vector<std::vector<Rational>> QMatrix::kernel_basis() const {
    std::vector<std::vector<Rational>> m(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        m[i].assign(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(cols_, false);
    for (int p : pivots) is_pivot[p] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols_);
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

SparseSpan::Vec SparseSpan::reduce(Vec v) const {
    for (auto it = v.begin(); it != v.end();) {
        if (it->second == 0) {
            it = v.erase(it);
            continue;
        }
        auto row = rows_.find(it->first);
        if (row == rows_.end()) {
            ++it;
            continue;
        }
        Rational f = it->second;
        for (const auto& [col, val] : row->second) {
            auto& entry = v[col];
            entry -= f * val;
            if (entry == 0) v.erase(col);
        }
        it = v.begin(); // leading cols may have changed; restart from front
    }
    return v;
}

bool SparseSpan::insert(Vec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    auto lead = v.begin();
    Rational inv = Rational(1) / lead->second;
    Vec row;
    for (const auto& [col, val] : v) row[col] = val * inv;
    int pivot = lead->first;
    // back-substitute into existing rows to keep reduced form
    for (auto& [p, r] : rows_) {
        auto hit = r.find(pivot);
        if (hit == r.end()) continue;
        Rational f = hit->second;
        for (const auto& [col, val] : row) {
            auto& entry = r[col];
            entry -= f * val;
            if (entry == 0) r.erase(col);
        }
    }
    rows_[pivot] = std::move(row);
    return true;
}

} // namespace sl2wt
