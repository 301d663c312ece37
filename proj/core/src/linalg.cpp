#include "bent3/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace bent3 {

namespace {

inline std::uint8_t f3(int v) { return static_cast<std::uint8_t>(((v % 3) + 3) % 3); }

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(F3Matrix& m, int col_limit) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < col_limit && row < m.rows(); ++col) {
        int sel = -1;
        for (int r = row; r < m.rows(); ++r)
            if (m.at(r, col)) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        if (sel != row)
            for (int c = 0; c < m.cols(); ++c) std::swap(m.at(sel, c), m.at(row, c));
        const std::uint8_t scale = m.at(row, col);  // 1 and 2 are self-inverse
        for (int c = 0; c < m.cols(); ++c) m.at(row, c) = f3(m.at(row, c) * scale);
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || !m.at(r, col)) continue;
            const int factor = m.at(r, col);
            for (int c = 0; c < m.cols(); ++c) m.at(r, c) = f3(m.at(r, c) - factor * m.at(row, c));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

F3Matrix F3Matrix::identity(int n) {
    F3Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

int F3Matrix::rank() const {
    F3Matrix copy = *this;
    return static_cast<int>(rref(copy, cols_).size());
}

std::optional<F3Matrix> F3Matrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
    F3Matrix aug(rows_, 2 * cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, cols_ + r) = 1;
    }
    if (static_cast<int>(rref(aug, cols_).size()) != rows_) return std::nullopt;
    F3Matrix out(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.at(r, c) = aug.at(r, cols_ + c);
    return out;
}

std::optional<std::vector<std::uint8_t>> F3Matrix::solve(const std::vector<std::uint8_t>& b) const {
    if (static_cast<int>(b.size()) != rows_) throw std::invalid_argument("solve: size mismatch");
    F3Matrix aug(rows_, cols_ + 1);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, cols_) = b[r];
    }
    const auto pivots = rref(aug, cols_);
    for (int r = static_cast<int>(pivots.size()); r < rows_; ++r)
        if (aug.at(r, cols_)) return std::nullopt;
    std::vector<std::uint8_t> x(cols_, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(static_cast<int>(i), cols_);
    return x;
}

std::vector<std::vector<std::uint8_t>> F3Matrix::nullspace() const {
    F3Matrix m = *this;
    const auto pivots = rref(m, cols_);
    std::vector<bool> is_pivot(cols_, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<std::uint8_t>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint8_t> v(cols_, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f3(-m.at(static_cast<int>(i), free));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::uint8_t> F3Matrix::apply(const std::vector<std::uint8_t>& x) const {
    if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("apply: size mismatch");
    std::vector<std::uint8_t> y(rows_, 0);
    for (int r = 0; r < rows_; ++r) {
        int s = 0;
        for (int c = 0; c < cols_; ++c) s += at(r, c) * x[c];
        y[r] = f3(s);
    }
    return y;
}

bool F3Matrix::is_zero() const {
    for (auto v : data_)
        if (v) return false;
    return true;
}

}  // namespace bent3
