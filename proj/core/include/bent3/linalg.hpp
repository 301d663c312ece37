#pragma once

// Small dense linear algebra over F3.

#include <cstdint>
#include <optional>
#include <vector>

namespace bent3 {

class F3Matrix {
public:
    F3Matrix() = default;
    F3Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    std::uint8_t& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    std::uint8_t at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    static F3Matrix identity(int n);

    int rank() const;
    std::optional<F3Matrix> inverse() const;
    /// Some x with A x = b, if one exists.
    std::optional<std::vector<std::uint8_t>> solve(const std::vector<std::uint8_t>& b) const;
    /// Basis of {x : A x = 0}.
    std::vector<std::vector<std::uint8_t>> nullspace() const;
    std::vector<std::uint8_t> apply(const std::vector<std::uint8_t>& x) const;
    bool is_zero() const;

    friend bool operator==(const F3Matrix&, const F3Matrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::uint8_t> data_;
};

}  // namespace bent3
