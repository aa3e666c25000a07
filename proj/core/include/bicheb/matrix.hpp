#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

namespace bicheb {

/// Dense row-major matrix with value semantics. Entry (r, c) lives at
/// data()[r * cols() + c].
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  T& operator()(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }
  const T& operator()(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }

  /// Entry (r, c), or zero when the index falls outside the stored shape.
  T at_or_zero(std::size_t r, std::size_t c) const {
    return (r < rows_ && c < cols_) ? data_[r * cols_ + c] : T{};
  }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  std::span<T> data() noexcept { return data_; }
  std::span<const T> data() const noexcept { return data_; }

  /// Leading rows x cols corner; out-of-range entries are zero-filled.
  Matrix block(std::size_t rows, std::size_t cols) const {
    Matrix out(rows, cols);
    for (std::size_t r = 0; r < rows && r < rows_; ++r)
      for (std::size_t c = 0; c < cols && c < cols_; ++c)
        out(r, c) = (*this)(r, c);
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

}  // namespace bicheb
