#ifndef SIMPLEXGRAD_MATRIX_HPP
#define SIMPLEXGRAD_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "simplexgrad/errors.hpp"

namespace simplexgrad {

// Dense row-major matrix.  Deliberately minimal: the library only needs
// element access, row views and column extraction.
template <class T>
class Matrix {
 public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols, T value = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, value) {}

  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) {
        throw DimensionError("matrix initializer rows have unequal lengths");
      }
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<T> row(std::size_t i) {
    return std::span<T>(data_.data() + i * cols_, cols_);
  }
  std::span<const T> row(std::size_t i) const {
    return std::span<const T>(data_.data() + i * cols_, cols_);
  }

  std::vector<T> col(std::size_t j) const {
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  std::span<const T> data() const noexcept { return data_; }
  std::span<T> data() noexcept { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

}  // namespace simplexgrad

#endif  // SIMPLEXGRAD_MATRIX_HPP
