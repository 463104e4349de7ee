#ifndef DWKIT_SMITH_HPP
#define DWKIT_SMITH_HPP

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <vector>

namespace dwkit {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transpose() const;
  bool is_diagonal() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Exact determinant of a square matrix (fraction-free Bareiss elimination).
std::int64_t determinant(const IntMatrix& m);

/**
 * U * M * V = D with U, V unimodular and D diagonal, d_i >= 0 and d_i | d_{i+1}
 * (zeros last). u_inverse is carried along so that callers can map
 * coordinates back without inverting U.
 */
struct SmithNormalForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  IntMatrix u_inverse;

  /// min(rows, cols) diagonal entries of d.
  std::vector<std::int64_t> diagonal() const;
};

SmithNormalForm smith_normal_form(const IntMatrix& m);

/// Rank over Q, read off the Smith form.
std::size_t rank(const IntMatrix& m);

}  // namespace dwkit

#endif  // DWKIT_SMITH_HPP
