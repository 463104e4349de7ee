#include "dwkit/smith.hpp"

#include <cstdlib>
#include <utility>

#include "dwkit/error.hpp"

namespace dwkit {

namespace {

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw DomainError("integer overflow in matrix arithmetic");
  return out;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out)) throw DomainError("integer overflow in matrix arithmetic");
  return out;
}

// Quotient rounded to nearest, so remainders satisfy |r| <= |b|/2 and
// entries grow more slowly than with truncation.
std::int64_t nearest_quotient(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  const std::int64_t r = a - q * b;
  if (2 * std::llabs(r) > std::llabs(b)) q += ((r < 0) == (b < 0)) ? 1 : -1;
  return q;
}

// Elementary operations applied to the working matrix and its transforms.
// Row operations act on D and U (and inversely on u_inverse); column
// operations act on D and V.
class Reducer {
 public:
  explicit Reducer(const IntMatrix& m)
      : d(m), u(IntMatrix::identity(m.rows())), v(IntMatrix::identity(m.cols())),
        u_inv(IntMatrix::identity(m.rows())) {}

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < d.cols(); ++c) std::swap(d(a, c), d(b, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(a, c), u(b, c));
    for (std::size_t r = 0; r < u_inv.rows(); ++r) std::swap(u_inv(r, a), u_inv(r, b));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < d.rows(); ++r) std::swap(d(r, a), d(r, b));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, a), v(r, b));
  }

  // row_target -= q * row_source
  void row_axpy(std::size_t target, std::size_t source, std::int64_t q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < d.cols(); ++c) d(target, c) = sub(d(target, c), mul(q, d(source, c)));
    for (std::size_t c = 0; c < u.cols(); ++c) u(target, c) = sub(u(target, c), mul(q, u(source, c)));
    // inverse: col_source += q * col_target
    for (std::size_t r = 0; r < u_inv.rows(); ++r) u_inv(r, source) = sub(u_inv(r, source), mul(-q, u_inv(r, target)));
  }

  // col_target -= q * col_source
  void col_axpy(std::size_t target, std::size_t source, std::int64_t q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < d.rows(); ++r) d(r, target) = sub(d(r, target), mul(q, d(r, source)));
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, target) = sub(v(r, target), mul(q, v(r, source)));
  }

  void negate_row(std::size_t r0) {
    for (std::size_t c = 0; c < d.cols(); ++c) d(r0, c) = -d(r0, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(r0, c) = -u(r0, c);
    for (std::size_t r = 0; r < u_inv.rows(); ++r) u_inv(r, r0) = -u_inv(r, r0);
  }

  IntMatrix d, u, v, u_inv;
};

}  // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw InputError("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (r != c && (*this)(r, c) != 0) return false;
    }
  }
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix dimension mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      std::int64_t x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = sub(out(i, j), mul(-x, b(k, j)));
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

std::int64_t determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  }
  int sign = 1;
  __int128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return static_cast<std::int64_t>(sign * a[n - 1][n - 1]);
}

std::vector<std::int64_t> SmithNormalForm::diagonal() const {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
  return out;
}

SmithNormalForm smith_normal_form(const IntMatrix& m) {
  Reducer red(m);
  IntMatrix& d = red.d;
  const std::size_t rows = d.rows(), cols = d.cols();

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pr = rows, pc = cols;
    for (std::size_t r = t; r < rows; ++r) {
      for (std::size_t c = t; c < cols; ++c) {
        if (d(r, c) != 0 && (pr == rows || std::llabs(d(r, c)) < std::llabs(d(pr, pc)))) {
          pr = r;
          pc = c;
        }
      }
    }
    if (pr == rows) break;
    red.swap_rows(t, pr);
    red.swap_cols(t, pc);

    for (;;) {
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        red.row_axpy(r, t, nearest_quotient(d(r, t), d(t, t)));
        if (d(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        red.col_axpy(c, t, nearest_quotient(d(t, c), d(t, t)));
        if (d(t, c) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; promote it.
        std::size_t br = t, bc = t;
        for (std::size_t r = t + 1; r < rows; ++r) {
          if (d(r, t) != 0 && std::llabs(d(r, t)) < std::llabs(d(br, bc))) {
            br = r;
            bc = t;
          }
        }
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (d(t, c) != 0 && std::llabs(d(t, c)) < std::llabs(d(br, bc))) {
            br = t;
            bc = c;
          }
        }
        red.swap_rows(t, br);
        red.swap_cols(t, bc);
        continue;
      }
      // Pivot must divide the whole trailing block.
      std::size_t bad_row = rows;
      for (std::size_t r = t + 1; r < rows && bad_row == rows; ++r) {
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (d(r, c) % d(t, t) != 0) {
            bad_row = r;
            break;
          }
        }
      }
      if (bad_row == rows) break;
      red.row_axpy(t, bad_row, -1);
    }
    if (d(t, t) < 0) red.negate_row(t);
  }
  return SmithNormalForm{std::move(red.d), std::move(red.u), std::move(red.v), std::move(red.u_inv)};
}

std::size_t rank(const IntMatrix& m) {
  std::size_t r = 0;
  for (std::int64_t x : smith_normal_form(m).diagonal()) {
    if (x != 0) ++r;
  }
  return r;
}

}  // namespace dwkit
