#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace tdesc {

using Int = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Int>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows);
  static IntMatrix column(const IntVector& v);
  /// Permutation matrix sending e_i to e_{perm[i]}.
  static IntMatrix permutation(const std::vector<int>& perm);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector col(std::size_t c) const;
  void set_row(std::size_t r, const IntVector& v);
  void set_col(std::size_t c, const IntVector& v);

  IntMatrix transpose() const;
  IntMatrix submatrix_rows(const std::vector<std::size_t>& rows) const;
  IntMatrix submatrix_cols(const std::vector<std::size_t>& cols) const;
  IntMatrix hstack(const IntMatrix& other) const;
  IntMatrix vstack(const IntMatrix& other) const;

  bool is_zero() const;
  bool is_identity() const;

  // Elementary operations (used by the normal form routines).
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& k);
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  const std::vector<Int>& data() const { return data_; }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator<(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& v);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const Int& k, const IntMatrix& a);

IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator*(const Int& k, const IntVector& v);
Int dot(const IntVector& a, const IntVector& b);
bool is_zero(const IntVector& v);
Int content(const IntVector& v);  // gcd of entries, 0 for the zero vector
IntVector primitive(const IntVector& v);
IntVector zero_vector(std::size_t n);
IntVector unit_vector(std::size_t n, std::size_t i);

/// Exact determinant (fraction-free Bareiss elimination).
Int determinant(const IntMatrix& a);
/// Inverse of a unimodular matrix; throws std::domain_error otherwise.
IntMatrix unimodular_inverse(const IntMatrix& a);
bool is_unimodular(const IntMatrix& a);
/// Rank over Q.
std::size_t rank(const IntMatrix& a);

std::string to_string(const IntVector& v);
std::string to_string(const IntMatrix& m);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace tdesc
