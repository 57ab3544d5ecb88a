#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace sphpi {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix over an exact ring (Integer or Rational).
template <typename T> class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_)
      throw DimensionError("matrix entry count does not match rows*cols");
  }
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t rows,
                             const std::vector<std::vector<T>> &cols);
  static Matrix from_rows(std::size_t cols,
                          const std::vector<std::vector<T>> &rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  T &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T &operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::vector<T> column(std::size_t j) const;

  Matrix transpose() const;
  /// Rows of `this` followed by rows of `below`; column counts must agree.
  Matrix stack(const Matrix &below) const;
  /// Columns of `this` followed by columns of `right`.
  Matrix concat(const Matrix &right) const;
  Matrix columns(std::size_t first, std::size_t count) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  friend bool operator==(const Matrix &a, const Matrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);
RatMatrix operator*(const RatMatrix &a, const RatMatrix &b);
IntVector operator*(const IntMatrix &a, std::span<const Integer> x);
RatVector operator*(const RatMatrix &a, std::span<const Rational> x);

RatMatrix to_rational(const IntMatrix &m);
/// Integer matrix equal to `m`; throws if some entry is not integral.
IntMatrix to_integer(const RatMatrix &m);
/// Least common multiple of all entry denominators (1 for an empty matrix).
Integer common_denominator(const RatMatrix &m);

std::ostream &operator<<(std::ostream &os, const IntMatrix &m);
std::ostream &operator<<(std::ostream &os, const RatMatrix &m);

/// Smith normal form with certificates: U * M * V == S.
struct SnfResult {
  IntMatrix S;
  IntMatrix U;
  IntMatrix V;
  std::size_t rank = 0;

  /// Diagonal entries s_1, ..., s_rank (all positive).
  IntVector elementary_divisors() const;
};

/// Column-style Hermite normal form with certificate: M * U == H.
///
/// H is lower echelon: column k has its pivot (first nonzero entry) in a
/// strictly lower row than column k-1, pivots are positive, zero columns
/// come last, and in each pivot row the entries of earlier columns lie in
/// [0, pivot).
struct HnfResult {
  IntMatrix H;
  IntMatrix U;
  std::size_t rank = 0;
};

SnfResult snf(const IntMatrix &m);
HnfResult hnf(const IntMatrix &m);

/// Integer x with M x == b, or nullopt when no integral solution exists.
std::optional<IntVector> solve_in_lattice(const IntMatrix &m,
                                          std::span<const Integer> b);

/// Z-basis (as columns) of the integer kernel {x in Z^cols : M x == 0}.
IntMatrix integer_kernel(const IntMatrix &m);

std::size_t rank(const IntMatrix &m);
std::size_t rank(const RatMatrix &m);

/// Determinant by fraction-free elimination.
Integer determinant(const IntMatrix &m);

/// Unique rational solution of A x == b for A of full column rank, or
/// nullopt when b is outside the column space.
std::optional<RatVector> solve_rational(const RatMatrix &a,
                                        std::span<const Rational> b);

/// Inverse of a square nonsingular rational matrix.
RatMatrix inverse(const RatMatrix &a);

} // namespace sphpi
