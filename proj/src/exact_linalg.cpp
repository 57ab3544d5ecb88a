#include "sphpi/exact_linalg.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

namespace sphpi {

// ---------------------------------------------------------------------------
// Matrix plumbing

template <typename T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto &r : rows) {
    if (r.size() != cols_)
      throw DimensionError("ragged matrix literal");
    for (long v : r)
      data_.emplace_back(v);
  }
}

template <typename T> Matrix<T> Matrix<T>::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

template <typename T>
Matrix<T> Matrix<T>::from_columns(std::size_t rows,
                                  const std::vector<std::vector<T>> &cols) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows)
      throw DimensionError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i)
      m(i, j) = cols[j][i];
  }
  return m;
}

template <typename T>
Matrix<T> Matrix<T>::from_rows(std::size_t cols,
                               const std::vector<std::vector<T>> &rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw DimensionError("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = rows[i][j];
  }
  return m;
}

template <typename T>
std::vector<T> Matrix<T>::column(std::size_t j) const {
  std::vector<T> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    c[i] = (*this)(i, j);
  return c;
}

template <typename T> Matrix<T> Matrix<T>::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

template <typename T> Matrix<T> Matrix<T>::stack(const Matrix &below) const {
  if (cols_ != below.cols_)
    throw DimensionError("stack: column counts differ");
  Matrix s(rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), s.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(),
            s.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return s;
}

template <typename T> Matrix<T> Matrix<T>::concat(const Matrix &right) const {
  if (rows_ != right.rows_)
    throw DimensionError("concat: row counts differ");
  Matrix c(rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j)
      c(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j)
      c(i, cols_ + j) = right(i, j);
  }
  return c;
}

template <typename T>
Matrix<T> Matrix<T>::columns(std::size_t first, std::size_t count) const {
  if (first + count > cols_)
    throw DimensionError("column range out of bounds");
  Matrix c(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j)
      c(i, j) = (*this)(i, first + j);
  return c;
}

template <typename T> void Matrix<T>::swap_rows(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t j = 0; j < cols_; ++j)
    std::swap((*this)(a, j), (*this)(b, j));
}

template <typename T> void Matrix<T>::swap_cols(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t i = 0; i < rows_; ++i)
    std::swap((*this)(i, a), (*this)(i, b));
}

template class Matrix<Integer>;
template class Matrix<Rational>;

namespace {

template <typename T> Matrix<T> multiply(const Matrix<T> &a, const Matrix<T> &b) {
  if (a.cols() != b.rows())
    throw DimensionError("matrix product: inner dimensions differ");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0)
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

template <typename T>
std::vector<T> apply(const Matrix<T> &a, std::span<const T> x) {
  if (a.cols() != x.size())
    throw DimensionError("matrix-vector product: dimension mismatch");
  std::vector<T> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      y[i] += a(i, j) * x[j];
  return y;
}

template <typename T>
std::ostream &print(std::ostream &os, const Matrix<T> &m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i)
      os << ", ";
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j)
        os << ", ";
      os << m(i, j);
    }
    os << ']';
  }
  return os << ']';
}

} // namespace

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
  return multiply(a, b);
}
RatMatrix operator*(const RatMatrix &a, const RatMatrix &b) {
  return multiply(a, b);
}
IntVector operator*(const IntMatrix &a, std::span<const Integer> x) {
  return apply(a, x);
}
RatVector operator*(const RatMatrix &a, std::span<const Rational> x) {
  return apply(a, x);
}

std::ostream &operator<<(std::ostream &os, const IntMatrix &m) {
  return print(os, m);
}
std::ostream &operator<<(std::ostream &os, const RatMatrix &m) {
  return print(os, m);
}

RatMatrix to_rational(const IntMatrix &m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r(i, j) = Rational(m(i, j));
  return r;
}

IntMatrix to_integer(const RatMatrix &m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1)
        throw std::domain_error("to_integer: non-integral entry");
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

Integer common_denominator(const RatMatrix &m) {
  Integer l = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      l = lcm(l, m(i, j).get_den());
  return l;
}

// ---------------------------------------------------------------------------
// Smith normal form

IntVector SnfResult::elementary_divisors() const {
  IntVector d;
  d.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i)
    d.push_back(S(i, i));
  return d;
}

namespace {

// row_dst += factor * row_src, applied to both S and its left certificate.
void add_row(IntMatrix &m, std::size_t dst, std::size_t src,
             const Integer &factor) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    m(dst, j) += factor * m(src, j);
}

void add_col(IntMatrix &m, std::size_t dst, std::size_t src,
             const Integer &factor) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    m(i, dst) += factor * m(i, src);
}

void negate_row(IntMatrix &m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    m(i, j) = -m(i, j);
}

void negate_col(IntMatrix &m, std::size_t j) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    m(i, j) = -m(i, j);
}

int cmp_abs(const Integer &a, const Integer &b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

struct SnfState {
  IntMatrix S, U, V;

  void row_add(std::size_t dst, std::size_t src, const Integer &f) {
    add_row(S, dst, src, f);
    add_row(U, dst, src, f);
  }
  void col_add(std::size_t dst, std::size_t src, const Integer &f) {
    add_col(S, dst, src, f);
    add_col(V, dst, src, f);
  }
  void row_swap(std::size_t a, std::size_t b) {
    S.swap_rows(a, b);
    U.swap_rows(a, b);
  }
  void col_swap(std::size_t a, std::size_t b) {
    S.swap_cols(a, b);
    V.swap_cols(a, b);
  }
};

} // namespace

SnfResult snf(const IntMatrix &m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SnfState st{m, IntMatrix::identity(rows), IntMatrix::identity(cols)};
  IntMatrix &S = st.S;

  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (sgn(S(i, j)) != 0 &&
            (!best || cmp_abs(S(i, j), S(best->first, best->second)) < 0))
          best = {i, j};
    if (!best)
      break;
    st.row_swap(t, best->first);
    st.col_swap(t, best->second);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(S(i, t)) == 0)
          continue;
        Integer q = S(i, t) / S(t, t);
        if (sgn(q) != 0)
          st.row_add(i, t, -q);
        if (sgn(S(i, t)) != 0)
          clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(S(t, j)) == 0)
          continue;
        Integer q = S(t, j) / S(t, t);
        if (sgn(q) != 0)
          st.col_add(j, t, -q);
        if (sgn(S(t, j)) != 0)
          clean = false;
      }

      if (!clean) {
        // A remainder is strictly smaller than the pivot; promote the
        // smallest one and repeat.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (sgn(S(i, t)) != 0 && cmp_abs(S(i, t), S(bi, bj)) < 0)
            bi = i, bj = t;
        for (std::size_t j = t + 1; j < cols; ++j)
          if (sgn(S(t, j)) != 0 && cmp_abs(S(t, j), S(bi, bj)) < 0)
            bi = t, bj = j;
        st.row_swap(t, bi);
        st.col_swap(t, bj);
        continue;
      }

      // Row and column are clear; enforce that the pivot divides the rest.
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < rows && !bad_row; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(S(i, j).get_mpz_t(), S(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
      if (!bad_row)
        break;
      st.row_add(t, *bad_row, Integer(1));
    }

    if (sgn(S(t, t)) < 0) {
      negate_row(S, t);
      negate_row(st.U, t);
    }
  }

  return SnfResult{std::move(st.S), std::move(st.U), std::move(st.V), t};
}

// ---------------------------------------------------------------------------
// Hermite normal form (column operations, lower echelon)

HnfResult hnf(const IntMatrix &m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix H = m;
  IntMatrix U = IntMatrix::identity(cols);

  auto col_combine = [&](std::size_t k, std::size_t j, const Integer &s,
                         const Integer &t, const Integer &u,
                         const Integer &v) {
    // (col_k, col_j) <- (s col_k + t col_j, u col_k + v col_j)
    for (IntMatrix *mat : {&H, &U})
      for (std::size_t i = 0; i < mat->rows(); ++i) {
        Integer a = (*mat)(i, k), b = (*mat)(i, j);
        (*mat)(i, k) = s * a + t * b;
        (*mat)(i, j) = u * a + v * b;
      }
  };

  std::size_t k = 0;
  for (std::size_t i = 0; i < rows && k < cols; ++i) {
    for (std::size_t j = k + 1; j < cols; ++j) {
      if (sgn(H(i, j)) == 0)
        continue;
      if (sgn(H(i, k)) == 0) {
        H.swap_cols(k, j);
        U.swap_cols(k, j);
        continue;
      }
      Integer a = H(i, k), b = H(i, j);
      if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
        Integer q = b / a;
        add_col(H, j, k, -q);
        add_col(U, j, k, -q);
        continue;
      }
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
                 b.get_mpz_t());
      col_combine(k, j, s, t, Integer(-b / g), Integer(a / g));
    }
    if (sgn(H(i, k)) == 0)
      continue;
    if (sgn(H(i, k)) < 0) {
      negate_col(H, k);
      negate_col(U, k);
    }
    for (std::size_t j = 0; j < k; ++j) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), H(i, j).get_mpz_t(), H(i, k).get_mpz_t());
      if (sgn(q) != 0) {
        add_col(H, j, k, -q);
        add_col(U, j, k, -q);
      }
    }
    ++k;
  }
  return HnfResult{std::move(H), std::move(U), k};
}

// ---------------------------------------------------------------------------
// Derived operations

std::optional<IntVector> solve_in_lattice(const IntMatrix &m,
                                          std::span<const Integer> b) {
  if (b.size() != m.rows())
    throw DimensionError("solve_in_lattice: right-hand side has length " +
                         std::to_string(b.size()) + ", expected " +
                         std::to_string(m.rows()));
  // M x = b  <=>  S y = U b  with  x = V y.
  const SnfResult r = snf(m);
  const IntVector c = r.U * b;
  IntVector y(m.cols());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < r.rank) {
      if (!mpz_divisible_p(c[i].get_mpz_t(), r.S(i, i).get_mpz_t()))
        return std::nullopt;
      y[i] = c[i] / r.S(i, i);
    } else if (sgn(c[i]) != 0) {
      return std::nullopt;
    }
  }
  return r.V * std::span<const Integer>(y);
}

IntMatrix integer_kernel(const IntMatrix &m) {
  const HnfResult h = hnf(m);
  return h.U.columns(h.rank, m.cols() - h.rank);
}

std::size_t rank(const RatMatrix &m) {
  RatMatrix a = m;
  std::size_t r = 0;
  for (std::size_t j = 0; j < a.cols() && r < a.rows(); ++j) {
    std::size_t p = r;
    while (p < a.rows() && sgn(a(p, j)) == 0)
      ++p;
    if (p == a.rows())
      continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (sgn(a(i, j)) == 0)
        continue;
      Rational f = a(i, j) / a(r, j);
      for (std::size_t c = j; c < a.cols(); ++c)
        a(i, c) -= f * a(r, c);
    }
    ++r;
  }
  return r;
}

std::size_t rank(const IntMatrix &m) { return rank(to_rational(m)); }

Integer determinant(const IntMatrix &m) {
  if (m.rows() != m.cols())
    throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0)
    return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0)
        ++p;
      if (p == n)
        return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::optional<RatVector> solve_rational(const RatMatrix &a,
                                        std::span<const Rational> b) {
  if (b.size() != a.rows())
    throw DimensionError("solve_rational: dimension mismatch");
  const std::size_t rows = a.rows(), cols = a.cols();
  RatMatrix aug = a.concat(RatMatrix::from_columns(
      rows, {RatVector(b.begin(), b.end())}));
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols && r < rows; ++j) {
    std::size_t p = r;
    while (p < rows && sgn(aug(p, j)) == 0)
      ++p;
    if (p == rows)
      continue;
    aug.swap_rows(r, p);
    const Rational piv = aug(r, j);
    for (std::size_t c = j; c <= cols; ++c)
      aug(r, c) /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(aug(i, j)) == 0)
        continue;
      Rational f = aug(i, j);
      for (std::size_t c = j; c <= cols; ++c)
        aug(i, c) -= f * aug(r, c);
    }
    pivot_cols.push_back(j);
    ++r;
  }
  if (r != cols)
    throw DimensionError("solve_rational: matrix is not of full column rank");
  for (std::size_t i = r; i < rows; ++i)
    if (sgn(aug(i, cols)) != 0)
      return std::nullopt;
  RatVector x(cols);
  for (std::size_t i = 0; i < r; ++i)
    x[pivot_cols[i]] = aug(i, cols);
  return x;
}

RatMatrix inverse(const RatMatrix &a) {
  if (a.rows() != a.cols())
    throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  RatMatrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    RatVector e(n);
    e[j] = 1;
    auto x = solve_rational(a, e);
    for (std::size_t i = 0; i < n; ++i)
      inv(i, j) = (*x)[i];
  }
  return inv;
}

} // namespace sphpi
