#include "sphpi/lattices.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace sphpi {

FinGenAbQuotient FinGenAbQuotient::from_cyclic_orders(std::size_t divisible_rank,
                                                      const IntVector &orders) {
  IntMatrix diag(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (sgn(orders[i]) <= 0)
      throw std::invalid_argument("cyclic orders must be positive");
    diag(i, i) = orders[i];
  }
  FinGenAbQuotient q{divisible_rank, {}};
  for (const Integer &d : snf(diag).elementary_divisors())
    if (d != 1)
      q.invariant_factors.push_back(d);
  return q;
}

Integer FinGenAbQuotient::order() const {
  if (divisible_rank != 0)
    throw std::domain_error("order of a group with divisible part");
  Integer n = 1;
  for (const Integer &d : invariant_factors)
    n *= d;
  return n;
}

std::ostream &operator<<(std::ostream &os, const FinGenAbQuotient &q) {
  if (q.is_trivial())
    return os << '0';
  bool first = true;
  if (q.divisible_rank) {
    os << "(Q/Z)";
    if (q.divisible_rank > 1)
      os << '^' << q.divisible_rank;
    first = false;
  }
  for (const Integer &d : q.invariant_factors) {
    os << (first ? "" : " + ") << "Z/" << d;
    first = false;
  }
  return os;
}

bool embeds_in(const FinGenAbQuotient &sub, const FinGenAbQuotient &super) {
  // Compare invariant factors from the top. Each divisible summand of
  // `super` absorbs one arbitrary factor of `sub`, and a divisible summand
  // of `sub` needs one of `super`.
  if (sub.divisible_rank > super.divisible_rank)
    return false;
  const std::size_t absorb = super.divisible_rank - sub.divisible_rank;
  const auto &a = sub.invariant_factors;
  const auto &b = super.invariant_factors;
  if (a.size() <= absorb)
    return true;
  const std::size_t remaining = a.size() - absorb;
  if (remaining > b.size())
    return false;
  for (std::size_t i = 0; i < remaining; ++i) {
    const Integer &ai = a[a.size() - 1 - absorb - i];
    const Integer &bi = b[b.size() - 1 - i];
    if (!mpz_divisible_p(bi.get_mpz_t(), ai.get_mpz_t()))
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

Lattice::Lattice(RatMatrix basis) : basis_(std::move(basis)) {
  if (sphpi::rank(basis_) != basis_.cols())
    throw std::invalid_argument("lattice basis columns are linearly dependent");
}

Lattice Lattice::standard(std::size_t d) {
  return Lattice(RatMatrix::identity(d));
}

Lattice Lattice::spanned_by(const RatMatrix &generators) {
  const Integer den = common_denominator(generators);
  IntMatrix scaled(generators.rows(), generators.cols());
  for (std::size_t i = 0; i < scaled.rows(); ++i)
    for (std::size_t j = 0; j < scaled.cols(); ++j)
      scaled(i, j) = Rational(generators(i, j) * den).get_num();
  const HnfResult h = hnf(scaled);
  RatMatrix basis(generators.rows(), h.rank);
  for (std::size_t i = 0; i < basis.rows(); ++i)
    for (std::size_t j = 0; j < basis.cols(); ++j) {
      basis(i, j) = Rational(h.H(i, j), den);
      basis(i, j).canonicalize();
    }
  return Lattice(std::move(basis));
}

std::optional<IntVector> Lattice::coordinates(std::span<const Rational> v) const {
  if (v.size() != ambient_rank())
    throw DimensionError("lattice membership: vector has length " +
                         std::to_string(v.size()) + ", ambient rank is " +
                         std::to_string(ambient_rank()));
  Integer den = common_denominator(basis_);
  for (const Rational &x : v)
    den = lcm(den, x.get_den());
  IntMatrix b(basis_.rows(), basis_.cols());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      b(i, j) = Rational(basis_(i, j) * den).get_num();
  IntVector rhs(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    rhs[i] = Rational(v[i] * den).get_num();
  return solve_in_lattice(b, rhs);
}

bool Lattice::contains(const Lattice &other) const {
  if (other.ambient_rank() != ambient_rank())
    return false;
  for (std::size_t j = 0; j < other.rank(); ++j) {
    RatVector c = other.basis_.column(j);
    if (!contains(c))
      return false;
  }
  return true;
}

RatMatrix Lattice::canonical_basis() const {
  return spanned_by(basis_).basis_;
}

// ---------------------------------------------------------------------------

bool SaturatedSet::contains(std::span<const Rational> x) const {
  if (x.size() != ambient_rank())
    throw DimensionError("saturated set membership: dimension mismatch");
  const RatMatrix joint = finite_direction_basis.concat(divisible_subspace_basis);
  const auto y = solve_rational(joint, x);
  if (!y)
    return false;
  for (std::size_t i = 0; i < finite_direction_basis.cols(); ++i)
    if ((*y)[i].get_den() != 1)
      return false;
  return true;
}

bool SaturatedSet::contains(const SaturatedSet &other) const {
  if (other.ambient_rank() != ambient_rank())
    return false;
  for (std::size_t j = 0; j < other.finite_direction_basis.cols(); ++j) {
    RatVector v = other.finite_direction_basis.column(j);
    if (!contains(v))
      return false;
  }
  // A rational line lies in the set iff it lies in the divisible subspace.
  for (std::size_t j = 0; j < other.divisible_subspace_basis.cols(); ++j) {
    RatVector v = other.divisible_subspace_basis.column(j);
    if (divisible_subspace_basis.cols() == 0)
      return false;
    if (!solve_rational(divisible_subspace_basis, v))
      return false;
  }
  return true;
}

Saturation dual_saturation(std::size_t r, const IntMatrix &functionals) {
  if (functionals.cols() != r)
    throw DimensionError("dual_saturation: functionals have " +
                         std::to_string(functionals.cols()) +
                         " columns, expected " + std::to_string(r));
  // U D V = S. With x = V y the constraint D x in Z^m reads S y in Z^m, so
  // y_i in (1/s_i) Z for i < rank and y_i free otherwise.
  const SnfResult f = snf(functionals);
  const RatMatrix V = to_rational(f.V);

  Saturation out;
  out.set.finite_direction_basis = RatMatrix(r, f.rank);
  out.set.divisible_subspace_basis = RatMatrix(r, r - f.rank);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < f.rank; ++j)
      out.set.finite_direction_basis(i, j) = V(i, j) / Rational(f.S(j, j));
    for (std::size_t j = f.rank; j < r; ++j)
      out.set.divisible_subspace_basis(i, j - f.rank) = V(i, j);
  }
  out.quotient.divisible_rank = r - f.rank;
  for (const Integer &s : f.elementary_divisors())
    if (s != 1)
      out.quotient.invariant_factors.push_back(s);
  return out;
}

Saturation dual_saturation(std::size_t r, const RatMatrix &functionals) {
  IntMatrix d;
  try {
    d = to_integer(functionals);
  } catch (const std::domain_error &) {
    throw std::invalid_argument(
        "dual_saturation: functionals must take integer values on Z^r");
  }
  return dual_saturation(r, d);
}

Lattice intersect(const Lattice &a, const Lattice &b) {
  if (a.ambient_rank() != b.ambient_rank())
    throw DimensionError("intersect: ambient ranks differ");
  const std::size_t d = a.ambient_rank();
  const Integer den =
      lcm(common_denominator(a.basis()), common_denominator(b.basis()));
  // Integer kernel of [A | -B]: pairs (x, y) with A x == B y.
  IntMatrix joint(d, a.rank() + b.rank());
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < a.rank(); ++j)
      joint(i, j) = Rational(a.basis()(i, j) * den).get_num();
    for (std::size_t j = 0; j < b.rank(); ++j)
      joint(i, a.rank() + j) = -Rational(b.basis()(i, j) * den).get_num();
  }
  const IntMatrix kernel = integer_kernel(joint);
  // x determines y (B has independent columns), so A * X is a basis.
  const RatMatrix x =
      to_rational(kernel).transpose().columns(0, a.rank()).transpose();
  return Lattice::spanned_by(a.basis() * x);
}

FinGenAbQuotient quotient(const Lattice &big, const Lattice &small) {
  if (big.ambient_rank() != small.ambient_rank())
    throw DimensionError("quotient: ambient ranks differ");
  if (big.rank() != small.rank())
    throw std::invalid_argument(
        "quotient: ranks differ (" + std::to_string(big.rank()) + " vs " +
        std::to_string(small.rank()) + "), quotient would be infinite");
  // Columns of `change` express small's basis on big's basis.
  IntMatrix change(big.rank(), small.rank());
  for (std::size_t j = 0; j < small.rank(); ++j) {
    const RatVector v = small.basis().column(j);
    const auto c = big.coordinates(v);
    if (!c)
      throw NotASublatticeError("quotient: basis vector " + std::to_string(j) +
                                " of the sublattice is not in the lattice");
    for (std::size_t i = 0; i < big.rank(); ++i)
      change(i, j) = (*c)[i];
  }
  FinGenAbQuotient q;
  for (const Integer &s : snf(change).elementary_divisors())
    if (s != 1)
      q.invariant_factors.push_back(s);
  return q;
}

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t f = 2; f * f <= n; ++f)
    if (n % f == 0)
      return false;
  return true;
}

bool is_char_exponent(std::uint64_t p) { return p == 1 || is_prime(p); }

FinGenAbQuotient p_prime_part(const FinGenAbQuotient &q, std::uint64_t p) {
  if (!is_char_exponent(p))
    throw std::invalid_argument("characteristic exponent must be 1 or a prime, got " +
                                std::to_string(p));
  IntVector stripped;
  stripped.reserve(q.invariant_factors.size());
  for (Integer d : q.invariant_factors) {
    if (p > 1)
      while (mpz_divisible_ui_p(d.get_mpz_t(), p))
        d /= p;
    stripped.push_back(d);
  }
  return FinGenAbQuotient::from_cyclic_orders(q.divisible_rank, stripped);
}

} // namespace sphpi
