#pragma once

#include "sphpi/exact_linalg.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>

namespace sphpi {

/// Finitely generated abelian group (Q/Z)^divisible_rank x prod Z/d_i with
/// d_1 | d_2 | ... | d_k and every d_i >= 2.
struct FinGenAbQuotient {
  std::size_t divisible_rank = 0;
  IntVector invariant_factors;

  /// Normalizes an arbitrary list of cyclic orders (>= 1) into an ascending
  /// invariant-factor chain.
  static FinGenAbQuotient from_cyclic_orders(std::size_t divisible_rank,
                                             const IntVector &orders);

  bool is_finite() const { return divisible_rank == 0; }
  bool is_trivial() const {
    return divisible_rank == 0 && invariant_factors.empty();
  }
  /// Order of the finite group; throws when divisible_rank > 0.
  Integer order() const;

  friend bool operator==(const FinGenAbQuotient &,
                         const FinGenAbQuotient &) = default;
};

std::ostream &operator<<(std::ostream &os, const FinGenAbQuotient &q);

/// True iff `sub` is isomorphic to a subgroup of `super`.
bool embeds_in(const FinGenAbQuotient &sub, const FinGenAbQuotient &super);

/// A free Z-module spanned by linearly independent columns in Q^d.
class Lattice {
public:
  explicit Lattice(RatMatrix basis);
  explicit Lattice(const IntMatrix &basis) : Lattice(to_rational(basis)) {}
  static Lattice standard(std::size_t d);
  /// Lattice generated by the columns of `generators` (any rank).
  static Lattice spanned_by(const RatMatrix &generators);

  std::size_t ambient_rank() const { return basis_.rows(); }
  std::size_t rank() const { return basis_.cols(); }
  const RatMatrix &basis() const { return basis_; }

  /// Integer coordinates of v on the basis, if v lies in the lattice.
  std::optional<IntVector> coordinates(std::span<const Rational> v) const;
  bool contains(std::span<const Rational> v) const {
    return coordinates(v).has_value();
  }
  bool contains(const Lattice &other) const;

  /// Basis in column Hermite normal form: identical for equal lattices.
  RatMatrix canonical_basis() const;

  friend bool operator==(const Lattice &a, const Lattice &b) {
    return a.ambient_rank() == b.ambient_rank() &&
           a.canonical_basis() == b.canonical_basis();
  }

private:
  RatMatrix basis_;
};

/// {x in Q^r : D x in Z^m}, described by a Z-basis of finite directions and
/// a Q-basis of the common kernel of the functionals.
struct SaturatedSet {
  RatMatrix finite_direction_basis;   // r x rank(D)
  RatMatrix divisible_subspace_basis; // r x (r - rank(D))

  std::size_t ambient_rank() const { return finite_direction_basis.rows(); }
  bool contains(std::span<const Rational> x) const;
  bool contains(const SaturatedSet &other) const;

  friend bool operator==(const SaturatedSet &a, const SaturatedSet &b) {
    return a.ambient_rank() == b.ambient_rank() && a.contains(b) &&
           b.contains(a);
  }
};

struct Saturation {
  SaturatedSet set;
  FinGenAbQuotient quotient; // saturation / Z^r
};

/// Saturation of Z^r with respect to the rows of `functionals` (m x r).
Saturation dual_saturation(std::size_t r, const IntMatrix &functionals);
/// Same, for functionals handed over as rationals; non-integral entries
/// are rejected.
Saturation dual_saturation(std::size_t r, const RatMatrix &functionals);

Lattice intersect(const Lattice &a, const Lattice &b);

struct NotASublatticeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// big / small for small a full-rank sublattice of big.
FinGenAbQuotient quotient(const Lattice &big, const Lattice &small);

bool is_prime(std::uint64_t n);
bool is_char_exponent(std::uint64_t p);

/// Largest quotient of order prime to p (p = 1 keeps everything).
FinGenAbQuotient p_prime_part(const FinGenAbQuotient &q, std::uint64_t p);

} // namespace sphpi
