#include "sphpi/lattices.hpp"
#include "sphpi/oracle.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace sphpi;
using sphpi::testing::random_matrix;

namespace {

FinGenAbQuotient fg(std::size_t divisible, std::vector<long> factors) {
  FinGenAbQuotient q{divisible, {}};
  for (long f : factors)
    q.invariant_factors.emplace_back(f);
  return q;
}

Lattice lat(std::initializer_list<std::initializer_list<long>> rows) {
  return Lattice(IntMatrix(rows));
}

} // namespace

TEST(DualSaturation, Examples) {
  EXPECT_EQ(dual_saturation(1, IntMatrix{{2}}).quotient, fg(0, {2}));
  EXPECT_EQ(dual_saturation(2, IntMatrix(0, 2)).quotient, fg(2, {}));
  EXPECT_EQ(dual_saturation(2, IntMatrix::identity(2)).quotient, fg(0, {}));
}

TEST(DualSaturation, HalfIntegersForColorValueTwo) {
  // {c : 2c in Z} = (1/2)Z; brute-force the 2-torsion independently.
  const Saturation s = dual_saturation(1, IntMatrix{{2}});
  EXPECT_TRUE(s.set.contains(RatVector{Rational(1, 2)}));
  EXPECT_FALSE(s.set.contains(RatVector{Rational(1, 3)}));
  const TorsionGroupSample t = enumerate_torsion_serial(IntMatrix{{2}}, 2);
  EXPECT_EQ(t.size(), 2u);
}

TEST(DualSaturation, Errors) {
  EXPECT_THROW(dual_saturation(3, IntMatrix{{1, 2}}), DimensionError);
  RatMatrix frac(1, 1);
  frac(0, 0) = Rational(1, 2);
  EXPECT_THROW(dual_saturation(1, frac), std::invalid_argument);
}

TEST(DualSaturation, SetInvariants) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 4, m = rng() % 5;
    const IntMatrix d = random_matrix(rng, m, r, -6, 6);
    const Saturation s = dual_saturation(r, d);
    const RatMatrix dq = to_rational(d);
    const RatMatrix on_finite = dq * s.set.finite_direction_basis;
    for (std::size_t i = 0; i < on_finite.rows(); ++i)
      for (std::size_t j = 0; j < on_finite.cols(); ++j)
        EXPECT_EQ(on_finite(i, j).get_den(), 1);
    const RatMatrix on_div = dq * s.set.divisible_subspace_basis;
    for (std::size_t i = 0; i < on_div.rows(); ++i)
      for (std::size_t j = 0; j < on_div.cols(); ++j)
        EXPECT_EQ(sgn(on_div(i, j)), 0);
    const RatMatrix joint =
        s.set.finite_direction_basis.concat(s.set.divisible_subspace_basis);
    EXPECT_EQ(joint.cols(), r);
    EXPECT_EQ(rank(joint), r);
    // Z^r sits inside the saturation.
    for (std::size_t j = 0; j < r; ++j) {
      RatVector e(r);
      e[j] = 1;
      EXPECT_TRUE(s.set.contains(e));
    }
  }
}

// Central property: the N-torsion found by enumeration agrees with the
// quotient predicted from the Smith form.
TEST(DualSaturation, OracleEquivalence) {
  std::mt19937_64 rng(2026);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = 1 + rng() % 4, m = rng() % 5;
    const IntMatrix d = random_matrix(rng, m, r, -6, 6);
    const FinGenAbQuotient q = dual_saturation(r, d).quotient;
    std::vector<std::int64_t> moduli{2, 3, 4, 6};
    if (!q.invariant_factors.empty() && q.invariant_factors.back().fits_slong_p())
      moduli.push_back(q.invariant_factors.back().get_si());
    for (std::int64_t n : moduli) {
      std::uint64_t size = 1;
      for (std::size_t i = 0; i < r; ++i)
        size *= static_cast<std::uint64_t>(n);
      if (size > 200'000)
        continue;
      const auto sample = enumerate_torsion_serial(d, n);
      const MatchResult res = structure_match(sample, q, n);
      EXPECT_TRUE(res.match) << d << " " << res.diagnostics;
      ++checked;
    }
  }
  EXPECT_GT(checked, 500);
}

// Replacing Z^r by an intermediate lattice between Z^r and the saturation,
// with the functionals re-expressed on it, reproduces the same set.
TEST(DualSaturation, IntermediateLatticeInvariance) {
  std::mt19937_64 rng(77);
  int nontrivial = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = 1 + rng() % 3, m = 1 + rng() % 3;
    const IntMatrix d = random_matrix(rng, m, r, -6, 6);
    const Saturation s = dual_saturation(r, d);

    RatMatrix gens = RatMatrix::identity(r);
    for (std::size_t j = 0; j < s.set.finite_direction_basis.cols(); ++j)
      if (rng() % 2)
        gens = gens.concat(s.set.finite_direction_basis.columns(j, 1));
    const Lattice gamma = Lattice::spanned_by(gens);
    ASSERT_EQ(gamma.rank(), r);
    if (!(gamma == Lattice::standard(r)))
      ++nontrivial;

    const RatMatrix d_on_gamma = to_rational(d) * gamma.basis();
    const Saturation again = dual_saturation(r, d_on_gamma);
    const SaturatedSet back{gamma.basis() * again.set.finite_direction_basis,
                            gamma.basis() * again.set.divisible_subspace_basis};
    EXPECT_EQ(back, s.set) << d;
    EXPECT_EQ(again.quotient.divisible_rank, s.quotient.divisible_rank);
  }
  EXPECT_GT(nontrivial, 20);
}

TEST(Intersect, Examples) {
  const Lattice a = lat({{1, 2}, {3, 4}});
  EXPECT_EQ(intersect(a, a), a);
  EXPECT_EQ(intersect(lat({{2}}), lat({{3}})), lat({{6}}));
  // alpha = 2 omega meets Z omega in Z alpha.
  EXPECT_EQ(intersect(lat({{2}}), Lattice::standard(1)), lat({{2}}));
}

TEST(Intersect, AmbientMismatch) {
  EXPECT_THROW(intersect(lat({{1}}), Lattice::standard(2)), DimensionError);
}

TEST(Intersect, MatchesPointwiseMembership) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix ma = random_matrix(rng, 2, 2, -4, 4);
    IntMatrix mb = random_matrix(rng, 2, 1 + rng() % 2, -4, 4);
    if (rank(ma) != ma.cols() || rank(mb) != mb.cols())
      continue;
    const Lattice a(ma), b(mb);
    const Lattice c = intersect(a, b);
    for (long x = -12; x <= 12; ++x)
      for (long y = -12; y <= 12; ++y) {
        const RatVector v{Rational(x), Rational(y)};
        EXPECT_EQ(c.contains(v), a.contains(v) && b.contains(v));
      }
  }
}

TEST(Quotient, Examples) {
  EXPECT_TRUE(quotient(Lattice::standard(2), Lattice::standard(2)).is_trivial());
  EXPECT_EQ(quotient(Lattice::standard(2), lat({{2, 0}, {0, 3}})), fg(0, {6}));
  EXPECT_EQ(quotient(lat({{2}}), lat({{4}})), fg(0, {2}));
}

TEST(Quotient, CosetsOfTwoByThreeAreCyclic) {
  // Z^2 / (2Z x 3Z): six cosets, and (1, 1) generates all of them.
  const Lattice small = lat({{2, 0}, {0, 3}});
  std::set<std::pair<long, long>> cosets;
  for (long k = 0; k < 6; ++k)
    cosets.insert({k % 2, k % 3});
  EXPECT_EQ(cosets.size(), 6u);
  EXPECT_FALSE(small.contains(RatVector{Rational(3), Rational(3)}));
  EXPECT_FALSE(small.contains(RatVector{Rational(2), Rational(2)}));
  EXPECT_TRUE(small.contains(RatVector{Rational(6), Rational(6)}));
  EXPECT_EQ(quotient(Lattice::standard(2), small).order(), 6);
}

TEST(Quotient, Errors) {
  EXPECT_THROW(quotient(lat({{2}}), lat({{3}})), NotASublatticeError);
  EXPECT_THROW(quotient(Lattice::standard(2), lat({{2}, {0}})),
               std::invalid_argument);
}

TEST(Quotient, OrderIsDeterminant) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix big = random_matrix(rng, 3, 3, -5, 5);
    const IntMatrix change = random_matrix(rng, 3, 3, -5, 5);
    if (sgn(determinant(big)) == 0 || sgn(determinant(change)) == 0)
      continue;
    const FinGenAbQuotient q = quotient(Lattice(big), Lattice(big * change));
    EXPECT_EQ(q.order(), abs(determinant(change)));
  }
}

TEST(PPrimePart, Examples) {
  EXPECT_EQ(p_prime_part(fg(0, {12}), 2), fg(0, {3}));
  EXPECT_EQ(p_prime_part(fg(0, {2}), 2), fg(0, {}));
  EXPECT_EQ(p_prime_part(fg(0, {6, 12}), 1), fg(0, {6, 12}));
  EXPECT_EQ(p_prime_part(fg(2, {4}), 2), fg(2, {}));
}

TEST(PPrimePart, RejectsNonPrime) {
  EXPECT_THROW(p_prime_part(fg(0, {2}), 4), std::invalid_argument);
  EXPECT_THROW(p_prime_part(fg(0, {2}), 0), std::invalid_argument);
}

TEST(PPrimePart, IdempotentAndMultiplicative) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    IntVector orders;
    for (int k = 0; k < 3; ++k)
      orders.emplace_back(static_cast<long>(1 + rng() % 60));
    const auto q = FinGenAbQuotient::from_cyclic_orders(0, orders);
    for (std::uint64_t p : {1, 2, 3, 5, 7}) {
      const auto pp = p_prime_part(q, p);
      EXPECT_EQ(p_prime_part(pp, p), pp);
      Integer ratio = q.order() / pp.order();
      EXPECT_EQ(q.order(), pp.order() * ratio);
      if (p > 1) {
        while (mpz_divisible_ui_p(ratio.get_mpz_t(), p))
          ratio /= p;
        EXPECT_EQ(ratio, 1);
        EXPECT_EQ(gcd(pp.order(), Integer(static_cast<unsigned long>(p))), 1);
      }
    }
  }
}

TEST(FinGenAbQuotient, Normalization) {
  EXPECT_EQ(FinGenAbQuotient::from_cyclic_orders(0, {2, 3}), fg(0, {6}));
  EXPECT_EQ(FinGenAbQuotient::from_cyclic_orders(1, {6, 4}), fg(1, {2, 12}));
  EXPECT_EQ(FinGenAbQuotient::from_cyclic_orders(0, {1, 1}), fg(0, {}));
}

TEST(FinGenAbQuotient, Embedding) {
  EXPECT_TRUE(embeds_in(fg(0, {2}), fg(0, {4})));
  EXPECT_FALSE(embeds_in(fg(0, {4}), fg(0, {2, 2})));
  EXPECT_TRUE(embeds_in(fg(0, {2, 2}), fg(0, {2, 6})));
  EXPECT_FALSE(embeds_in(fg(0, {2, 2}), fg(0, {12})));
  EXPECT_TRUE(embeds_in(fg(0, {3, 9}), fg(1, {3})));
  EXPECT_TRUE(embeds_in(fg(0, {7}), fg(1, {})));
  EXPECT_FALSE(embeds_in(fg(1, {}), fg(0, {1000})));
  EXPECT_TRUE(embeds_in(fg(0, {}), fg(0, {})));
}
