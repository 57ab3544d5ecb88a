#pragma once

#include "sphpi/exact_linalg.hpp"
#include "sphpi/lattices.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace sphpi {

/// Largest N^r the enumerators accept.
inline constexpr std::uint64_t kEnumerationBudget = 10'000'000;

struct EnumerationBudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The N-torsion of {x in Q^r : D x in Z^m} / Z^r, listed explicitly.
/// Element i is numerators[i*r .. i*r + r) / modulus, each numerator in
/// [0, modulus), sorted lexicographically.
struct TorsionGroupSample {
  std::int64_t modulus = 1;
  std::size_t rank = 0;
  std::size_t element_count = 0;
  std::vector<std::int64_t> numerators;
  std::map<std::int64_t, std::int64_t> order_histogram;

  std::size_t size() const { return element_count; }
  std::span<const std::int64_t> element(std::size_t i) const {
    return {numerators.data() + i * rank, rank};
  }
};

/// OpenMP enumeration; output identical to the serial reference.
TorsionGroupSample enumerate_torsion(const IntMatrix &functionals,
                                     std::int64_t modulus);
/// Single-threaded reference enumeration.
TorsionGroupSample enumerate_torsion_serial(const IntMatrix &functionals,
                                            std::int64_t modulus);

/// Element-order histogram of the N-torsion of q, i.e. of
/// (Z/N)^divisible_rank x prod Z/gcd(d_i, N).
std::map<std::int64_t, Integer> predicted_histogram(const FinGenAbQuotient &q,
                                                    std::int64_t modulus);

struct MatchResult {
  bool match = false;
  std::string diagnostics;
  explicit operator bool() const { return match; }
};

MatchResult structure_match(const TorsionGroupSample &sample,
                            const FinGenAbQuotient &predicted,
                            std::int64_t modulus);

} // namespace sphpi
