#include "sphpi/oracle.hpp"

#include <numeric>
#include <omp.h>
#include <sstream>

namespace sphpi {

namespace {

struct Problem {
  std::int64_t modulus;
  std::size_t rank;
  std::size_t rows;
  std::vector<std::int64_t> reduced; // functionals mod N, row-major
  std::uint64_t total;               // N^r
};

Problem prepare(const IntMatrix &functionals, std::int64_t modulus) {
  if (modulus < 1)
    throw std::invalid_argument("torsion modulus must be positive");
  Problem p{modulus, functionals.cols(), functionals.rows(), {}, 1};
  for (std::size_t i = 0; i < p.rank; ++i) {
    if (p.total > kEnumerationBudget / static_cast<std::uint64_t>(modulus))
      throw EnumerationBudgetError(
          "enumeration budget exceeded: " + std::to_string(modulus) + "^" +
          std::to_string(p.rank) + " > " + std::to_string(kEnumerationBudget));
    p.total *= static_cast<std::uint64_t>(modulus);
  }
  p.reduced.reserve(p.rows * p.rank);
  const Integer n(static_cast<long>(modulus));
  for (std::size_t i = 0; i < p.rows; ++i)
    for (std::size_t j = 0; j < p.rank; ++j) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), functionals(i, j).get_mpz_t(), n.get_mpz_t());
      p.reduced.push_back(r.get_si());
    }
  return p;
}

// Digits of `index` in base N, most significant first, so increasing
// indices enumerate lexicographically.
void decode(const Problem &p, std::uint64_t index, std::int64_t *digits) {
  for (std::size_t j = p.rank; j-- > 0;) {
    digits[j] = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(p.modulus));
    index /= static_cast<std::uint64_t>(p.modulus);
  }
}

bool satisfies(const Problem &p, const std::int64_t *k) {
  for (std::size_t i = 0; i < p.rows; ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < p.rank; ++j)
      acc = (acc + p.reduced[i * p.rank + j] * k[j]) % p.modulus;
    if (acc != 0)
      return false;
  }
  return true;
}

void finish(const Problem &p, TorsionGroupSample &s) {
  s.modulus = p.modulus;
  s.rank = p.rank;
  for (std::size_t e = 0; e < s.element_count; ++e) {
    std::int64_t g = p.modulus;
    for (std::size_t j = 0; j < p.rank; ++j)
      g = std::gcd(g, s.numerators[e * p.rank + j]);
    ++s.order_histogram[p.modulus / g];
  }
}

} // namespace

TorsionGroupSample enumerate_torsion_serial(const IntMatrix &functionals,
                                            std::int64_t modulus) {
  const Problem p = prepare(functionals, modulus);
  TorsionGroupSample s;
  std::vector<std::int64_t> k(p.rank);
  for (std::uint64_t idx = 0; idx < p.total; ++idx) {
    decode(p, idx, k.data());
    if (satisfies(p, k.data())) {
      s.numerators.insert(s.numerators.end(), k.begin(), k.end());
      ++s.element_count;
    }
  }
  finish(p, s);
  return s;
}

namespace {

// Walks indices [begin, end) as an odometer, keeping D k mod N per row.
// Every digit that changes on a step (the incremented one and each wrap
// from N-1 to 0) adds its column to the accumulators mod N.
void scan_block(const Problem &p, std::uint64_t begin, std::uint64_t end,
                std::vector<std::int64_t> &out, std::size_t &count) {
  if (begin >= end)
    return;
  std::vector<std::int64_t> k(p.rank), acc(p.rows, 0);
  decode(p, begin, k.data());
  for (std::size_t i = 0; i < p.rows; ++i)
    for (std::size_t j = 0; j < p.rank; ++j)
      acc[i] = (acc[i] + p.reduced[i * p.rank + j] * k[j]) % p.modulus;
  for (std::uint64_t idx = begin;;) {
    bool zero = true;
    for (std::size_t i = 0; i < p.rows && zero; ++i)
      zero = acc[i] == 0;
    if (zero) {
      out.insert(out.end(), k.begin(), k.end());
      ++count;
    }
    if (++idx == end)
      return;
    for (std::size_t j = p.rank; j-- > 0;) {
      for (std::size_t i = 0; i < p.rows; ++i) {
        acc[i] += p.reduced[i * p.rank + j];
        if (acc[i] >= p.modulus)
          acc[i] -= p.modulus;
      }
      if (++k[j] < p.modulus)
        break;
      k[j] = 0;
    }
  }
}

} // namespace

TorsionGroupSample enumerate_torsion(const IntMatrix &functionals,
                                     std::int64_t modulus) {
  const Problem p = prepare(functionals, modulus);
  const int threads = omp_get_max_threads();
  std::vector<std::vector<std::int64_t>> found(static_cast<std::size_t>(threads));
  std::vector<std::size_t> counts(static_cast<std::size_t>(threads), 0);

  // Contiguous index blocks per thread, merged in block order.
#pragma omp parallel num_threads(threads)
  {
    const auto t = static_cast<std::uint64_t>(omp_get_thread_num());
    const auto nt = static_cast<std::uint64_t>(omp_get_num_threads());
    scan_block(p, p.total * t / nt, p.total * (t + 1) / nt, found[t], counts[t]);
  }

  TorsionGroupSample s;
  for (std::size_t t = 0; t < found.size(); ++t) {
    s.numerators.insert(s.numerators.end(), found[t].begin(), found[t].end());
    s.element_count += counts[t];
  }
  finish(p, s);
  return s;
}

namespace {

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> small, large;
  for (std::int64_t f = 1; f * f <= n; ++f)
    if (n % f == 0) {
      small.push_back(f);
      if (f != n / f)
        large.push_back(n / f);
    }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

int moebius(std::int64_t n) {
  int mu = 1;
  for (std::int64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) {
      n /= f;
      if (n % f == 0)
        return 0;
      mu = -mu;
    }
  if (n > 1)
    mu = -mu;
  return mu;
}

} // namespace

std::map<std::int64_t, Integer> predicted_histogram(const FinGenAbQuotient &q,
                                                    std::int64_t modulus) {
  if (modulus < 1)
    throw std::invalid_argument("torsion modulus must be positive");
  const Integer n(static_cast<long>(modulus));
  std::vector<std::int64_t> cyclic(q.divisible_rank, modulus);
  for (const Integer &d : q.invariant_factors)
    cyclic.push_back(Integer(gcd(d, n)).get_si());

  // #{x : e x = 0} = prod gcd(e, n_j); exact orders by Moebius inversion.
  const auto divs = divisors(modulus);
  std::map<std::int64_t, Integer> killed_by;
  for (std::int64_t e : divs) {
    Integer c = 1;
    for (std::int64_t nj : cyclic)
      c *= static_cast<long>(std::gcd(e, nj));
    killed_by[e] = c;
  }
  std::map<std::int64_t, Integer> hist;
  for (std::int64_t e : divs) {
    Integer c = 0;
    for (std::int64_t f : divisors(e))
      c += moebius(e / f) * killed_by[f];
    if (sgn(c) != 0)
      hist[e] = c;
  }
  return hist;
}

MatchResult structure_match(const TorsionGroupSample &sample,
                            const FinGenAbQuotient &predicted,
                            std::int64_t modulus) {
  const auto expected = predicted_histogram(predicted, modulus);
  std::map<std::int64_t, Integer> observed;
  for (const auto &[order, count] : sample.order_histogram)
    observed[order] = Integer(static_cast<long>(count));

  MatchResult r;
  r.match = sample.modulus == modulus && observed == expected;
  if (!r.match) {
    std::ostringstream os;
    os << "N=" << modulus << " predicted " << predicted << ";";
    if (sample.modulus != modulus)
      os << " sample was enumerated with N=" << sample.modulus << ";";
    os << " order histograms (order: observed/expected):";
    std::map<std::int64_t, bool> orders;
    for (const auto &kv : observed)
      orders[kv.first] = true;
    for (const auto &kv : expected)
      orders[kv.first] = true;
    for (const auto &[order, unused] : orders) {
      (void)unused;
      const auto o = observed.find(order);
      const auto e = expected.find(order);
      os << ' ' << order << ": " << (o == observed.end() ? Integer(0) : o->second)
         << '/' << (e == expected.end() ? Integer(0) : e->second);
    }
    r.diagnostics = os.str();
  } else {
    r.diagnostics = std::to_string(sample.size()) + " elements agree with the prediction";
  }
  return r;
}

} // namespace sphpi
