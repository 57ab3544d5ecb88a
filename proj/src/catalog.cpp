#include "sphpi/io.hpp"

namespace sphpi {

namespace {

const std::uint64_t kPrimes[] = {1, 2, 3, 5};

PiResult group(std::uint64_t p, std::size_t zhat, std::vector<long> factors) {
  PiResult r{zhat, {}, p};
  for (long f : factors)
    r.invariant_factors.emplace_back(f);
  return r;
}

// pi0 and pi1 both cyclic of order n away from the primes dividing n.
std::map<std::uint64_t, Expectation> cyclic_both(long n) {
  std::map<std::uint64_t, Expectation> e;
  for (std::uint64_t p : kPrimes) {
    const bool killed = n == 1 || (p > 1 && n % static_cast<long>(p) == 0);
    const std::vector<long> f = killed ? std::vector<long>{} : std::vector<long>{n};
    e[p] = {group(p, 0, f), group(p, 0, f)};
  }
  return e;
}

// Connected stabilizer: pi0 trivial, pi1 cyclic of order n away from p | n.
std::map<std::uint64_t, Expectation> cyclic_pi1(long n) {
  std::map<std::uint64_t, Expectation> e;
  for (std::uint64_t p : kPrimes) {
    const bool killed = n == 1 || (p > 1 && n % static_cast<long>(p) == 0);
    e[p] = {group(p, 0, {}),
            group(p, 0, killed ? std::vector<long>{} : std::vector<long>{n})};
  }
  return e;
}

std::map<std::uint64_t, Expectation> torus_expectation(std::size_t n) {
  std::map<std::uint64_t, Expectation> e;
  for (std::uint64_t p : kPrimes)
    e[p] = {group(p, 0, {}), group(p, n, {})};
  return e;
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> c;

  c.push_back({"sl2_mod_torus",
               "SL(2)/T: weights 2*omega = alpha, two colors each taking "
               "value 1 on alpha",
               "label: \"sl2_mod_torus\"\n"
               "p: 1\n"
               "root_datum:\n"
               "  standard:\n"
               "    type: A\n"
               "    rank: 1\n"
               "    isogeny: simply-connected\n"
               "    central_torus_rank: 0\n"
               "lattice: [[2]]\n"
               "colors: [[1], [1]]\n",
               cyclic_both(1)});

  c.push_back({"sl2_mod_normalizer",
               "SL(2)/N(T): weights Z*2alpha = Z*4omega, one color with value 2; "
               "[H:H0] = 2 in every characteristic",
               "label: \"sl2_mod_normalizer\"\n"
               "p: 1\n"
               "root_datum:\n"
               "  standard:\n"
               "    type: A\n"
               "    rank: 1\n"
               "    isogeny: simply-connected\n"
               "    central_torus_rank: 0\n"
               "lattice: [[4]]\n"
               "colors: [[2]]\n",
               cyclic_both(2)});

  c.push_back({"pgl2_mod_normalizer",
               "PGL(2)/N(T): weights Z*2alpha in root coordinates, one color "
               "with value 2",
               "label: \"pgl2_mod_normalizer\"\n"
               "p: 1\n"
               "root_datum:\n"
               "  standard:\n"
               "    type: A\n"
               "    rank: 1\n"
               "    isogeny: adjoint\n"
               "    central_torus_rank: 0\n"
               "lattice: [[2]]\n"
               "colors: [[2]]\n",
               cyclic_both(2)});

  c.push_back({"torus_rank_1", "the one-dimensional torus acting on itself",
               "label: \"torus_rank_1\"\n"
               "p: 1\n"
               "root_datum:\n"
               "  explicit:\n"
               "    rank: 1\n"
               "    simple_roots: []\n"
               "    simple_coroots: []\n"
               "lattice: [[1]]\n"
               "colors: []\n",
               torus_expectation(1)});

  c.push_back({"torus_rank_2", "a two-dimensional torus acting on itself",
               "label: \"torus_rank_2\"\n"
               "p: 1\n"
               "root_datum:\n"
               "  explicit:\n"
               "    rank: 2\n"
               "    simple_roots: []\n"
               "    simple_coroots: []\n"
               "lattice: [[1, 0], [0, 1]]\n"
               "colors: []\n",
               torus_expectation(2)});

  c.push_back({"group_case_A1_adjoint",
               "PGL(2) as a PGL(2) x PGL(2)-variety: antidiagonal root "
               "lattice, colors = restricted simple coroots",
               "label: \"group_case_A1_adjoint\"\n"
               "p: 1\n"
               "root_datum:\n"
               "  explicit:\n"
               "    rank: 2\n"
               "    simple_roots: [[1, 0], [0, 1]]\n"
               "    simple_coroots: [[2, 0], [0, 2]]\n"
               "lattice: [[1, -1]]\n"
               "colors: [[2]]\n",
               cyclic_pi1(2)});

  c.push_back({"group_case_A1_sc",
               "PGL(2) = (SL(2) x SL(2))/(Z x 1)diag: pi0(H) = Z(SL(2))",
               "label: \"group_case_A1_sc\"\n"
               "p: 1\n"
               "root_datum:\n"
               "  explicit:\n"
               "    rank: 2\n"
               "    simple_roots: [[2, 0], [0, 2]]\n"
               "    simple_coroots: [[1, 0], [0, 1]]\n"
               "lattice: [[2, -2]]\n"
               "colors: [[2]]\n",
               cyclic_both(2)});

  c.push_back({"group_case_A2_adjoint",
               "PGL(3) as a PGL(3) x PGL(3)-variety: antidiagonal root "
               "lattice, colors = rows of the A2 Cartan matrix",
               "label: \"group_case_A2_adjoint\"\n"
               "p: 1\n"
               "root_datum:\n"
               "  explicit:\n"
               "    rank: 4\n"
               "    simple_roots: [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], "
               "[0, 0, 0, 1]]\n"
               "    simple_coroots: [[2, -1, 0, 0], [-1, 2, 0, 0], "
               "[0, 0, 2, -1], [0, 0, -1, 2]]\n"
               "lattice: [[1, 0, -1, 0], [0, 1, 0, -1]]\n"
               "colors: [[2, -1], [-1, 2]]\n",
               cyclic_pi1(3)});

  c.push_back({"group_case_A2_sc",
               "PGL(3) = (SL(3) x SL(3))/(Z x 1)diag: pi0(H) = Z(SL(3))",
               "label: \"group_case_A2_sc\"\n"
               "p: 1\n"
               "root_datum:\n"
               "  explicit:\n"
               "    rank: 4\n"
               "    simple_roots: [[2, -1, 0, 0], [-1, 2, 0, 0], "
               "[0, 0, 2, -1], [0, 0, -1, 2]]\n"
               "    simple_coroots: [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], "
               "[0, 0, 0, 1]]\n"
               "lattice: [[2, -1, -2, 1], [-1, 2, 1, -2]]\n"
               "colors: [[2, -1], [-1, 2]]\n",
               cyclic_both(3)});

  c.push_back({"sl2_mod_mu3_unipotent",
               "SL(2)/(mu_3 U): weights Z*3omega, one color with value 3; "
               "pi0(E U) = E",
               "label: \"sl2_mod_mu3_unipotent\"\n"
               "p: 1\n"
               "root_datum:\n"
               "  standard:\n"
               "    type: A\n"
               "    rank: 1\n"
               "    isogeny: simply-connected\n"
               "    central_torus_rank: 0\n"
               "lattice: [[3]]\n"
               "colors: [[3]]\n",
               cyclic_both(3)});

  return c;
}

} // namespace

const std::vector<CatalogEntry> &catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry *find_catalog_entry(std::string_view name) {
  for (const CatalogEntry &e : catalog())
    if (e.name == name)
      return &e;
  return nullptr;
}

} // namespace sphpi
