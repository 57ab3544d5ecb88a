#include "sphpi/root_data.hpp"

#include <cctype>
#include <string>

namespace sphpi {

std::string_view to_string(Isogeny iso) {
  return iso == Isogeny::SimplyConnected ? "simply-connected" : "adjoint";
}

std::optional<Isogeny> parse_isogeny(std::string_view s) {
  if (s == "simply-connected" || s == "sc")
    return Isogeny::SimplyConnected;
  if (s == "adjoint" || s == "ad")
    return Isogeny::Adjoint;
  return std::nullopt;
}

namespace {

std::string type_name(char series, std::size_t rank) {
  return std::string(1, series) + std::to_string(rank);
}

void valid_type_or_throw(char series, std::size_t n) {
  bool ok = false;
  switch (series) {
  case 'A': ok = n >= 1; break;
  case 'B': ok = n >= 2; break;
  case 'C': ok = n >= 3; break;
  case 'D': ok = n >= 4; break;
  case 'E': ok = n >= 6 && n <= 8; break;
  case 'F': ok = n == 4; break;
  case 'G': ok = n == 2; break;
  default: break;
  }
  if (!ok)
    throw InvalidRootDatumError("invalid Cartan type " + type_name(series, n));
}

void bond(IntMatrix &c, std::size_t i, std::size_t j) {
  c(i - 1, j - 1) = -1;
  c(j - 1, i - 1) = -1;
}

} // namespace

IntMatrix cartan_matrix(char series, std::size_t n) {
  series = static_cast<char>(std::toupper(static_cast<unsigned char>(series)));
  valid_type_or_throw(series, n);
  IntMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i)
    c(i, i) = 2;
  // 1-based node labels below follow Bourbaki's plates.
  switch (series) {
  case 'A':
    for (std::size_t i = 1; i < n; ++i)
      bond(c, i, i + 1);
    break;
  case 'B': // alpha_n short
    for (std::size_t i = 1; i + 1 < n; ++i)
      bond(c, i, i + 1);
    c(n - 2, n - 1) = -1;
    c(n - 1, n - 2) = -2;
    break;
  case 'C': // alpha_n long
    for (std::size_t i = 1; i + 1 < n; ++i)
      bond(c, i, i + 1);
    c(n - 2, n - 1) = -2;
    c(n - 1, n - 2) = -1;
    break;
  case 'D':
    for (std::size_t i = 1; i + 2 < n; ++i)
      bond(c, i, i + 1);
    bond(c, n - 2, n - 1);
    bond(c, n - 2, n);
    break;
  case 'E':
    bond(c, 1, 3);
    bond(c, 2, 4);
    for (std::size_t i = 3; i < n; ++i)
      bond(c, i, i + 1);
    break;
  case 'F': // alpha_1, alpha_2 long
    bond(c, 1, 2);
    c(1, 2) = -1;
    c(2, 1) = -2;
    bond(c, 3, 4);
    break;
  case 'G': // alpha_1 short
    c(0, 1) = -3;
    c(1, 0) = -1;
    break;
  }
  return c;
}

Integer fundamental_group_order(char series, std::size_t n) {
  valid_type_or_throw(series, n);
  switch (series) {
  case 'A': return Integer(static_cast<unsigned long>(n + 1));
  case 'B':
  case 'C': return 2;
  case 'D': return 4;
  case 'E': return n == 6 ? 3 : n == 7 ? 2 : 1;
  default: return 1;
  }
}

RootDatum::RootDatum(IntMatrix roots, IntMatrix coroots, std::string label)
    : roots_(std::move(roots)), coroots_(std::move(coroots)),
      label_(std::move(label)) {
  const std::size_t d = roots_.rows(), n = roots_.cols();
  if (coroots_.rows() != n || coroots_.cols() != d)
    throw InvalidRootDatumError(
        "root datum: " + std::to_string(n) + " roots in rank " +
        std::to_string(d) + " need an " + std::to_string(n) + "x" +
        std::to_string(d) + " coroot matrix, got " +
        std::to_string(coroots_.rows()) + "x" + std::to_string(coroots_.cols()));
  if (sphpi::rank(roots_) != n)
    throw InvalidRootDatumError("root datum: simple roots are linearly dependent");
  if (sphpi::rank(coroots_) != n)
    throw InvalidRootDatumError(
        "root datum: simple coroots are linearly dependent");
  const IntMatrix c = pairing_matrix();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j && c(i, j) != 2)
        throw InvalidRootDatumError("root datum: <coroot_" + std::to_string(i) +
                                    ", root_" + std::to_string(i) + "> != 2");
      if (i != j && (c(i, j) > 0 || (sgn(c(i, j)) == 0) != (sgn(c(j, i)) == 0)))
        throw InvalidRootDatumError(
            "root datum: pairing matrix is not a Cartan matrix at (" +
            std::to_string(i) + ", " + std::to_string(j) + ")");
    }
}

RootDatum build_standard(char series, std::size_t n, Isogeny isogeny,
                         std::size_t central_torus_rank) {
  series = static_cast<char>(std::toupper(static_cast<unsigned char>(series)));
  const IntMatrix c = cartan_matrix(series, n);
  const std::size_t d = n + central_torus_rank;
  IntMatrix roots(d, n), coroots(n, d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (isogeny == Isogeny::SimplyConnected) {
        // Fundamental weights as basis: alpha_j = sum_i C[i][j] omega_i.
        roots(i, j) = c(i, j);
        coroots(i, j) = i == j ? 1 : 0;
      } else {
        // Simple roots as basis: coroot_i = row i of C.
        roots(i, j) = i == j ? 1 : 0;
        coroots(i, j) = c(i, j);
      }
    }
  std::string label = type_name(series, n) + " " + std::string(to_string(isogeny));
  if (central_torus_rank)
    label += " x T" + std::to_string(central_torus_rank);
  RootDatum rd(std::move(roots), std::move(coroots), std::move(label));
  rd.spec_ = StandardSpec{series, n, isogeny, central_torus_rank};
  return rd;
}

RootDatum torus(std::size_t rank) {
  return RootDatum(IntMatrix(rank, 0), IntMatrix(0, rank),
                   "T" + std::to_string(rank));
}

RootDatum product(const RootDatum &a, const RootDatum &b) {
  const std::size_t da = a.rank(), db = b.rank();
  const std::size_t na = a.semisimple_rank(), nb = b.semisimple_rank();
  IntMatrix roots(da + db, na + nb), coroots(na + nb, da + db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < na; ++j)
      roots(i, j) = a.simple_roots()(i, j);
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      roots(da + i, na + j) = b.simple_roots()(i, j);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < da; ++j)
      coroots(i, j) = a.simple_coroots()(i, j);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < db; ++j)
      coroots(na + i, da + j) = b.simple_coroots()(i, j);
  return RootDatum(std::move(roots), std::move(coroots),
                   a.label() + " x " + b.label());
}

Saturation xi_circ_of_G(const RootDatum &rd) {
  return dual_saturation(rd.rank(), rd.simple_coroots());
}

IntMatrix restrict_coroots(const RootDatum &rd, const IntMatrix &embedding) {
  if (embedding.rows() != rd.rank())
    throw DimensionError("restrict_coroots: embedding has " +
                         std::to_string(embedding.rows()) +
                         " rows, root datum rank is " + std::to_string(rd.rank()));
  if (sphpi::rank(embedding) != embedding.cols())
    throw std::invalid_argument("restrict_coroots: embedding is rank deficient");
  return rd.simple_coroots() * embedding;
}

} // namespace sphpi
