#pragma once

#include "sphpi/exact_linalg.hpp"
#include "sphpi/lattices.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace sphpi {

enum class Isogeny { SimplyConnected, Adjoint };

std::string_view to_string(Isogeny iso);
/// Accepts "simply-connected" / "sc" and "adjoint" / "ad".
std::optional<Isogeny> parse_isogeny(std::string_view s);

/// Parameters of a standard build, kept so a datum can be written back in
/// the form it was entered.
struct StandardSpec {
  char series = 'A'; // A..G
  std::size_t rank = 1;
  Isogeny isogeny = Isogeny::SimplyConnected;
  std::size_t central_torus_rank = 0;

  friend bool operator==(const StandardSpec &, const StandardSpec &) = default;
};

struct InvalidRootDatumError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Cartan matrix C[i][j] = <coroot_i, root_j> in Bourbaki numbering.
/// Throws InvalidRootDatumError for an unknown series/rank combination.
IntMatrix cartan_matrix(char series, std::size_t rank);

/// Order of the fundamental group of the adjoint root system of the type
/// (index of the root lattice in the weight lattice).
Integer fundamental_group_order(char series, std::size_t rank);

class RootDatum {
public:
  /// `roots` is d x n (columns = simple roots as characters), `coroots`
  /// is n x d (rows = simple coroots as cocharacters).
  RootDatum(IntMatrix roots, IntMatrix coroots, std::string label = {});

  std::size_t rank() const { return roots_.rows(); }
  std::size_t semisimple_rank() const { return roots_.cols(); }
  const IntMatrix &simple_roots() const { return roots_; }
  const IntMatrix &simple_coroots() const { return coroots_; }
  const std::string &label() const { return label_; }
  const std::optional<StandardSpec> &standard_spec() const { return spec_; }

  /// <coroot_i, root_j>.
  IntMatrix pairing_matrix() const { return coroots_ * roots_; }

  friend bool operator==(const RootDatum &a, const RootDatum &b) {
    return a.roots_ == b.roots_ && a.coroots_ == b.coroots_ &&
           a.label_ == b.label_;
  }

private:
  friend RootDatum build_standard(char, std::size_t, Isogeny, std::size_t);

  IntMatrix roots_;
  IntMatrix coroots_;
  std::string label_;
  std::optional<StandardSpec> spec_;
};

RootDatum build_standard(char series, std::size_t rank, Isogeny isogeny,
                         std::size_t central_torus_rank = 0);
inline RootDatum build_standard(const StandardSpec &s) {
  return build_standard(s.series, s.rank, s.isogeny, s.central_torus_rank);
}
RootDatum torus(std::size_t rank);
RootDatum product(const RootDatum &a, const RootDatum &b);

/// Rational characters on which every simple coroot is integral.
Saturation xi_circ_of_G(const RootDatum &rd);

/// Coroots composed with the embedding of a sublattice (columns of
/// `embedding`, d x r, full column rank). Result is n x r.
IntMatrix restrict_coroots(const RootDatum &rd, const IntMatrix &embedding);

} // namespace sphpi
