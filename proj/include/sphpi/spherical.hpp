#pragma once

#include "sphpi/exact_linalg.hpp"
#include "sphpi/lattices.hpp"
#include "sphpi/root_data.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sphpi {

struct StructuralError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The data of a homogeneous spherical variety the two group computations
/// need: the root datum of G, the weight lattice embedded in the character
/// lattice of G, the values of the color valuations on the weight lattice,
/// and the characteristic exponent of the ground field.
struct SphericalDatum {
  RootDatum root_datum;
  IntMatrix lattice_embedding; // d x r, columns = generators of the weights
  IntMatrix colors;            // m x r, row D = <delta_D, generator_j>
  std::uint64_t char_exponent = 1;
  std::string label;

  std::size_t weight_rank() const { return lattice_embedding.cols(); }
  std::size_t color_count() const { return colors.rows(); }

  /// Throws StructuralError unless dimensions agree, the embedding has
  /// full column rank and p is 1 or prime.
  void check_structure() const;

  /// Copy with a different characteristic exponent.
  SphericalDatum with_char_exponent(std::uint64_t p) const;

  friend bool operator==(const SphericalDatum &a, const SphericalDatum &b) {
    return a.root_datum == b.root_datum &&
           a.lattice_embedding == b.lattice_embedding &&
           a.colors == b.colors && a.char_exponent == b.char_exponent &&
           a.label == b.label;
  }
};

enum class CheckStatus { Pass, Warn, Fail };
std::string_view to_string(CheckStatus s);

struct CheckOutcome {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string message;

  friend bool operator==(const CheckOutcome &, const CheckOutcome &) = default;
};

/// Prime-to-p part of a profinite abelian group: Zhat_{p'}^zhat_rank x
/// prod Z/d_i.
struct PiResult {
  std::size_t zhat_rank = 0;
  IntVector invariant_factors;
  std::uint64_t p = 1;

  bool is_trivial() const { return zhat_rank == 0 && invariant_factors.empty(); }
  friend bool operator==(const PiResult &, const PiResult &) = default;
};

struct Report {
  SphericalDatum input;
  FinGenAbQuotient xi_circ_quotient;   // saturation / weights
  FinGenAbQuotient xi_circ_G_quotient; // (saturation cap Xi(G)) / weights
  PiResult pi0;
  PiResult pi1;
  std::vector<CheckOutcome> validation;

  bool has_failure() const;
};

/// Structural checks plus the coroot-span condition: every simple coroot
/// restricted to the weight lattice must be an integer combination of the
/// color functionals. A violated span condition is a warning, or a failure
/// when `strict` is set.
std::vector<CheckOutcome> validate(const SphericalDatum &sd, bool strict = false);

/// Saturation of the weight lattice by the colors, in weight coordinates.
Saturation xi_circ(const SphericalDatum &sd);

/// The intersection of the saturation with the character lattice of G, in
/// weight coordinates (columns are a Z-basis).
Lattice xi_circ_G_lattice(const SphericalDatum &sd);
FinGenAbQuotient xi_circ_G(const SphericalDatum &sd);

PiResult pi0_p_prime(const SphericalDatum &sd);
PiResult pi1_p_prime(const SphericalDatum &sd);

Report full_report(const SphericalDatum &sd, bool strict = false);

} // namespace sphpi
