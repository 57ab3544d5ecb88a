#include "sphpi/spherical.hpp"

#include <algorithm>
#include <sstream>

namespace sphpi {

void SphericalDatum::check_structure() const {
  const std::size_t d = root_datum.rank();
  if (lattice_embedding.rows() != d)
    throw StructuralError("lattice generators have length " +
                          std::to_string(lattice_embedding.rows()) +
                          ", root datum rank is " + std::to_string(d));
  if (colors.cols() != weight_rank())
    throw StructuralError("color rows have length " +
                          std::to_string(colors.cols()) + ", weight lattice rank is " +
                          std::to_string(weight_rank()));
  if (sphpi::rank(lattice_embedding) != weight_rank())
    throw StructuralError("lattice generators are linearly dependent");
  if (!is_char_exponent(char_exponent))
    throw StructuralError("characteristic exponent must be 1 or a prime, got " +
                          std::to_string(char_exponent));
}

SphericalDatum SphericalDatum::with_char_exponent(std::uint64_t p) const {
  SphericalDatum copy = *this;
  copy.char_exponent = p;
  return copy;
}

std::string_view to_string(CheckStatus s) {
  switch (s) {
  case CheckStatus::Pass: return "pass";
  case CheckStatus::Warn: return "warn";
  case CheckStatus::Fail: return "fail";
  }
  return "?";
}

bool Report::has_failure() const {
  return std::any_of(validation.begin(), validation.end(),
                     [](const CheckOutcome &c) { return c.status == CheckStatus::Fail; });
}

namespace {

std::string row_string(const IntMatrix &m, std::size_t i) {
  std::ostringstream os;
  os << '[';
  for (std::size_t j = 0; j < m.cols(); ++j)
    os << (j ? ", " : "") << m(i, j);
  os << ']';
  return os.str();
}

PiResult to_pi(const FinGenAbQuotient &q, std::uint64_t p) {
  const FinGenAbQuotient pp = p_prime_part(q, p);
  return PiResult{pp.divisible_rank, pp.invariant_factors, p};
}

// Saturated weights pushed into X(G)-coordinates must pair integrally with
// every simple coroot, and the divisible directions must be killed.
CheckOutcome containment_check(const SphericalDatum &sd, const Saturation &sat) {
  const RatMatrix pushed_finite =
      to_rational(sd.lattice_embedding) * sat.set.finite_direction_basis;
  const RatMatrix pushed_div =
      to_rational(sd.lattice_embedding) * sat.set.divisible_subspace_basis;
  const RatMatrix coroots = to_rational(sd.root_datum.simple_coroots());
  const RatMatrix on_finite = coroots * pushed_finite;
  const RatMatrix on_div = coroots * pushed_div;
  for (std::size_t i = 0; i < on_finite.rows(); ++i)
    for (std::size_t j = 0; j < on_finite.cols(); ++j)
      if (on_finite(i, j).get_den() != 1)
        return {"containment", CheckStatus::Warn,
                "coroot " + std::to_string(i) +
                    " is not integral on saturated weight " + std::to_string(j)};
  for (std::size_t i = 0; i < on_div.rows(); ++i)
    for (std::size_t j = 0; j < on_div.cols(); ++j)
      if (sgn(on_div(i, j)) != 0)
        return {"containment", CheckStatus::Warn,
                "coroot " + std::to_string(i) +
                    " does not vanish on divisible direction " + std::to_string(j)};
  return {"containment", CheckStatus::Pass,
          "saturated weights are integral against all simple coroots"};
}

} // namespace

std::vector<CheckOutcome> validate(const SphericalDatum &sd, bool strict) {
  sd.check_structure();
  std::vector<CheckOutcome> out;
  out.push_back({"embedding_rank", CheckStatus::Pass,
                 "weight lattice has rank " + std::to_string(sd.weight_rank()) +
                     " in a character lattice of rank " +
                     std::to_string(sd.root_datum.rank())});

  const IntMatrix restricted = restrict_coroots(sd.root_datum, sd.lattice_embedding);
  const IntMatrix colors_t = sd.colors.transpose();
  std::vector<std::size_t> outside;
  for (std::size_t i = 0; i < restricted.rows(); ++i) {
    IntVector target(restricted.row(i).begin(), restricted.row(i).end());
    if (!solve_in_lattice(colors_t, target))
      outside.push_back(i);
  }
  if (outside.empty()) {
    out.push_back({"coroot_span", CheckStatus::Pass,
                   "all " + std::to_string(restricted.rows()) +
                       " restricted simple coroots are integer combinations of "
                       "the colors"});
  } else {
    std::ostringstream msg;
    msg << "restricted coroot";
    for (std::size_t i : outside)
      msg << ' ' << i << ' ' << row_string(restricted, i);
    msg << " not in the integer span of the colors";
    out.push_back({"coroot_span", strict ? CheckStatus::Fail : CheckStatus::Warn,
                   msg.str()});
  }

  out.push_back({"char_exponent", CheckStatus::Pass,
                 "p = " + std::to_string(sd.char_exponent)});
  return out;
}

Saturation xi_circ(const SphericalDatum &sd) {
  sd.check_structure();
  return dual_saturation(sd.weight_rank(), sd.colors);
}

namespace {

// Imposing D x in Z^m and E x in Z^d at once cuts the saturation down to
// the characters of G; E has full column rank so the result is a lattice.
Saturation stacked_saturation(const SphericalDatum &sd) {
  sd.check_structure();
  const Saturation s =
      dual_saturation(sd.weight_rank(), sd.colors.stack(sd.lattice_embedding));
  if (!s.quotient.is_finite())
    throw std::logic_error("xi_circ_G: stacked functionals are rank deficient");
  return s;
}

} // namespace

Lattice xi_circ_G_lattice(const SphericalDatum &sd) {
  return Lattice(stacked_saturation(sd).set.finite_direction_basis);
}

FinGenAbQuotient xi_circ_G(const SphericalDatum &sd) {
  return stacked_saturation(sd).quotient;
}

PiResult pi0_p_prime(const SphericalDatum &sd) {
  return to_pi(xi_circ_G(sd), sd.char_exponent);
}

PiResult pi1_p_prime(const SphericalDatum &sd) {
  return to_pi(xi_circ(sd).quotient, sd.char_exponent);
}

Report full_report(const SphericalDatum &sd, bool strict) {
  Report rep{sd, {}, {}, {}, {}, {}};
  rep.validation = validate(sd, strict);
  rep.pi0.p = rep.pi1.p = sd.char_exponent;
  try {
    const Saturation sat = xi_circ(sd);
    rep.xi_circ_quotient = sat.quotient;
    rep.xi_circ_G_quotient = xi_circ_G(sd);
    rep.pi0 = to_pi(rep.xi_circ_G_quotient, sd.char_exponent);
    rep.pi1 = to_pi(rep.xi_circ_quotient, sd.char_exponent);
    rep.validation.push_back(containment_check(sd, sat));
    if (!embeds_in(rep.xi_circ_G_quotient, rep.xi_circ_quotient))
      rep.validation.push_back({"sandwich", CheckStatus::Fail,
                                "component-group quotient does not embed in "
                                "the saturation quotient"});
  } catch (const StructuralError &) {
    throw;
  } catch (const std::exception &e) {
    rep.validation.push_back({"computation", CheckStatus::Fail, e.what()});
  }
  return rep;
}

} // namespace sphpi
