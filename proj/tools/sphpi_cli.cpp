// sphpi: component group and fundamental group of spherical homogeneous
// varieties from spherical data.
//
// Exit codes: 0 success, 1 validation failure (strict) or expectation
// mismatch, 2 parse or structural error.

#include "sphpi/io.hpp"
#include "sphpi/oracle.hpp"
#include "sphpi/spherical.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <omp.h>
#include <sstream>

namespace {

using namespace sphpi;

constexpr int kOk = 0;
constexpr int kValidationError = 1;
constexpr int kInputError = 2;

ReportFormat format_from(const std::string &s) {
  return s == "structured" ? ReportFormat::Structured : ReportFormat::Text;
}

int run_compute(const std::string &file, std::optional<std::uint64_t> p,
                bool strict, const std::string &format) {
  SphericalDatum sd = parse_file(file);
  if (p) {
    if (!is_char_exponent(*p)) {
      std::cerr << "error: --p must be 1 or a prime, got " << *p << '\n';
      return kInputError;
    }
    sd.char_exponent = *p;
  }
  const Report rep = full_report(sd, strict);
  std::cout << serialize_report(rep, format_from(format));
  return rep.has_failure() ? kValidationError : kOk;
}

int run_validate(const std::string &file, bool strict) {
  const SphericalDatum sd = parse_file(file);
  const auto checks = validate(sd, strict);
  bool failed = false;
  for (const CheckOutcome &c : checks) {
    std::cout << '[' << to_string(c.status) << "] " << c.name << ": "
              << c.message << '\n';
    failed = failed || c.status == CheckStatus::Fail;
  }
  return failed ? kValidationError : kOk;
}

// Report for every characteristic of the entry, compared with the stored
// expectation. Output goes to `out` so run-all can buffer per entry.
bool run_entry(const CatalogEntry &e, std::optional<std::uint64_t> only_p,
               ReportFormat format, std::ostream &out) {
  bool ok = true;
  const SphericalDatum base = e.datum();
  for (const auto &[p, expected] : e.expected) {
    if (only_p && *only_p != p)
      continue;
    const Report rep = full_report(base.with_char_exponent(p));
    out << serialize_report(rep, format);
    const auto diffs = compare(rep, expected);
    if (format == ReportFormat::Text) {
      out << "  expectation: " << (diffs.empty() ? "ok" : "MISMATCH") << '\n';
      for (const auto &d : diffs)
        out << "    " << d << '\n';
    }
    for (const auto &d : diffs)
      std::cerr << e.name << " p=" << p << ": " << d << '\n';
    ok = ok && diffs.empty();
  }
  return ok;
}

int run_catalog(const std::string &action, const std::string &name,
                std::optional<std::uint64_t> p, const std::string &format) {
  if (action == "list") {
    for (const CatalogEntry &e : catalog())
      std::cout << e.name << "  " << e.description << '\n';
    return kOk;
  }
  if (action == "show" || action == "run") {
    const CatalogEntry *e = find_catalog_entry(name);
    if (!e) {
      std::cerr << "error: no catalog entry named '" << name << "'\n";
      return kInputError;
    }
    if (action == "show") {
      std::cout << e->document;
      return kOk;
    }
    return run_entry(*e, p, format_from(format), std::cout) ? kOk
                                                           : kValidationError;
  }
  if (action == "run-all") {
    const auto &entries = catalog();
    std::vector<std::string> outputs(entries.size());
    std::vector<char> ok(entries.size(), 0);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < entries.size(); ++i) {
      std::ostringstream os;
      ok[i] = run_entry(entries[i], p, format_from(format), os);
      outputs[i] = os.str();
    }
    bool all = true;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      std::cout << outputs[i];
      all = all && ok[i];
    }
    return all ? kOk : kValidationError;
  }
  std::cerr << "error: unknown catalog action '" << action
            << "' (expected list, show, run or run-all)\n";
  return kInputError;
}

int run_oracle(const std::string &file, std::int64_t modulus) {
  const SphericalDatum sd = parse_file(file);
  omp_set_num_threads(1); // one thread per invocation
  const TorsionGroupSample s = enumerate_torsion(sd.colors, modulus);
  const Saturation sat = xi_circ(sd);
  std::cout << sd.label << ": " << s.size() << " elements of order dividing "
            << modulus << " in the saturation quotient\n";
  std::cout << "  order histogram:";
  for (const auto &[order, count] : s.order_histogram)
    std::cout << ' ' << order << ':' << count;
  std::cout << "\n  predicted quotient: " << render(sat.quotient) << '\n';
  const MatchResult m = structure_match(s, sat.quotient, modulus);
  std::cout << "  " << (m ? "match" : "MISMATCH") << ": " << m.diagnostics
            << '\n';
  return m ? kOk : kValidationError;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Prime-to-p component group and etale fundamental group of "
               "spherical homogeneous varieties"};
  app.require_subcommand(1);

  std::string file, format = "text", action = "list", name;
  std::optional<std::uint64_t> p;
  bool strict = false;
  std::int64_t torsion = 0;

  auto *compute = app.add_subcommand("compute", "compute pi0 and pi1 for a datum");
  compute->add_option("file", file, "input document")->required();
  compute->add_option("--p", p, "characteristic exponent (overrides the document)");
  compute->add_flag("--strict", strict, "treat a failed coroot-span check as an error");
  compute->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "structured"}));

  auto *validate_cmd = app.add_subcommand("validate", "check a datum");
  validate_cmd->add_option("file", file, "input document")->required();
  validate_cmd->add_flag("--strict", strict,
                         "treat a failed coroot-span check as an error");

  auto *catalog_cmd = app.add_subcommand("catalog", "built-in worked examples");
  catalog_cmd->add_option("action", action, "list | show <name> | run <name> | run-all");
  catalog_cmd->add_option("name", name, "catalog entry");
  catalog_cmd->add_option("--p", p, "restrict to one characteristic exponent");
  catalog_cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "structured"}));

  auto *oracle_cmd =
      app.add_subcommand("oracle", "brute-force check of the saturation quotient");
  oracle_cmd->add_option("file", file, "input document")->required();
  oracle_cmd->add_option("--torsion", torsion, "enumerate the N-torsion")
      ->required()
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    if (*compute)
      return run_compute(file, p, strict, format);
    if (*validate_cmd)
      return run_validate(file, strict);
    if (*catalog_cmd)
      return run_catalog(action, name, p, format);
    if (*oracle_cmd)
      return run_oracle(file, torsion);
  } catch (const ParseError &e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const StructuralError &e) {
    std::cerr << "structural error: " << e.what() << '\n';
    return kInputError;
  } catch (const EnumerationBudgetError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}
