#pragma once

#include "sphpi/spherical.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sphpi {

/// Malformed input document. `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string key, int line, const std::string &message);
  const std::string &key() const { return key_; }
  int line() const { return line_; }

private:
  std::string key_;
  int line_;
};

/// Parses an input document (YAML subset, see README). Structural problems
/// of the resulting datum are reported as ParseError as well.
SphericalDatum parse(std::string_view text);
SphericalDatum parse_file(const std::string &path);

/// Canonical document text; parse(serialize_datum(sd)) == sd.
std::string serialize_datum(const SphericalDatum &sd);

enum class ReportFormat { Text, Structured };

std::string render(const FinGenAbQuotient &q);
std::string render(const PiResult &r);
std::string serialize_report(const Report &r, ReportFormat format);

/// Expected answers for one characteristic exponent.
struct Expectation {
  PiResult pi0;
  PiResult pi1;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  std::string document;
  std::map<std::uint64_t, Expectation> expected; // keyed by p

  SphericalDatum datum() const { return parse(document); }
};

/// Built-in worked examples with their expected groups for p = 1, 2, 3, 5.
const std::vector<CatalogEntry> &catalog();
const CatalogEntry *find_catalog_entry(std::string_view name);

/// Mismatches between a computed report and an expectation (empty = ok).
std::vector<std::string> compare(const Report &r, const Expectation &e);

} // namespace sphpi
