#include "sphpi/io.hpp"

#include <json.hpp>
#include <yaml-cpp/yaml.h>

#include <fstream>
#include <regex>
#include <sstream>

namespace sphpi {

ParseError::ParseError(std::string key, int line, const std::string &message)
    : std::runtime_error((line > 0 ? "line " + std::to_string(line) + ": " : "") +
                         (key.empty() ? "" : "key '" + key + "': ") + message),
      key_(std::move(key)), line_(line) {}

namespace {

int line_of(const YAML::Node &n) {
  const YAML::Mark m = n.Mark();
  return m.is_null() ? 0 : m.line + 1;
}

Integer parse_integer(const YAML::Node &n, const std::string &key) {
  static const std::regex integer_re("[+-]?[0-9]+");
  if (!n.IsScalar())
    throw ParseError(key, line_of(n), "expected an integer");
  std::string s = n.Scalar();
  if (!std::regex_match(s, integer_re))
    throw ParseError(key, line_of(n), "'" + s + "' is not an integer");
  if (s[0] == '+')
    s.erase(0, 1);
  return Integer(s, 10);
}

std::uint64_t parse_count(const YAML::Node &n, const std::string &key) {
  const Integer v = parse_integer(n, key);
  if (sgn(v) < 0 || !v.fits_ulong_p())
    throw ParseError(key, line_of(n), "expected a non-negative count");
  return v.get_ui();
}

// Sequence of integer vectors, each of length `width` when width is set.
std::vector<IntVector> parse_vectors(const YAML::Node &n, const std::string &key,
                                     std::optional<std::size_t> width) {
  if (!n.IsSequence())
    throw ParseError(key, line_of(n), "expected a list of integer vectors");
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const YAML::Node v = n[i];
    const std::string where = key + "[" + std::to_string(i) + "]";
    if (!v.IsSequence())
      throw ParseError(where, line_of(v), "expected an integer vector");
    if (width && v.size() != *width)
      throw ParseError(where, line_of(v),
                       "vector " + std::to_string(i) + " has length " +
                           std::to_string(v.size()) + ", expected " +
                           std::to_string(*width));
    IntVector row;
    for (std::size_t j = 0; j < v.size(); ++j)
      row.push_back(parse_integer(v[j], where + "[" + std::to_string(j) + "]"));
    out.push_back(std::move(row));
  }
  return out;
}

void reject_unknown_keys(const YAML::Node &map, const std::string &context,
                         std::initializer_list<const char *> allowed) {
  for (auto it = map.begin(); it != map.end(); ++it) {
    const std::string k = it->first.Scalar();
    bool ok = false;
    for (const char *a : allowed)
      ok = ok || k == a;
    if (!ok)
      throw ParseError(context.empty() ? k : context + "." + k,
                       line_of(it->first), "unknown key");
  }
}

YAML::Node require(const YAML::Node &map, const char *key,
                   const std::string &context) {
  const YAML::Node n = map[key];
  const std::string full = context.empty() ? key : context + "." + key;
  if (!n)
    throw ParseError(full, line_of(map), "missing required key");
  return n;
}

RootDatum parse_root_datum(const YAML::Node &n) {
  if (!n.IsMap())
    throw ParseError("root_datum", line_of(n), "expected a mapping");
  reject_unknown_keys(n, "root_datum", {"standard", "explicit"});
  if (n.size() != 1)
    throw ParseError("root_datum", line_of(n),
                     "expected exactly one of 'standard' or 'explicit'");

  if (const YAML::Node s = n["standard"]) {
    const std::string ctx = "root_datum.standard";
    if (!s.IsMap())
      throw ParseError(ctx, line_of(s), "expected a mapping");
    reject_unknown_keys(s, ctx, {"type", "rank", "isogeny", "central_torus_rank"});
    const YAML::Node type = require(s, "type", ctx);
    const std::string t = type.IsScalar() ? type.Scalar() : "";
    if (t.size() != 1)
      throw ParseError(ctx + ".type", line_of(type),
                       "expected a series letter A-G, got '" + t + "'");
    const std::uint64_t rank = parse_count(require(s, "rank", ctx), ctx + ".rank");
    const YAML::Node iso = require(s, "isogeny", ctx);
    const auto isogeny = parse_isogeny(iso.IsScalar() ? iso.Scalar() : "");
    if (!isogeny)
      throw ParseError(ctx + ".isogeny", line_of(iso),
                       "expected 'simply-connected' or 'adjoint'");
    std::uint64_t torus = 0;
    if (const YAML::Node c = s["central_torus_rank"])
      torus = parse_count(c, ctx + ".central_torus_rank");
    try {
      return build_standard(t[0], rank, *isogeny, torus);
    } catch (const InvalidRootDatumError &e) {
      throw ParseError(ctx + ".type", line_of(type), e.what());
    }
  }

  const YAML::Node e = n["explicit"];
  const std::string ctx = "root_datum.explicit";
  if (!e.IsMap())
    throw ParseError(ctx, line_of(e), "expected a mapping");
  reject_unknown_keys(e, ctx, {"rank", "simple_roots", "simple_coroots"});
  const std::size_t d = parse_count(require(e, "rank", ctx), ctx + ".rank");
  const auto roots =
      parse_vectors(require(e, "simple_roots", ctx), ctx + ".simple_roots", d);
  const auto coroots =
      parse_vectors(require(e, "simple_coroots", ctx), ctx + ".simple_coroots", d);
  if (roots.size() != coroots.size())
    throw ParseError(ctx + ".simple_coroots", line_of(e["simple_coroots"]),
                     std::to_string(roots.size()) + " roots but " +
                         std::to_string(coroots.size()) + " coroots");
  try {
    return RootDatum(IntMatrix::from_columns(d, roots),
                     IntMatrix::from_rows(d, coroots), "explicit");
  } catch (const InvalidRootDatumError &err) {
    throw ParseError(ctx, line_of(e), err.what());
  }
}

} // namespace

SphericalDatum parse(std::string_view text) {
  YAML::Node doc;
  try {
    doc = YAML::Load(std::string(text));
  } catch (const YAML::ParserException &e) {
    throw ParseError("", e.mark.line + 1, "syntax error: " + e.msg);
  }
  if (!doc.IsMap())
    throw ParseError("", line_of(doc), "document must be a mapping");
  reject_unknown_keys(doc, "", {"label", "p", "root_datum", "lattice", "colors"});

  const YAML::Node label = require(doc, "label", "");
  if (!label.IsScalar())
    throw ParseError("label", line_of(label), "expected a string");
  const YAML::Node pnode = require(doc, "p", "");
  const std::uint64_t p = parse_count(pnode, "p");
  if (!is_char_exponent(p))
    throw ParseError("p", line_of(pnode),
                     "characteristic exponent must be 1 or a prime, got " +
                         std::to_string(p));

  RootDatum rd = parse_root_datum(require(doc, "root_datum", ""));
  const std::size_t d = rd.rank();

  const YAML::Node lat = require(doc, "lattice", "");
  const auto gens = parse_vectors(lat, "lattice", d);
  const std::size_t r = gens.size();
  const auto colors = parse_vectors(require(doc, "colors", ""), "colors", r);

  SphericalDatum sd{std::move(rd), IntMatrix::from_columns(d, gens),
                    IntMatrix::from_rows(r, colors), p, label.Scalar()};
  try {
    sd.check_structure();
  } catch (const StructuralError &e) {
    throw ParseError("lattice", line_of(lat), e.what());
  }
  return sd;
}

SphericalDatum parse_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("", 0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

// ---------------------------------------------------------------------------

namespace {

std::string quoted(const std::string &s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out + '"';
}

std::string flow(const std::vector<IntVector> &vs) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < vs.size(); ++i) {
    os << (i ? ", " : "") << '[';
    for (std::size_t j = 0; j < vs[i].size(); ++j)
      os << (j ? ", " : "") << vs[i][j];
    os << ']';
  }
  os << ']';
  return os.str();
}

std::vector<IntVector> rows_of(const IntMatrix &m) {
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    out.emplace_back(m.row(i).begin(), m.row(i).end());
  return out;
}

std::vector<IntVector> cols_of(const IntMatrix &m) {
  return rows_of(m.transpose());
}

} // namespace

std::string serialize_datum(const SphericalDatum &sd) {
  std::ostringstream os;
  os << "label: " << quoted(sd.label) << '\n';
  os << "p: " << sd.char_exponent << '\n';
  os << "root_datum:\n";
  const RootDatum &rd = sd.root_datum;
  if (const auto &s = rd.standard_spec()) {
    os << "  standard:\n"
       << "    type: " << s->series << '\n'
       << "    rank: " << s->rank << '\n'
       << "    isogeny: " << to_string(s->isogeny) << '\n'
       << "    central_torus_rank: " << s->central_torus_rank << '\n';
  } else {
    os << "  explicit:\n"
       << "    rank: " << rd.rank() << '\n'
       << "    simple_roots: " << flow(cols_of(rd.simple_roots())) << '\n'
       << "    simple_coroots: " << flow(rows_of(rd.simple_coroots())) << '\n';
  }
  os << "lattice: " << flow(cols_of(sd.lattice_embedding)) << '\n';
  os << "colors: " << flow(rows_of(sd.colors)) << '\n';
  return os.str();
}

std::string render(const FinGenAbQuotient &q) {
  if (q.is_trivial())
    return "1";
  std::ostringstream os;
  const char *sep = "";
  if (q.divisible_rank) {
    os << "(Q/Z)";
    if (q.divisible_rank > 1)
      os << '^' << q.divisible_rank;
    sep = " x ";
  }
  for (const Integer &d : q.invariant_factors) {
    os << sep << "Z/" << d;
    sep = " x ";
  }
  return os.str();
}

std::string render(const PiResult &r) {
  if (r.is_trivial())
    return "1";
  std::ostringstream os;
  const char *sep = "";
  if (r.zhat_rank) {
    os << "Zhat_{p'}";
    if (r.zhat_rank > 1)
      os << '^' << r.zhat_rank;
    sep = " x ";
  }
  for (const Integer &d : r.invariant_factors) {
    os << sep << "Z/" << d;
    sep = " x ";
  }
  return os.str();
}

namespace {

nlohmann::json integer_json(const Integer &v) {
  if (v.fits_slong_p())
    return v.get_si();
  return v.get_str();
}

nlohmann::json integers_json(const IntVector &v) {
  nlohmann::json a = nlohmann::json::array();
  for (const Integer &x : v)
    a.push_back(integer_json(x));
  return a;
}

nlohmann::json vectors_json(const std::vector<IntVector> &vs) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto &v : vs)
    a.push_back(integers_json(v));
  return a;
}

nlohmann::json quotient_json(const FinGenAbQuotient &q) {
  return {{"divisible_rank", q.divisible_rank},
          {"invariant_factors", integers_json(q.invariant_factors)}};
}

nlohmann::json pi_json(const PiResult &r) {
  return {{"zhat_rank", r.zhat_rank},
          {"invariant_factors", integers_json(r.invariant_factors)},
          {"p", r.p}};
}

std::string structured(const Report &r) {
  const SphericalDatum &sd = r.input;
  nlohmann::json rd;
  if (const auto &s = sd.root_datum.standard_spec())
    rd["standard"] = {{"type", std::string(1, s->series)},
                      {"rank", s->rank},
                      {"isogeny", std::string(to_string(s->isogeny))},
                      {"central_torus_rank", s->central_torus_rank}};
  else
    rd["explicit"] = {{"rank", sd.root_datum.rank()},
                      {"simple_roots", vectors_json(cols_of(sd.root_datum.simple_roots()))},
                      {"simple_coroots",
                       vectors_json(rows_of(sd.root_datum.simple_coroots()))}};
  nlohmann::json j;
  j["input"] = {{"label", sd.label},
                {"p", sd.char_exponent},
                {"root_datum", rd},
                {"lattice", vectors_json(cols_of(sd.lattice_embedding))},
                {"colors", vectors_json(rows_of(sd.colors))}};
  j["saturation_quotient"] = quotient_json(r.xi_circ_quotient);
  j["component_quotient"] = quotient_json(r.xi_circ_G_quotient);
  j["pi0"] = pi_json(r.pi0);
  j["pi1"] = pi_json(r.pi1);
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckOutcome &c : r.validation)
    checks.push_back({{"name", c.name},
                      {"status", std::string(to_string(c.status))},
                      {"message", c.message}});
  j["validation"] = checks;
  return j.dump(2) + "\n";
}

} // namespace

std::string serialize_report(const Report &r, ReportFormat format) {
  if (format == ReportFormat::Structured)
    return structured(r);
  const SphericalDatum &sd = r.input;
  std::ostringstream os;
  os << sd.label << " (p = " << sd.char_exponent << ")\n";
  os << "  root datum:          " << sd.root_datum.label() << ", rank "
     << sd.root_datum.rank() << '\n';
  os << "  weights:             rank " << sd.weight_rank() << ", "
     << sd.color_count() << (sd.color_count() == 1 ? " color" : " colors") << '\n';
  os << "  saturation quotient: " << render(r.xi_circ_quotient) << '\n';
  os << "  component quotient:  " << render(r.xi_circ_G_quotient) << '\n';
  os << "  pi0(H)_{p'}:         " << render(r.pi0);
  if (r.pi0.p > 1)
    os << "   (kernel of pi0(H) -> pi0(H)_{p'}: unknown p-part)";
  os << '\n';
  os << "  pi1(X)_{p'}:         " << render(r.pi1) << '\n';
  for (const CheckOutcome &c : r.validation)
    os << "  [" << to_string(c.status) << "] " << c.name << ": " << c.message
       << '\n';
  return os.str();
}

std::vector<std::string> compare(const Report &r, const Expectation &e) {
  std::vector<std::string> diffs;
  auto check = [&](const char *what, const PiResult &got, const PiResult &want) {
    if (got.zhat_rank != want.zhat_rank ||
        got.invariant_factors != want.invariant_factors)
      diffs.push_back(std::string(what) + ": got " + render(got) + ", expected " +
                      render(want));
  };
  check("pi0", r.pi0, e.pi0);
  check("pi1", r.pi1, e.pi1);
  return diffs;
}

} // namespace sphpi
