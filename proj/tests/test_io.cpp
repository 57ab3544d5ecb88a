#include "sphpi/io.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <random>

using namespace sphpi;

namespace {

const char *kSl2Normalizer = R"(label: "sl2 normalizer"
p: 3
root_datum:
  standard:
    type: A
    rank: 1
    isogeny: simply-connected
lattice: [[4]]
colors: [[2]]
)";

ParseError parse_error(const std::string &text) {
  try {
    parse(text);
  } catch (const ParseError &e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError for:\n" << text;
  return ParseError("", 0, "none");
}

std::string replace(std::string s, const std::string &from, const std::string &to) {
  const auto pos = s.find(from);
  EXPECT_NE(pos, std::string::npos) << from;
  return s.replace(pos, from.size(), to);
}

} // namespace

TEST(Parse, StandardForm) {
  const SphericalDatum sd = parse(kSl2Normalizer);
  EXPECT_EQ(sd.label, "sl2 normalizer");
  EXPECT_EQ(sd.char_exponent, 3u);
  EXPECT_EQ(sd.root_datum, build_standard('A', 1, Isogeny::SimplyConnected));
  EXPECT_EQ(sd.lattice_embedding, (IntMatrix{{4}}));
  EXPECT_EQ(sd.colors, (IntMatrix{{2}}));
}

TEST(Parse, ExplicitFormAndBlockLists) {
  const SphericalDatum sd = parse(R"(label: x
p: 1
root_datum:
  explicit:
    rank: 2
    simple_roots:
      - [2, 0]
    simple_coroots:
      - [1, 0]
lattice:
  - [2, 0]
  - [0, -1]
colors:
  - [1, 0]
  - [1, +0]
)");
  EXPECT_EQ(sd.root_datum.rank(), 2u);
  EXPECT_EQ(sd.lattice_embedding, (IntMatrix{{2, 0}, {0, -1}}));
  EXPECT_EQ(sd.colors, (IntMatrix{{1, 0}, {1, 0}}));
}

TEST(Parse, BigIntegers) {
  const SphericalDatum sd = parse(replace(kSl2Normalizer, "colors: [[2]]",
                                          "colors: [[123456789012345678901234567890]]"));
  EXPECT_EQ(sd.colors(0, 0), Integer("123456789012345678901234567890", 10));
}

TEST(ParseErrors, MissingColors) {
  const ParseError e = parse_error(replace(kSl2Normalizer, "colors: [[2]]\n", ""));
  EXPECT_EQ(e.key(), "colors");
  EXPECT_NE(std::string(e.what()).find("missing"), std::string::npos);
}

TEST(ParseErrors, LatticeVectorLength) {
  const ParseError e =
      parse_error(replace(kSl2Normalizer, "lattice: [[4]]", "lattice: [[4], [1, 2]]"));
  EXPECT_EQ(e.key(), "lattice[1]");
  EXPECT_EQ(e.line(), 8);
  EXPECT_NE(std::string(e.what()).find("vector 1 has length 2, expected 1"),
            std::string::npos);
}

TEST(ParseErrors, ColorVectorLength) {
  const ParseError e =
      parse_error(replace(kSl2Normalizer, "colors: [[2]]", "colors: [[2, 1]]"));
  EXPECT_EQ(e.key(), "colors[0]");
}

TEST(ParseErrors, UnknownKeys) {
  EXPECT_EQ(parse_error(std::string(kSl2Normalizer) + "spare: 1\n").key(), "spare");
  EXPECT_EQ(parse_error(replace(kSl2Normalizer, "    rank: 1\n",
                                "    rank: 1\n    flavour: x\n"))
                .key(),
            "root_datum.standard.flavour");
}

TEST(ParseErrors, InvalidType) {
  EXPECT_EQ(parse_error(replace(kSl2Normalizer, "type: A", "type: H")).key(),
            "root_datum.standard.type");
  EXPECT_EQ(parse_error(replace(kSl2Normalizer, "rank: 1", "rank: 0")).key(),
            "root_datum.standard.type");
  EXPECT_EQ(parse_error(replace(kSl2Normalizer, "simply-connected", "spin")).key(),
            "root_datum.standard.isogeny");
}

TEST(ParseErrors, InvalidCharExponent) {
  for (const char *bad : {"p: 4", "p: 0", "p: -2", "p: two"})
    EXPECT_EQ(parse_error(replace(kSl2Normalizer, "p: 3", bad)).key(), "p") << bad;
}

TEST(ParseErrors, NonIntegerEntry) {
  const ParseError e =
      parse_error(replace(kSl2Normalizer, "colors: [[2]]", "colors: [[2.5]]"));
  EXPECT_EQ(e.key(), "colors[0][0]");
}

TEST(ParseErrors, SyntaxErrorHasLine) {
  const ParseError e =
      parse_error(replace(kSl2Normalizer, "lattice: [[4]]", "lattice: [[4]"));
  EXPECT_GT(e.line(), 0);
  EXPECT_NE(std::string(e.what()).find("syntax"), std::string::npos);
}

TEST(ParseErrors, DependentLattice) {
  const ParseError e = parse_error(
      replace(replace(kSl2Normalizer, "lattice: [[4]]", "lattice: [[4], [2]]"),
              "colors: [[2]]", "colors: [[2, 1]]"));
  EXPECT_EQ(e.key(), "lattice");
}

TEST(ParseErrors, ExplicitRootDatumRejected) {
  const ParseError e = parse_error(R"(label: x
p: 1
root_datum:
  explicit:
    rank: 1
    simple_roots: [[1]]
    simple_coroots: [[1]]
lattice: [[1]]
colors: [[1]]
)");
  EXPECT_EQ(e.key(), "root_datum.explicit");
}

TEST(RoundTrip, CatalogDocumentsAreCanonical) {
  for (const CatalogEntry &entry : catalog()) {
    const SphericalDatum sd = parse(entry.document);
    EXPECT_EQ(serialize_datum(sd), entry.document) << entry.name;
    for (std::uint64_t p : {2, 3, 5}) {
      const SphericalDatum q = sd.with_char_exponent(p);
      EXPECT_EQ(parse(serialize_datum(q)), q) << entry.name;
    }
  }
}

TEST(RoundTrip, RandomExplicitData) {
  std::mt19937_64 rng(64);
  std::uniform_int_distribution<long> entry(-1000, 1000);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t d = 1 + rng() % 4, r = 1 + rng() % d, m = rng() % 4;
    IntMatrix e(d, r), colors(m, r);
    for (std::size_t i = 0; i < r; ++i)
      e(i, i) = entry(rng) | 1;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < r; ++j)
        colors(i, j) = entry(rng);
    SphericalDatum sd{torus(d), e, colors, 1, "random \"quoted\" label"};
    const std::string text = serialize_datum(sd);
    EXPECT_EQ(serialize_datum(parse(text)), text);
    const SphericalDatum back = parse(text);
    EXPECT_EQ(back.lattice_embedding, sd.lattice_embedding);
    EXPECT_EQ(back.colors, sd.colors);
    EXPECT_EQ(back.label, sd.label);
  }
}

TEST(Render, Groups) {
  EXPECT_EQ(render(PiResult{1, {}, 1}), "Zhat_{p'}");
  EXPECT_EQ(render(PiResult{0, {}, 2}), "1");
  EXPECT_EQ(render(PiResult{0, {Integer(2), Integer(6)}, 1}), "Z/2 x Z/6");
  EXPECT_EQ(render(PiResult{2, {Integer(3)}, 5}), "Zhat_{p'}^2 x Z/3");
  EXPECT_EQ(render(FinGenAbQuotient{2, {Integer(3)}}), "(Q/Z)^2 x Z/3");
  EXPECT_EQ(render(FinGenAbQuotient{}), "1");
}

TEST(Report, TextMentionsBothGroups) {
  const std::string text =
      serialize_report(full_report(parse(kSl2Normalizer)), ReportFormat::Text);
  EXPECT_NE(text.find("pi0(H)_{p'}"), std::string::npos);
  EXPECT_NE(text.find("pi1(X)_{p'}"), std::string::npos);
  EXPECT_NE(text.find("Z/2"), std::string::npos);
  EXPECT_NE(text.find("[pass] coroot_span"), std::string::npos);
  EXPECT_NE(text.find("unknown p-part"), std::string::npos);
}

TEST(Report, StructuredIsLossless) {
  for (const CatalogEntry &entry : catalog()) {
    const Report rep = full_report(entry.datum().with_char_exponent(3));
    const auto j = nlohmann::json::parse(serialize_report(rep, ReportFormat::Structured));
    EXPECT_EQ(j["input"]["label"], rep.input.label);
    EXPECT_EQ(j["input"]["p"], 3);
    EXPECT_EQ(j["pi1"]["zhat_rank"], rep.pi1.zhat_rank);
    ASSERT_EQ(j["pi1"]["invariant_factors"].size(), rep.pi1.invariant_factors.size());
    ASSERT_EQ(j["pi0"]["invariant_factors"].size(), rep.pi0.invariant_factors.size());
    for (std::size_t i = 0; i < rep.pi1.invariant_factors.size(); ++i)
      EXPECT_EQ(j["pi1"]["invariant_factors"][i].get<long>(),
                rep.pi1.invariant_factors[i].get_si());
    EXPECT_EQ(j["input"]["lattice"].size(), rep.input.weight_rank());
    // JSON is a YAML subset, so the echoed input parses back to the datum.
    EXPECT_EQ(parse(j["input"].dump()), rep.input) << entry.name;
    EXPECT_EQ(j["validation"].size(), rep.validation.size());
  }
}

TEST(Report, StructuredBigIntegersAsStrings) {
  const SphericalDatum sd = parse(replace(
      replace(kSl2Normalizer, "colors: [[2]]", "colors: [[2], [123456789012345678901234567890]]"),
      "p: 3", "p: 1"));
  const auto j = nlohmann::json::parse(
      serialize_report(full_report(sd), ReportFormat::Structured));
  EXPECT_EQ(j["input"]["colors"][1][0], "123456789012345678901234567890");
}

TEST(Catalog, Lookup) {
  EXPECT_NE(find_catalog_entry("sl2_mod_normalizer"), nullptr);
  EXPECT_EQ(find_catalog_entry("nope"), nullptr);
  for (const CatalogEntry &e : catalog()) {
    EXPECT_EQ(e.expected.size(), 4u) << e.name;
    EXPECT_EQ(e.datum().label, e.name);
  }
}

TEST(Catalog, CompareReportsMismatch) {
  const Report rep = full_report(find_catalog_entry("sl2_mod_normalizer")->datum());
  Expectation wrong{PiResult{0, {}, 1}, PiResult{0, {Integer(3)}, 1}};
  const auto diffs = compare(rep, wrong);
  EXPECT_EQ(diffs.size(), 2u);
}
