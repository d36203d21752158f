#include <doctest.h>

#include <sstream>

#include "support.hpp"
#include "unimod/construction.hpp"
#include "unimod/errors.hpp"
#include "unimod/io.hpp"
#include "unimod/report.hpp"

using namespace unimod;

TEST_CASE("code files round trip") {
  const ZkCode c = dataset("D36_2");
  std::stringstream s;
  write_code(s, c);
  CHECK(read_code(s) == c);
  std::istringstream t("3 4 2\n1 0 1 1\n0 1 1 2\n");
  CHECK(read_code(t) == testing_support::tetracode());
}

TEST_CASE("lattice files round trip") {
  const Lattice l = construction_a(dataset("C36_3"));
  std::stringstream s;
  write_lattice(s, l);
  const Lattice r = read_lattice(s);
  CHECK(r.basis() == l.basis());
  CHECK(r.scale() == l.scale());
}

TEST_CASE("malformed files are rejected") {
  std::istringstream truncated("2 1\n1 0\n0\n");
  CHECK_THROWS_AS(read_lattice(truncated), ParseError);
  std::istringstream singular("2 1\n1 0\n2 0\n");
  CHECK_THROWS_AS(read_lattice(singular), ParseError);
  std::istringstream trailing("1 1 1\n1 5\n");
  CHECK_THROWS_AS(read_code(trailing), ParseError);
  std::istringstream junk("a b c");
  CHECK_THROWS_AS(read_code(junk), ParseError);
  CHECK_THROWS_AS(load_lattice_file("/nonexistent/file.lat"), ParseError);
}

TEST_CASE("rationals") {
  CHECK(rational_key(mpq_class(3, 4)) == "3/4");
  CHECK(rational_key(mpq_class(2)) == "2/1");
  CHECK(parse_rational("6/8") == mpq_class(3, 4));
  CHECK(parse_rational("5") == 5);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
}

TEST_CASE("weight enumerator JSON round trip") {
  const UnivariatePoly p{{0, 1}, {3, mpq_class(-5, 2)}, {16, 63}};
  const nlohmann::json j = to_json(p);
  CHECK(j["3"] == "-5/2");
  CHECK(j["16"] == "63/1");
  CHECK(univariate_from_json(j) == p);
  CHECK_THROWS_AS(univariate_from_json(nlohmann::json::parse(R"({"x": "1"})")), ParseError);
}

TEST_CASE("theta JSON round trip") {
  ThetaPrefix t(4);
  t.add(0, 1);
  t.add(mpq_class(1, 2), 6);
  t.add(4, 24);
  const nlohmann::json j = to_json(t);
  CHECK(j["1/2"] == 6);
  CHECK(theta_from_json(j, 4) == t);
}

TEST_CASE("analyze reports shadow data for odd unimodular lattices") {
  const ReportRow z = analyze("Z4", Lattice(IntMatrix::identity(4), 1), {2, 9, {}});
  CHECK(z.min_norm == mpq_class(1));
  CHECK(z.tau == 8);
  CHECK(z.alpha == std::optional<std::uint64_t>(16));
  CHECK(z.shadow_min == mpq_class(1));
  CHECK(z.n_counts == std::make_pair<std::uint64_t, std::uint64_t>(32, 32));

  const ReportRow e8 = analyze("E8", construction_a(testing_support::hamming84()), {2, 9, {}});
  CHECK(e8.tau == 240);
  CHECK_FALSE(e8.alpha.has_value());
  CHECK_FALSE(e8.n_counts.has_value());

  const nlohmann::json j = to_json(z);
  CHECK(j["tau"] == 8);
  CHECK(j["min_norm"] == 1);
  CHECK(j["n_counts"] == nlohmann::json::array({32, 32}));
  CHECK(j["theta"]["1/1"] == 8);
  CHECK(to_json(e8)["alpha"].is_null());
}

TEST_CASE("analyze matches the table for one dataset lattice") {
  const ReportRow row = analyze("C36_1", construction_a(dataset("C36_1")));
  const ExpectedRow* e = find_expected("C36_1");
  REQUIRE(e != nullptr);
  CHECK(matches(row, *e));
  CHECK(row.alpha == std::optional<std::uint64_t>(2));
  CHECK(row.shadow_min == mpq_class(1));
  CHECK(table1_markdown({row}).find("{0, 840}") != std::string::npos);
}

TEST_CASE("expected table") {
  CHECK(table1_expected().size() == 21);
  CHECK(find_expected("D36_8")->n_counts == std::make_pair<std::uint64_t, std::uint64_t>(384, 576));
  CHECK(find_expected("E36_1")->n_counts == std::make_pair<std::uint64_t, std::uint64_t>(456, 504));
  CHECK(find_expected("nope") == nullptr);
  for (const auto& r : table1_expected()) CHECK(r.modulus == dataset(r.name).modulus());
  CHECK(long_shadow_sources().size() == 4);
}
