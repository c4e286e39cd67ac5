#include <doctest.h>

#include "dthrot/error.hpp"
#include "dthrot/families.hpp"
#include "dthrot/json_io.hpp"
#include "dthrot/throttling.hpp"
#include "dthrot/verifier.hpp"
#include "oracle.hpp"

using namespace dthrot;

TEST_CASE("closed forms") {
  CHECK(closed_form(ClosedForm::AltEven, 2) == 2);
  CHECK(closed_form(ClosedForm::AltOdd, 5) == 4);
  CHECK(closed_form(ClosedForm::AltEven, 6) == 5);
  CHECK(closed_form(ClosedForm::AltEven, 16) == 12);
  CHECK(closed_form(ClosedForm::Floor2Sqrt, 5) == 4);
  CHECK(oracle::alt_even(2) == 2);
  CHECK(oracle::alt_odd(5) == 4);
  CHECK(oracle::alt_even(6) == 5);
  CHECK(oracle::alt_even(16) == 12);

  for (long long n = 1; n <= 4001; n += 2) REQUIRE(closed_form(ClosedForm::AltOdd, n) == oracle::alt_odd(n));
  for (long long n = 2; n <= 4000; n += 2) {
    REQUIRE(closed_form(ClosedForm::AltEven, n) == oracle::alt_even(n));
    REQUIRE(closed_form(ClosedForm::AltEvenLb, n) == oracle::alt_even_lower(n));
    REQUIRE(closed_form(ClosedForm::AltEvenUb, n) == oracle::alt_even_upper(n));
    REQUIRE(oracle::alt_even_lower(n) == oracle::alt_even_upper(n));
  }
  for (long long n = 1; n <= 4000; ++n) REQUIRE(closed_form(ClosedForm::Floor2Sqrt, n) == oracle::floor_2sqrt(n));

  // Large arguments stay exact.
  const long long big = 1'000'000'000'000LL;
  CHECK(closed_form(ClosedForm::AltEven, big) == big / 2 + 1'000'000);
  CHECK(closed_form(ClosedForm::Floor2Sqrt, big) == 1'999'999);

  CHECK_THROWS_AS(closed_form(ClosedForm::AltOdd, 4), Error);
  CHECK_THROWS_AS(closed_form(ClosedForm::AltEven, 5), Error);
  CHECK_THROWS_AS(closed_form(ClosedForm::AltEven, 0), Error);
  CHECK(parse_closed_form("alt_even_ub") == ClosedForm::AltEvenUb);
  CHECK(std::string(to_string(ClosedForm::Floor2Sqrt)) == "floor_2sqrt");
  CHECK_THROWS_AS(parse_closed_form("nope"), Error);

  const ClosedFormParams p = ClosedFormParams::of(16);
  CHECK(p.n == 16);
  CHECK(p.p > 1.5);
  CHECK(p.p < 1.6);
}

TEST_CASE("solver matches the closed forms") {
  for (int n = 2; n <= 14; ++n) {
    const int th = throttling_number(alternating_path(n)).th;
    REQUIRE(th == oracle::brute_th(alternating_path(n)));
    if (n % 2 == 1)
      REQUIRE(th == oracle::alt_odd(n));
    else
      REQUIRE(th == oracle::alt_even(n));
  }
}

TEST_CASE("scopes") {
  CHECK(parse_scope("census:4").kind == Scope::Kind::Census);
  CHECK(parse_scope("census:4").to_string() == "census:4");
  const Scope r = parse_scope("range:3..7");
  CHECK(r.kind == Scope::Kind::Range);
  CHECK(r.lo == 3);
  CHECK(r.hi == 7);
  const Scope rnd = parse_scope("random:8:100");
  CHECK(rnd.count == 100);
  CHECK(rnd.to_string() == "random:8:100");
  CHECK(parse_scope("family:star:5").family == "star:5");
  CHECK_THROWS_AS(parse_scope("census"), Error);
  CHECK_THROWS_AS(parse_scope("range:7..3"), Error);
  CHECK_THROWS_AS(parse_scope("random:8:0"), Error);
  CHECK_THROWS_AS(parse_scope("galaxy:3"), Error);
  CHECK_THROWS_AS(parse_scope("family:nope:3"), Error);

  CHECK(scope_digraphs(parse_scope("census:3"), 0).size() == 64);
  const auto a = scope_digraphs(parse_scope("random:8:50"), 11);
  const auto b = scope_digraphs(parse_scope("random:8:50"), 11);
  const auto c = scope_digraphs(parse_scope("random:8:50"), 12);
  CHECK(a == b);
  CHECK(a != c);
  for (const Digraph& g : a) {
    CHECK(g.order() >= 1);
    CHECK(g.order() <= 8);
  }
}

TEST_CASE("every suite passes at a small scope") {
  const std::vector<std::pair<std::string, std::string>> runs = {
      {"transpose", "census:3"},      {"arcflip", "census:3"},         {"flip_increase", "census:3"},
      {"sourcesink", "census:3"},     {"pathinterior", "range:2..7"},  {"vertexpm", "census:3"},
      {"uniontranspose", "census:3"}, {"ptk_transpose", "census:3"},   {"terminus", "census:3"},
      {"oti_full", "range:1..4"},     {"oti_bounds", "range:1..4"},    {"oti_subset", "range:1..4"},
      {"leaves", "census:3"},         {"star", "range:3..5"},          {"augstar", "range:12..12"},
      {"compmax", "range:1..8"},      {"charthm", "census:3"},         {"witness_sound", "random:3:5"},
      {"finite", "census:3"},         {"induced_nonmonotone", "census:6"}};
  CHECK(runs.size() == suite_names().size());
  for (const auto& [name, scope] : runs) {
    CAPTURE(name);
    const SuiteReport r = run_suite(name, parse_scope(scope));
    CHECK(r.suite == name);
    CHECK(r.instances > 0);
    CHECK(r.passed());
  }
}

TEST_CASE("induced non-monotonicity needs six vertices") {
  const SuiteReport five = run_suite("induced_nonmonotone", parse_scope("census:5"));
  CHECK_FALSE(five.passed());
  const SuiteReport six = run_suite("induced_nonmonotone", parse_scope("census:6"));
  REQUIRE(six.passed());
  REQUIRE_FALSE(six.examples.empty());
}

TEST_CASE("suite reports are deterministic") {
  SuiteOptions opts;
  opts.seed = 42;
  Json a = to_json(run_suite("vertexpm", parse_scope("random:6:200"), opts));
  Json b = to_json(run_suite("vertexpm", parse_scope("random:6:200"), opts));
  opts.threads = 3;
  Json c = to_json(run_suite("vertexpm", parse_scope("random:6:200"), opts));
  for (Json* j : {&a, &b, &c}) j->erase("ms");
  CHECK(a == b);
  CHECK(a == c);
  CHECK(a["seed"] == 42);
}

TEST_CASE("suite argument errors") {
  CHECK_THROWS_AS(run_suite("nosuch", parse_scope("census:3")), Error);
  CHECK_THROWS_AS(run_suite("witness_sound", parse_scope("census:3")), Error);
  CHECK_THROWS_AS(run_suite("star", parse_scope("random:4:3")), Error);
}

TEST_CASE("a failing relation is reported with a replayable instance") {
  // Feed the conjecture verdict a deliberately wrong OTI report.
  OTIReport fake = oti(path_graph(4));
  fake.values[fake.argmax] = 9;
  fake.M = 9;
  const SuiteReport r = conjecture_from_reports({oti(path_graph(2)), fake});
  REQUIRE_FALSE(r.passed());
  CHECK(r.failures.front().instance == to_compact(path_graph(4)));
  CHECK_NOTHROW(parse_compact_undirected(r.failures.front().instance));
}

TEST_CASE("conjecture") {
  const SuiteReport r = verify_alternating_conjecture(8);
  CHECK(r.passed());
  CHECK(r.stats.at("n=04:max") == 4);
  CHECK(r.stats.at("n=05:max") == 4);
  CHECK_THROWS_AS(verify_alternating_conjecture(0), Error);
  CHECK_THROWS_AS(verify_alternating_conjecture(kConjectureCap + 1), Error);

  std::vector<OTIReport> reports;
  for (int n = 1; n <= 8; ++n) reports.push_back(oti(path_graph(n)));
  Json a = to_json(conjecture_from_reports(reports));
  Json b = to_json(r);
  a.erase("ms");
  b.erase("ms");
  CHECK(a == b);
}

TEST_CASE("census distributions") {
  const CensusDistribution d3 = census_distribution(3, "th", false);
  CHECK(d3.total == 64);
  CHECK(d3.complete());
  std::uint64_t sum = 0;
  for (const auto& [v, c] : d3.counts) sum += c;
  CHECK(sum == 64);

  const CensusDistribution whole = census_distribution(4, "z", false);
  std::map<int, std::uint64_t> expected;
  const DigraphCensus census(4);
  for (std::uint64_t i = 0; i < census.count(); ++i) ++expected[oracle::brute_z(oracle::Matrix(census.at(i)))];
  CHECK(whole.counts == expected);

  std::vector<CensusDistribution> parts;
  for (std::uint64_t s = 0; s < 4; ++s) parts.push_back(census_distribution(4, "z", false, s, 4));
  std::swap(parts[1], parts[3]);
  CHECK(merge(parts).counts == expected);

  CHECK(census_distribution(4, "th", true).total == 729);
  CHECK_THROWS_AS(census_distribution(4, "pt", false), Error);
  CHECK_THROWS_AS(census_distribution(4, "th", false, 4, 4), Error);
}
