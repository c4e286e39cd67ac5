// Acceptance run: one PASS/FAIL line per criterion. Exit status 1 when any
// criterion fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dthrot/characterization.hpp"
#include "dthrot/families.hpp"
#include "dthrot/forcing.hpp"
#include "dthrot/throttling.hpp"
#include "dthrot/verifier.hpp"
#include "oracle.hpp"

using namespace dthrot;

namespace {

constexpr std::uint64_t kSeed = 20240917;
constexpr std::uint64_t kSamples = 10000;

// Collects mismatches for one criterion.
class Check {
 public:
  template <typename A, typename B>
  void equal(const std::string& what, const A& got, const B& want) {
    ++count_;
    if (got == want) return;
    std::ostringstream out;
    out << what << ": got " << got << ", expected " << want;
    fail(out.str());
  }

  void truth(const std::string& what, bool ok) {
    ++count_;
    if (!ok) fail(what);
  }

  void suite(const SuiteReport& r) {
    ++count_;
    if (r.passed()) return;
    std::ostringstream out;
    out << "suite " << r.suite << " " << r.scope << ": " << r.failures.size() << " failures, first "
        << r.failures.front().instance << " (" << r.failures.front().relation << ": " << r.failures.front().observed
        << ")";
    fail(out.str());
  }

  void note(const std::string& text) { notes_.push_back(text); }

  bool passed() const { return failures_ == 0; }
  std::uint64_t checks() const { return count_; }
  const std::vector<std::string>& problems() const { return problems_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  void fail(std::string text) {
    ++failures_;
    if (problems_.size() < 5) problems_.push_back(std::move(text));
  }

  std::uint64_t count_ = 0;
  std::uint64_t failures_ = 0;
  std::vector<std::string> problems_;
  std::vector<std::string> notes_;
};

SuiteReport suite(const std::string& name, const std::string& scope) {
  SuiteOptions opts;
  opts.seed = kSeed;
  return run_suite(name, parse_scope(scope), opts);
}

// ---------------------------------------------------------------- criteria

void examples(Check& c) {
  const Digraph p4 = one_directional_path(4);
  const Digraph two = disjoint_union(p4, p4);
  const Digraph three = disjoint_union(two, p4);
  c.equal("th(P4)", throttling_number(p4).th, 3);
  c.equal("th(P4 u P4)", throttling_number(two).th, 5);
  c.truth("th(P4 u P4 u P4) <= 6", throttling_number(three).th <= 6);
  c.equal("pt_min(P4)", pt_min(p4), 3);
  c.equal("pt_min(P4 with source arc flipped)", pt_min(flip_arc(p4, 0, 1)), 1);
  c.equal("oracle th(P4 u P4)", oracle::brute_th(two), 5);
  c.note("th(P4 u P4 u P4) = " + std::to_string(throttling_number(three).th));
}

void tournaments(Check& c) {
  for (int n = 4; n <= 7; ++n) {
    const Digraph t = tournament_max(n);
    c.truth("tmax(" + std::to_string(n) + ") is a tournament", is_tournament(t));
    c.equal("th(tmax(" + std::to_string(n) + "))", throttling_number(t).th, n);
    c.equal("oracle th(tmax(" + std::to_string(n) + "))", oracle::brute_th(t), n);
  }
  for (int n = 4; n <= 12; ++n) {
    const Digraph t = tournament_min(n);
    const long long floor = oracle::floor_2sqrt(n);
    c.truth("tmin(" + std::to_string(n) + ") is a tournament", is_tournament(t));
    c.equal("th(tmin(" + std::to_string(n) + "))", throttling_number(t).th, floor);
    c.equal("oracle th(tmin(" + std::to_string(n) + "))", oracle::brute_th(t), floor);
  }
}

void alternating(Check& c) {
  for (int n = 2; n <= 14; ++n) {
    const std::string at = "(" + std::to_string(n) + ")";
    const int th = throttling_number(alternating_path(n)).th;
    c.equal("oracle th altpath" + at, oracle::brute_th(alternating_path(n)), th);
    if (n % 2 == 1) {
      c.equal("th altpath" + at + " vs odd form", th, oracle::alt_odd(n));
      c.equal("library odd form" + at, closed_form(ClosedForm::AltOdd, n), oracle::alt_odd(n));
    } else {
      c.equal("th altpath" + at + " vs even form", th, oracle::alt_even(n));
      c.equal("lower bound" + at, oracle::alt_even_lower(n), oracle::alt_even(n));
      c.equal("upper bound" + at, oracle::alt_even_upper(n), oracle::alt_even(n));
      c.equal("library even form" + at, closed_form(ClosedForm::AltEven, n), oracle::alt_even(n));
      c.equal("library lower bound" + at, closed_form(ClosedForm::AltEvenLb, n), oracle::alt_even_lower(n));
      c.equal("library upper bound" + at, closed_form(ClosedForm::AltEvenUb, n), oracle::alt_even_upper(n));
    }
  }
}

void conjecture(Check& c, int n_max) {
  const SuiteReport r = verify_alternating_conjecture(n_max);
  c.suite(r);
  for (int n = 2; n <= n_max; ++n) {
    char key[32];
    std::snprintf(key, sizeof key, "n=%02d:max", n);
    const auto it = r.stats.find(key);
    c.truth(std::string("report has ") + key, it != r.stats.end());
    if (it == r.stats.end()) continue;
    const long long expected = n % 2 == 1 ? oracle::alt_odd(n) : oracle::alt_even(n);
    c.equal("max th over orientations of P" + std::to_string(n), it->second, expected);
  }
  c.note("n <= " + std::to_string(n_max) + ", " + std::to_string(r.instances) + " orientations");
}

void census_laws(Check& c) {
  for (const char* name : {"transpose", "arcflip", "vertexpm", "uniontranspose", "ptk_transpose"}) {
    c.suite(suite(name, "census:4"));
    c.suite(suite(name, "random:8:" + std::to_string(kSamples)));
  }

  // Solver and greedy propagation against the oracle on the whole census.
  const DigraphCensus census(4);
  for (std::uint64_t i = 0; i < census.count(); ++i) {
    const Digraph g = census.at(i);
    const oracle::Matrix m(g);
    c.equal("th " + to_compact(g), throttling_number(g).th, oracle::brute_th(m, true));
    for (std::uint64_t mask = 0; mask < 16; ++mask) {
      const PropTime pt = pt_of_set(g, VertexSet(mask));
      c.equal("pt " + to_compact(g), pt.forcing() ? pt.value() : oracle::kNever, oracle::brute_pt(m, mask));
    }
  }

  // Seeded samples up to order 8: an optimal set and a random set each.
  const std::vector<Digraph> sample = scope_digraphs(parse_scope("random:8:" + std::to_string(kSamples)), kSeed);
  std::mt19937_64 rng(kSeed);
  for (const Digraph& g : sample) {
    const oracle::Matrix m(g);
    const ThrottlingCertificate cert = throttling_number(g);
    const VertexSet random_set(rng() & VertexSet::range(g.order()).bits());
    for (VertexSet b : {cert.initial, random_set | g.sources()}) {
      const PropTime pt = pt_of_set(g, b);
      c.equal("sampled pt " + to_compact(g), pt.forcing() ? pt.value() : oracle::kNever, oracle::brute_pt(m, b.bits()));
    }
  }
  c.note("4096 census digraphs, " + std::to_string(sample.size()) + " samples of order <= 8, seed " +
         std::to_string(kSeed));
}

void oti_laws(Check& c) {
  for (const char* name : {"oti_full", "oti_bounds", "oti_subset"}) c.suite(suite(name, "range:1..5"));

  std::uint64_t graphs = 0;
  for (int n = 1; n <= 5; ++n)
    for (const UndirectedGraph& g : undirected_census(n, true)) {
      ++graphs;
      const std::string id = to_compact(g);
      const Orientations all(g);
      const OTIReport report = oti(g);
      std::vector<int> values;
      for (std::uint64_t i = 0; i < all.count(); ++i) values.push_back(oracle::brute_th(all.at(i)));
      c.truth("OTI values " + id, values == report.values);
      const int m = *std::min_element(values.begin(), values.end());
      const int M = *std::max_element(values.begin(), values.end());
      c.truth("lower end " + id, m >= oracle::floor_2sqrt(n));
      c.truth("upper end " + id, M <= n);
      c.truth("width " + id, M - m <= g.edge_count() / 2);
      for (int v = m; v <= M; ++v)
        c.truth("attains " + std::to_string(v) + " " + id, std::find(values.begin(), values.end(), v) != values.end());
      c.truth("m <= th(G) " + id, m <= oracle::brute_th(to_double_arc(g)));
      if (g.edge_count() > 0) c.truth("alpha + 1 <= M " + id, oracle::brute_independence(g) + 1 <= M);
    }
  c.note(std::to_string(graphs) + " connected graphs");
}

// Random witness: any subset of host path arcs contracted, any subset of
// non-path arcs deleted.
CharacterizationWitness random_witness(int a, int b, std::mt19937_64& rng) {
  CharacterizationWitness w;
  w.a = a;
  w.b = b;
  const int cols = b + 1;
  const Digraph host = host_graph(a, cols);
  for (int r = 0; r < a; ++r)
    for (int col = 0; col + 1 < cols; ++col)
      if (rng() & 1U) w.contractions.push_back({r, col});
  for (auto [u, v] : host.arcs()) {
    if (is_host_path_arc(u, v, cols)) continue;
    if (rng() & 1U) w.deletions.push_back({{u / cols, u % cols}, {v / cols, v % cols}});
  }
  return w;
}

void characterization(Check& c) {
  for (int n = 1; n <= 4; ++n) {
    c.suite(suite("charthm", "census:" + std::to_string(n)));
    const DigraphCensus census(n);
    for (std::uint64_t i = 0; i < census.count(); ++i) {
      const Digraph g = census.at(i);
      const int th = oracle::brute_th(g);
      const auto w = witness_for_throttling(g, th);
      c.truth("witness exists " + to_compact(g), w.has_value());
      if (!w) continue;
      c.truth("replay isomorphic " + to_compact(g), oracle::brute_isomorphic(apply_witness(*w), g));
    }
  }
  c.suite(suite("witness_sound", "random:4:100"));

  std::mt19937_64 rng(kSeed);
  std::uint64_t replays = 0;
  for (int a = 1; a <= 4; ++a)
    for (int b = 0; a + b <= 4; ++b)
      for (int k = 0; k < 100; ++k) {
        const Digraph g = apply_witness(random_witness(a, b, rng));
        c.truth("random witness a=" + std::to_string(a) + " b=" + std::to_string(b) + " gives " + to_compact(g),
                oracle::brute_th(g) <= a + b);
        ++replays;
      }
  c.note(std::to_string(replays) + " random witness replays, seed " + std::to_string(kSeed));
}

// y - x over the underlying graph, computed directly.
int leaf_excess(const Digraph& g) {
  const UndirectedGraph u = underlying_graph(g);
  int leaves = 0;
  std::vector<char> centre(g.order(), 0);
  for (int v = 0; v < g.order(); ++v)
    if (u.degree(v) == 1) {
      ++leaves;
      centre[u.neighbors(v).first()] = 1;
    }
  int centres = 0;
  for (char x : centre) centres += x;
  return leaves - centres;
}

void families(Check& c) {
  c.suite(suite("star", "range:3..7"));
  for (int n = 3; n <= 7; ++n) {
    const Orientations star(star_graph(n));
    for (std::uint64_t i = 0; i < star.count(); ++i) {
      const Digraph g = star.at(i);
      c.equal("oracle th star orientation " + to_compact(g), oracle::brute_th(g), n);
      const oracle::Matrix m(g);
      const int bound = leaf_excess(g);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
        if (oracle::greedy_pt(m, mask) != oracle::kNever)
          c.truth("leaf bound " + to_compact(g), std::popcount(mask) >= bound);
    }
  }

  const SuiteReport aug = suite("augstar", "range:12..12");
  c.suite(aug);
  const Orientations all(augmented_double_star(4, 5));
  for (std::uint64_t i = 0; i < all.count(); ++i) {
    const int th = throttling_number(all.at(i)).th;
    c.truth("6 < th < 12 for " + to_compact(all.at(i)), 6 < th && th < 12);
  }
  for (std::uint64_t i = 0; i < all.count(); i += 64)
    c.equal("oracle th " + to_compact(all.at(i)), oracle::brute_th(all.at(i)), throttling_number(all.at(i)).th);

  c.suite(suite("leaves", "census:4"));
  c.suite(suite("leaves", "family:augdstar:4,5"));
  c.suite(suite("leaves", "family:star:7"));
  c.note(std::to_string(aug.instances) + " augmented double star orientations");
}

void psd(Check& c) {
  for (int n = 2; n <= 14; n += 2) {
    const std::string at = "(" + std::to_string(n) + ")";
    const int direct = throttling_number(alternating_path(n)).th;
    const PinnedPsdThrottle pinned = psd_throttle_pinned(1 + n / 2);
    c.equal("reduction" + at, direct, n / 2 - 1 + pinned.th);
    c.equal("oracle pinned PSD" + at, oracle::psd_pinned_th(1 + n / 2), pinned.th);
    c.equal("oracle reduction" + at, oracle::brute_th(alternating_path(n)), n / 2 - 1 + oracle::psd_pinned_th(1 + n / 2));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  bool extended = false;
  app.add_flag("--extended", extended, "conjecture up to n = 14");
  CLI11_PARSE(app, argc, argv);

  struct Criterion {
    int id;
    std::string title;
    std::function<void(Check&)> run;
  };
  const int n_max = extended ? 14 : 12;
  const std::vector<Criterion> criteria = {
      {1, "example values", examples},
      {2, "tournament extremes", tournaments},
      {3, "alternating path formulas", alternating},
      {4, "max over path orientations, n <= " + std::to_string(n_max), [n_max](Check& c) { conjecture(c, n_max); }},
      {5, "census invariants", census_laws},
      {6, "orientation throttling interval laws", oti_laws},
      {7, "characterization round trip", characterization},
      {8, "family theorems", families},
      {9, "PSD reduction", psd},
  };

  bool all = true;
  for (const Criterion& cr : criteria) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    const bool ok = error.empty() && c.passed();
    all = all && ok;
    std::cout << "criterion " << cr.id << ": " << (ok ? "PASS" : "FAIL") << "  " << cr.title << "  (" << c.checks()
              << " checks, " << ms << " ms)\n";
    for (const std::string& n : c.notes()) std::cout << "    " << n << '\n';
    for (const std::string& p : c.problems()) std::cout << "    failed: " << p << '\n';
    if (!error.empty()) std::cout << "    error: " << error << '\n';
    std::cout.flush();
  }
  return all ? 0 : 1;
}
