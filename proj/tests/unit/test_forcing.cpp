#include <doctest.h>

#include <functional>

#include "dthrot/error.hpp"
#include "dthrot/families.hpp"
#include "dthrot/forcing.hpp"
#include "dthrot/int_math.hpp"
#include "oracle.hpp"

using namespace dthrot;

TEST_CASE("valid forces") {
  CHECK(valid_forces(one_directional_path(2), VertexSet{0}) == std::vector<Force>{{0, 1}});
  // Middle vertex of the alternating P3 with sink endpoints is the source.
  CHECK(valid_forces(alternating_path(3), VertexSet{1}).empty());

  const Digraph t = tournament_max(5);
  CHECK(valid_forces(t, VertexSet{4}).empty());
  // Every blue vertex sees only v0 white, so v0 is the single forced vertex.
  CHECK(valid_forces(t, VertexSet{1, 2, 3, 4}) == std::vector<Force>{{1, 0}, {2, 0}, {3, 0}, {4, 0}});
  CHECK(propagate_greedy(t, VertexSet{1, 2, 3, 4}).forcer_of[0] == 1);
}

TEST_CASE("greedy propagation") {
  const Digraph p4 = one_directional_path(4);
  const Timeline one = propagate_greedy(p4, VertexSet{0});
  CHECK(one.pt == PropTime::steps(3));
  CHECK(one.layers.size() == 4);
  CHECK(propagate_greedy(p4, VertexSet{0, 2}).pt == PropTime::steps(1));
  CHECK(propagate_greedy(p4, p4.vertices()).pt == PropTime::steps(0));
  CHECK_FALSE(propagate_greedy(p4, VertexSet{1}).pt.forcing());

  // The smallest eligible forcer gets the credit.
  const Digraph fan = parse_compact("3:0>2,1>2");
  const Timeline tl = propagate_greedy(fan, VertexSet{0, 1});
  CHECK(tl.forcer_of[2] == 0);
  CHECK(tl.forces().forces() == std::vector<Force>{{0, 2}});
}

TEST_CASE("prop time sentinel") {
  CHECK_THROWS_AS(PropTime::not_forcing().value(), Error);
  CHECK(PropTime::steps(2).value() == 2);
  CHECK(throttle_sum(3, PropTime::steps(2)) == 5);
  CHECK_THROWS_AS(throttle_sum(3, PropTime::not_forcing()), Error);
}

TEST_CASE("zero forcing number") {
  for (int n = 1; n <= 8; ++n) CHECK(zero_forcing_number(one_directional_path(n)) == 1);
  CHECK(zero_forcing_number(alternating_path(5)) == 3);
  CHECK(oracle::brute_z(oracle::Matrix(alternating_path(5))) == 3);
  CHECK(is_zfs(one_directional_path(3), VertexSet{0}));
  CHECK_FALSE(is_zfs(one_directional_path(3), VertexSet{1}));

  const DigraphCensus census(4);
  for (std::uint64_t i = 0; i < census.count(); ++i) {
    const Digraph g = census.at(i);
    REQUIRE(zero_forcing_number(g) == oracle::brute_z(oracle::Matrix(g)));
  }
}

TEST_CASE("star zero forcing sets hold all but one leaf") {
  const Orientations star(star_graph(4));
  for (std::uint64_t i = 0; i < star.count(); ++i) {
    const Digraph g = star.at(i);
    for (std::uint64_t mask = 0; mask < 16; ++mask) {
      const VertexSet b(mask);
      if (!is_zfs(g, b)) continue;
      CHECK((b & VertexSet{1, 2, 3}).size() >= 2);
    }
  }
}

TEST_CASE("greedy pt equals oracle on every set of every 4-vertex digraph") {
  const DigraphCensus census(4);
  for (std::uint64_t i = 0; i < census.count(); ++i) {
    const Digraph g = census.at(i);
    const oracle::Matrix m(g);
    for (std::uint64_t mask = 0; mask < 16; ++mask) {
      const PropTime pt = pt_of_set(g, VertexSet(mask));
      const int expected = oracle::brute_pt(m, mask);
      REQUIRE(pt.forcing() == (expected != oracle::kNever));
      if (pt.forcing()) REQUIRE(pt.value() == expected);
      REQUIRE(propagate_greedy(g, VertexSet(mask)).pt == pt);
    }
  }
}

TEST_CASE("round cap") {
  const Digraph p6 = one_directional_path(6);
  CHECK(pt_of_set(p6, VertexSet{0}, 5) == PropTime::steps(5));
  CHECK_FALSE(pt_of_set(p6, VertexSet{0}, 4).forcing());
}

TEST_CASE("timeline of a force set") {
  const Digraph p3 = one_directional_path(3);
  const ForceSet chain({{0, 1}, {1, 2}});
  CHECK(timeline_of_forces(p3, VertexSet{0}, chain).pt == PropTime::steps(2));
  CHECK_FALSE(timeline_of_forces(p3, VertexSet{0}, ForceSet({{0, 1}})).pt.forcing());

  // Two copies of the one-directional P4: both sources plus vertex 2 of the first.
  const Digraph two = disjoint_union(one_directional_path(4), one_directional_path(4));
  const ForceSet f({{0, 1}, {2, 3}, {4, 5}, {5, 6}, {6, 7}});
  const Timeline tl = timeline_of_forces(two, VertexSet{0, 2, 4}, f);
  CHECK(tl.pt == PropTime::steps(3));
  const ForceSet g({{0, 1}, {2, 3}, {4, 5}, {6, 7}});
  CHECK(timeline_of_forces(two, VertexSet{0, 2, 4, 6}, g).pt == PropTime::steps(1));

  CHECK_THROWS_AS(validate_forces(p3, VertexSet{0}, ForceSet({{1, 2}})), Error);
  CHECK_THROWS_AS(validate_forces(p3, VertexSet{0}, ForceSet({{0, 2}})), Error);
  CHECK_THROWS_AS(timeline_of_forces(p3, VertexSet{0}, ForceSet({{0, 2}})), Error);
  CHECK_THROWS_AS(ForceSet({{0, 1}, {0, 2}}), Error);
  CHECK_THROWS_AS(ForceSet({{0, 2}, {1, 2}}), Error);
}

TEST_CASE("pt_k and pt_min") {
  const Digraph p4 = one_directional_path(4);
  CHECK(pt_k(p4, 1) == 3);
  CHECK(pt_k(p4, 2) == 1);
  CHECK(pt_k(p4, 4) == 0);
  CHECK(pt_min(p4) == 3);
  CHECK(pt_min(flip_arc(p4, 0, 1)) == 1);
  CHECK_THROWS_AS(pt_k(p4, 0), Error);
  CHECK_THROWS_AS(pt_k(p4, 5), Error);
  CHECK_THROWS_AS(pt_k(alternating_path(5), 2), Error);

  const DigraphCensus census(4);
  for (std::uint64_t i = 0; i < census.count(); i += 7) {
    const Digraph g = census.at(i);
    const oracle::Matrix m(g);
    for (int k = zero_forcing_number(g); k <= 4; ++k) REQUIRE(pt_k(g, k) == oracle::brute_pt_k(m, k));
  }
}

TEST_CASE("terminus and reversal") {
  const ForceSet chain({{0, 1}, {1, 2}});
  CHECK(terminus(3, chain) == VertexSet{2});
  CHECK(reverse(chain) == ForceSet({{2, 1}, {1, 0}}));
  CHECK(reverse(reverse(chain)) == chain);
}

TEST_CASE("reversal law on every performable force set") {
  // For every digraph on at most 4 vertices and every set of forces F of a
  // zero forcing set B, Rev(F) is a set of forces of Term(F) in the transpose.
  for (int n = 1; n <= 4; ++n) {
    const DigraphCensus census(n);
    for (std::uint64_t i = 0; i < census.count(); ++i) {
      const Digraph g = census.at(i);
      const Digraph gt = transpose(g);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const VertexSet b(mask);
        // Enumerate every performable F by exploring forcer assignments.
        std::vector<int> forcer(n, -1);
        std::function<void(VertexSet, VertexSet)> walk = [&](VertexSet blue, VertexSet used) {
          if (blue == g.vertices()) {
            std::vector<Force> fs;
            for (int w = 0; w < n; ++w)
              if (forcer[w] >= 0) fs.push_back({forcer[w], w});
            const ForceSet f(fs);
            const ForceSet rev = reverse(f);
            const VertexSet term = terminus(n, f);
            REQUIRE(term.size() == b.size());
            REQUIRE_NOTHROW(validate_forces(gt, term, rev));
            REQUIRE(timeline_of_forces(gt, term, rev).pt.forcing());
            return;
          }
          for (const Force& f : valid_forces(g, blue)) {
            if (used.contains(f.forcer)) continue;
            forcer[f.target] = f.forcer;
            walk(blue | VertexSet::single(f.target), used | VertexSet::single(f.forcer));
            forcer[f.target] = -1;
          }
        };
        walk(b, VertexSet{});
      }
    }
  }
}

TEST_CASE("psd on paths") {
  CHECK(psd_propagate_path(1, VertexSet{0}) == PropTime::steps(0));
  CHECK(psd_propagate_path(5, VertexSet{2}) == PropTime::steps(2));
  CHECK_THROWS_AS(psd_propagate_path(0, VertexSet{}), Error);
  for (int len = 1; len <= 10; ++len)
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << len); ++mask)
      REQUIRE(psd_propagate_path(len, VertexSet(mask)).value() == oracle::psd_path_pt(len, mask));

  // Pinned seed set on the path on 9 vertices: {0, 5, 8} finishes within 2 rounds.
  CHECK(psd_propagate_path(9, VertexSet{0, 5, 8}).value() <= 2);
  for (int m = 1; m <= 12; ++m) {
    const PinnedPsdThrottle p = psd_throttle_pinned(m);
    CHECK(p.initial.contains(0));
    CHECK(p.th == oracle::psd_pinned_th(m));
    CHECK(p.size + p.pt == p.th);
  }
}
