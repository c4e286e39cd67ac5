#include <doctest.h>

#include <algorithm>
#include <set>

#include "dthrot/digraph.hpp"
#include "dthrot/error.hpp"
#include "dthrot/families.hpp"
#include "dthrot/throttling.hpp"
#include "oracle.hpp"

using namespace dthrot;

namespace {

ErrorKind kind_of(auto&& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Internal;
}

}  // namespace

TEST_CASE("edge list parsing") {
  const Digraph one = parse_edge_list("2\n0 1");
  CHECK(one.order() == 2);
  CHECK(one.arcs() == std::vector<Arc>{{0, 1}});

  const Digraph p4 = parse_edge_list("4\n0 1\n1 2\n2 3");
  CHECK(p4 == one_directional_path(4));

  const Digraph dbl = parse_edge_list("3\n0 1\n1 0");
  CHECK(dbl.order() == 3);
  CHECK(dbl.arc_count() == 2);
  CHECK(dbl.has_arc(0, 1));
  CHECK(dbl.has_arc(1, 0));

  CHECK(parse_edge_list("# comment\n3 # n\n\n0 2 # arc\n") == parse_compact("3:0>2"));
}

TEST_CASE("edge list errors name the line") {
  auto message = [](const char* text) {
    try {
      parse_edge_list(text);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Parse);
      return std::string(e.what());
    }
    FAIL("no error");
    return std::string();
  };
  CHECK(message("3\n0 1\n1 1").find("line 3") != std::string::npos);
  CHECK(message("3\n0 5").find("line 2") != std::string::npos);
  CHECK(message("3\n0 x").find("line 2") != std::string::npos);
  CHECK(message("").size() > 0);
}

TEST_CASE("edge list and compact forms round trip") {
  const DigraphCensus census(3);
  for (std::uint64_t i = 0; i < census.count(); ++i) {
    const Digraph g = census.at(i);
    CHECK(parse_edge_list(to_edge_list(g)) == g);
    CHECK(parse_compact(to_compact(g)) == g);
  }
  const UndirectedGraph c5 = cycle_graph(5);
  CHECK(parse_undirected_edge_list(to_edge_list(c5)) == c5);
  CHECK(parse_compact_undirected(to_compact(c5)) == c5);
}

TEST_CASE("to_double_arc") {
  UndirectedGraph k2(2);
  k2.add_edge(0, 1);
  CHECK(to_double_arc(k2).arcs() == std::vector<Arc>{{0, 1}, {1, 0}});
  CHECK(to_double_arc(UndirectedGraph(3)).arc_count() == 0);

  const Digraph p3 = to_double_arc(path_graph(3));
  CHECK(p3.arc_count() == 4);
  CHECK(throttling_number(p3).th == oracle::brute_th(p3));
  CHECK(throttling_number(p3).th == 3);
}

TEST_CASE("transpose") {
  const Digraph p4 = one_directional_path(4);
  CHECK(transpose(p4).arcs() == std::vector<Arc>{{1, 0}, {2, 1}, {3, 2}});
  const Digraph d = to_double_arc(complete_graph(4));
  CHECK(transpose(d) == d);

  const Digraph t = tournament_max(5);
  const Digraph tt = transpose(t);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) CHECK(tt.has_arc(i, j) == t.has_arc(j, i));
}

TEST_CASE("flip_arc") {
  const Digraph p2 = one_directional_path(2);
  CHECK(flip_arc(p2, 0, 1).arcs() == std::vector<Arc>{{1, 0}});
  CHECK(kind_of([&] { flip_arc(p2, 1, 0); }) == ErrorKind::Precondition);
  CHECK(kind_of([] { flip_arc(parse_compact("2:0>1,1>0"), 0, 1); }) == ErrorKind::Precondition);
}

TEST_CASE("contract_arc") {
  const Digraph p2 = one_directional_path(2);
  CHECK(contract_arc(p2, 0, 1).order() == 1);
  CHECK(contract_arc(one_directional_path(3), 0, 1) == one_directional_path(2));

  const Digraph h = host_graph(2, 2);
  const Digraph c = contract_arc(h, 0, 1);
  CHECK(c.order() == 3);
  CHECK(oracle::brute_th(c) <= 3);

  // Indices above the merged pair shift down.
  const Digraph g = parse_compact("4:0>1,2>3");
  CHECK(contract_arc(g, 0, 1) == parse_compact("3:1>2"));
}

TEST_CASE("disjoint_union") {
  const Digraph p4 = one_directional_path(4);
  CHECK(disjoint_union(p4, Digraph(0)) == p4);
  const Digraph two = disjoint_union(p4, p4);
  CHECK(two.order() == 8);
  CHECK(two.has_arc(4, 5));
  CHECK(throttling_number(two).th == 5);
  CHECK(throttling_number(disjoint_union(p4, two)).th <= 6);
}

TEST_CASE("vertex deletion and addition") {
  const Digraph p2 = one_directional_path(2);
  const Digraph iso = delete_vertex(p2, 1);
  CHECK(iso.order() == 1);
  CHECK(throttling_number(iso).th == 1);

  const Digraph back = add_vertex(iso, VertexSet{0}, VertexSet{});
  CHECK(back == p2);
  CHECK(delete_vertex(parse_compact("3:0>2,2>1"), 0) == parse_compact("2:1>0"));
  CHECK(induced_subgraph(one_directional_path(4), VertexSet{1, 2, 3}) == one_directional_path(3));
}

TEST_CASE("orientations") {
  UndirectedGraph k2(2);
  k2.add_edge(0, 1);
  CHECK(Orientations(k2).count() == 2);
  CHECK(Orientations(path_graph(3)).count() == 4);

  const Orientations k3(complete_graph(3));
  REQUIRE(k3.count() == 8);
  std::multiset<int> values;
  for (std::uint64_t i = 0; i < k3.count(); ++i) {
    values.insert(oracle::brute_th(k3.at(i)));
    CHECK(transpose(k3.at(i)) == k3.at(k3.transpose_index(i)));
    CHECK(is_tournament(k3.at(i)));
  }
  CHECK(values == std::multiset<int>{3, 3, 3, 3, 3, 3, 3, 3});

  // Bit j reverses canonical edge j.
  const Orientations p3(path_graph(3));
  CHECK(p3.at(0).arcs() == std::vector<Arc>{{0, 1}, {1, 2}});
  CHECK(p3.at(1).arcs() == std::vector<Arc>{{1, 0}, {1, 2}});

  CHECK(kind_of([] { Orientations(complete_graph(9)); }) == ErrorKind::Capacity);
}

TEST_CASE("census") {
  CHECK(DigraphCensus(1).count() == 1);
  CHECK(DigraphCensus(3).count() == 64);
  CHECK(DigraphCensus(4).count() == 4096);
  CHECK(DigraphCensus(4, true).count() == 729);

  std::set<std::vector<Arc>> distinct;
  const DigraphCensus c3(3);
  for (std::uint64_t i = 0; i < c3.count(); ++i) distinct.insert(c3.at(i).arcs());
  CHECK(distinct.size() == 64);
  CHECK(undirected_census(4, false).size() == 64);
  CHECK(undirected_census(4, true).size() == 38);
}

TEST_CASE("independence number") {
  CHECK(independence_number(UndirectedGraph(4)) == 4);
  CHECK(independence_number(complete_graph(4)) == 1);
  CHECK(independence_number(path_graph(5)) == 3);
  for (const UndirectedGraph& g : undirected_census(5, false))
    CHECK(independence_number(g) == oracle::brute_independence(g));
}

TEST_CASE("structure predicates") {
  CHECK(one_directional_path(3).sources() == VertexSet{0});
  CHECK(one_directional_path(3).sinks() == VertexSet{2});
  CHECK(is_oriented(one_directional_path(3)));
  CHECK_FALSE(is_oriented(to_double_arc(path_graph(2))));
  CHECK(underlying_graph(to_double_arc(cycle_graph(4))) == cycle_graph(4));
  CHECK(path_graph(4).is_connected());
  CHECK_FALSE(UndirectedGraph(2).is_connected());
}

TEST_CASE("vertex range errors") {
  Digraph g(3);
  CHECK(kind_of([&] { g.add_arc(0, 3); }) == ErrorKind::Range);
  CHECK(kind_of([&] { g.add_arc(1, 1); }) == ErrorKind::Precondition);
  CHECK(kind_of([] { Digraph(65); }) == ErrorKind::Capacity);
}
