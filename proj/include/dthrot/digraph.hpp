#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dthrot/vertex_set.hpp"

namespace dthrot {

using Arc = std::pair<int, int>;
using Edge = std::pair<int, int>;

/// Simple digraph on vertices 0..n-1 with bit-packed out/in rows.
///
/// Loops and parallel arcs are impossible by construction; a double arc
/// (u,v),(v,u) is two distinct arcs. The in-rows mirror the out-rows.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }

  void add_arc(int u, int v);
  void remove_arc(int u, int v);
  bool has_arc(int u, int v) const { return out_[u].contains(v); }

  VertexSet out(int v) const { return out_[v]; }
  VertexSet in(int v) const { return in_[v]; }
  int arc_count() const;
  /// Arcs in lexicographic order.
  std::vector<Arc> arcs() const;

  VertexSet sources() const;
  VertexSet sinks() const;
  /// Out-neighbours plus in-neighbours.
  VertexSet underlying_neighbors(int v) const { return out_[v] | in_[v]; }

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(int n);

  int order() const { return n_; }
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const { return adj_[u].contains(v); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].size(); }
  int edge_count() const;
  /// Edges (u,v) with u < v, sorted.
  std::vector<Edge> edges() const;
  bool is_connected() const;

  friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
};

// Text formats. First line "n", then one "u v" per line; '#' starts a comment.
Digraph parse_edge_list(std::string_view text);
UndirectedGraph parse_undirected_edge_list(std::string_view text);
std::string to_edge_list(const Digraph& g);
std::string to_edge_list(const UndirectedGraph& g);

// Single-token form "n:u>v,u>v" used to name instances in reports and on the
// command line. Undirected form is "n:u-v,u-v".
std::string to_compact(const Digraph& g);
Digraph parse_compact(std::string_view text);
std::string to_compact(const UndirectedGraph& g);
UndirectedGraph parse_compact_undirected(std::string_view text);

Digraph to_double_arc(const UndirectedGraph& g);
UndirectedGraph underlying_graph(const Digraph& g);
Digraph transpose(const Digraph& g);
Digraph flip_arc(const Digraph& g, int u, int v);
/// Merges v into u (or u into v); the merged vertex keeps min(u,v) and every
/// higher index shifts down by one.
Digraph contract_arc(const Digraph& g, int u, int v);
Digraph disjoint_union(const Digraph& a, const Digraph& b);
Digraph delete_vertex(const Digraph& g, int v);
/// Appends vertex n with arcs (u,n) for u in `in_from` and (n,w) for w in `out_to`.
Digraph add_vertex(const Digraph& g, VertexSet in_from, VertexSet out_to);
Digraph induced_subgraph(const Digraph& g, VertexSet keep);

bool is_oriented(const Digraph& g);
bool is_tournament(const Digraph& g);

inline constexpr int kOrientationEdgeCap = 30;

/// All 2^|E| orientations of an undirected graph. Orientation i directs
/// canonical edge j = (u,v), u < v, as v->u when bit j of i is set and as
/// u->v otherwise.
class Orientations {
 public:
  explicit Orientations(const UndirectedGraph& g);

  std::uint64_t count() const { return std::uint64_t{1} << edges_.size(); }
  Digraph at(std::uint64_t index) const;
  /// Index of the transpose of orientation `index`.
  std::uint64_t transpose_index(std::uint64_t index) const { return ~index & (count() - 1); }
  const std::vector<Edge>& edges() const { return edges_; }
  int order() const { return n_; }

 private:
  int n_;
  std::vector<Edge> edges_;
};

inline constexpr int kCensusCap = 5;

/// Every simple digraph on n labelled vertices. Unordered pair j (pairs in
/// lexicographic order) takes base-4 digit j of the index: 0 none, 1 u->v,
/// 2 v->u, 3 both.
class DigraphCensus {
 public:
  explicit DigraphCensus(int n, bool oriented_only = false);

  std::uint64_t count() const { return count_; }
  Digraph at(std::uint64_t index) const;
  int order() const { return n_; }

 private:
  int n_;
  bool oriented_;
  std::vector<Edge> pairs_;
  std::uint64_t count_;
};

/// All labelled undirected graphs on n vertices, edge subsets in index order.
std::vector<UndirectedGraph> undirected_census(int n, bool connected_only);

int independence_number(const UndirectedGraph& g);

}  // namespace dthrot
