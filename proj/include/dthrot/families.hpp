#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dthrot/digraph.hpp"

namespace dthrot {

enum class Family {
  Host,                 // host:a,c      a rows, c = b+1 columns
  Hessenberg,           // hessenberg:n[,mask]
  AlternatingPath,      // altpath:n[,flip]
  OneDirectionalPath,   // onedirpath:n
  TournamentMax,        // tmax:n
  TournamentMin,        // tmin:n
  DoubleArcOf,          // double:<undirected family spec>
  Path,                 // path:n        (undirected)
  Cycle,                // cycle:n       (undirected)
  Complete,             // complete:n    (undirected)
  Star,                 // star:n        (undirected)
  DoubleStar,           // dstar:s,t     (undirected)
  AugmentedDoubleStar,  // augdstar:s,t  (undirected)
};

/// Parsed "name:p1,p2" family spec. `inner` holds the operand of double:.
struct FamilySpec {
  Family family;
  std::vector<long long> params;
  std::string inner;

  bool is_undirected() const;
  std::string to_string() const;
};

FamilySpec parse_family_spec(std::string_view text);

using GeneratedGraph = std::variant<Digraph, UndirectedGraph>;

GeneratedGraph generate(const FamilySpec& spec);
GeneratedGraph generate(std::string_view spec);
/// Undirected families are promoted through to_double_arc.
Digraph generate_digraph(std::string_view spec);
/// Fails for directed families.
UndirectedGraph generate_undirected(std::string_view spec);

// Host digraph H_{a,b+1}: vertex v_{i,j} has index i * columns + j.
Digraph host_graph(int rows, int columns);
inline int host_index(int row, int col, int columns) { return row * columns + col; }
bool is_host_path_arc(int from, int to, int columns);

/// Forward path 0->1->...->n-1 plus back arcs (i,j), i > j. Bit k of
/// `back_mask` keeps the k-th back arc in lexicographic order; all by default.
Digraph hessenberg_path(int n, std::uint64_t back_mask = ~std::uint64_t{0});
/// Odd n: both endpoints are sinks. Even n: vertex 0 is a sink.
/// `flip` selects the transpose.
Digraph alternating_path(int n, bool flip = false);
Digraph one_directional_path(int n);
/// Arc (v_i, v_j) for every i > j.
Digraph tournament_max(int n);
/// Orientation of K_n with throttling number ceil(2 sqrt(n) - 1), cut from a
/// host digraph by contracting top-row path arcs and deleting non-path arcs.
Digraph tournament_min(int n);

UndirectedGraph path_graph(int n);
UndirectedGraph cycle_graph(int n);
UndirectedGraph complete_graph(int n);
/// Centre 0, leaves 1..n-1.
UndirectedGraph star_graph(int n);
/// Centres 0 (s leaves) and 1 (t leaves), joined by an edge.
UndirectedGraph double_star(int s, int t);
/// Centres a=0 and b=1 joined through w=2; a carries s leaves, b carries t.
UndirectedGraph augmented_double_star(int s, int t);

}  // namespace dthrot
