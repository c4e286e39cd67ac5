#pragma once

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "dthrot/digraph.hpp"
#include "dthrot/forcing.hpp"

namespace dthrot {

struct GridCell {
  int row;
  int col;

  friend constexpr auto operator<=>(const GridCell&, const GridCell&) = default;
};

/// Layout of an extension: one row per maximal forcing chain (rows ordered by
/// the chain's initial vertex), one column per time step 0..pt.
struct ExtensionBlueprint {
  int rows = 0;
  int columns = 0;
  std::vector<int> tau;                     // per vertex of the source digraph
  std::vector<std::vector<int>> chains;     // vertices of each row in forcing order
  std::vector<std::vector<GridCell>> copies;  // cells holding each vertex, left to right
};

/// Extension digraph on rows * columns vertices; cell (r, c) is vertex
/// r * columns + c.
struct Extension {
  Digraph digraph;
  ExtensionBlueprint blueprint;
};

/// Needs pt(g; forces) == pt(g; initial); throws Error(Precondition) otherwise.
Extension build_extension(const Digraph& g, VertexSet initial, const ForceSet& forces);

/// True when mapping vertex x of `ext` to cell placement[x] carries every arc
/// onto an arc of H_{a,b+1}. Cells outside the a x (b+1) grid are a Range error.
bool embeds_in_host(const Digraph& ext, const std::vector<GridCell>& placement, int a, int b);
/// Row-major placement of the extension grid.
bool embeds_in_host(const Extension& ext, int a, int b);

/// Recipe for rebuilding a digraph from H_{a,b+1}: delete the listed non-path
/// arcs, then contract the listed path arcs (each named by its tail cell).
struct CharacterizationWitness {
  int a = 1;
  int b = 0;
  std::vector<GridCell> contractions;
  std::vector<std::pair<GridCell, GridCell>> deletions;
  std::vector<std::vector<GridCell>> placement;  // per vertex of the rebuilt digraph
};

/// A witness for th(g) <= t built from an optimal certificate, or nullopt
/// when th(g) > t.
std::optional<CharacterizationWitness> witness_for_throttling(const Digraph& g, int t);

/// Throws Error(Validation) for a contraction that is not a host path arc or a
/// deletion that is not a host non-path arc.
Digraph apply_witness(const CharacterizationWitness& w);

inline constexpr int kIsomorphismCap = 10;

bool are_isomorphic(const Digraph& g1, const Digraph& g2);

}  // namespace dthrot
