#include "dthrot/characterization.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "dthrot/error.hpp"
#include "dthrot/families.hpp"
#include "dthrot/throttling.hpp"

namespace dthrot {

namespace {

std::string cell_text(GridCell c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

}  // namespace

Extension build_extension(const Digraph& g, VertexSet initial, const ForceSet& forces) {
  const Timeline tl = timeline_of_forces(g, initial, forces);
  const PropTime best = pt_of_set(g, initial);
  if (!tl.pt.forcing() || tl.pt != best)
    throw Error(ErrorKind::Precondition, "forces do not realise pt of the initial set");
  const int n = g.order();
  const int pt = tl.pt.value();
  const int rows = initial.size();
  const int columns = pt + 1;
  if (rows * columns > kMaxVertices)
    throw Error(ErrorKind::Capacity, "extension exceeds " + std::to_string(kMaxVertices) + " cells");

  std::vector<int> start(n, 0);
  for (int t = 0; t < static_cast<int>(tl.layers.size()); ++t)
    for (int v : tl.layers[t]) start[v] = t;
  std::vector<int> forced(n, -1);
  for (const Force& f : forces.forces()) forced[f.forcer] = f.target;

  Extension ext;
  ExtensionBlueprint& bp = ext.blueprint;
  bp.rows = rows;
  bp.columns = columns;
  bp.tau.assign(n, 0);
  bp.copies.assign(n, {});
  std::vector<int> row_of(n, -1);
  int row = 0;
  for (int head : initial) {
    std::vector<int> chain;
    for (int v = head; v >= 0; v = forced[v]) {
      chain.push_back(v);
      row_of[v] = row;
      const int stop = forced[v] >= 0 ? start[forced[v]] : columns;
      bp.tau[v] = stop - start[v];
      for (int c = start[v]; c < stop; ++c) bp.copies[v].push_back({row, c});
    }
    bp.chains.push_back(std::move(chain));
    ++row;
  }

  auto index = [columns](GridCell c) { return c.row * columns + c.col; };
  ext.digraph = Digraph(rows * columns);
  for (int v = 0; v < n; ++v)
    for (std::size_t i = 0; i + 1 < bp.copies[v].size(); ++i)
      ext.digraph.add_arc(index(bp.copies[v][i]), index(bp.copies[v][i + 1]));
  for (const auto& [u, v] : g.arcs()) {
    if (row_of[u] == row_of[v]) {
      if (forced[u] == v) {
        ext.digraph.add_arc(index(bp.copies[u].back()), index(bp.copies[v].front()));
      } else {
        // Chains are induced Hessenberg paths, so any other arc points back.
        if (start[v] >= start[u])
          throw Error(ErrorKind::Internal, "forward skip arc inside a forcing chain");
        ext.digraph.add_arc(index(bp.copies[u].front()), index(bp.copies[v].front()));
      }
    } else {
      const GridCell from = bp.copies[u].back();
      const GridCell to = bp.copies[v].front();
      if (to.col > from.col) throw Error(ErrorKind::Internal, "forward cross-chain arc in extension");
      ext.digraph.add_arc(index(from), index(to));
    }
  }
  return ext;
}

bool embeds_in_host(const Digraph& ext, const std::vector<GridCell>& placement, int a, int b) {
  if (a < 1 || b < 0) throw Error(ErrorKind::InvalidArgument, "host needs a >= 1 and b >= 0");
  if (static_cast<int>(placement.size()) != ext.order())
    throw Error(ErrorKind::InvalidArgument, "placement size differs from extension order");
  const int columns = b + 1;
  for (GridCell c : placement)
    if (c.row < 0 || c.row >= a || c.col < 0 || c.col >= columns)
      throw Error(ErrorKind::Range, "cell " + cell_text(c) + " lies outside the host grid");
  const Digraph host = host_graph(a, columns);
  for (const auto& [x, y] : ext.arcs()) {
    const int hx = host_index(placement[x].row, placement[x].col, columns);
    const int hy = host_index(placement[y].row, placement[y].col, columns);
    if (hx == hy || !host.has_arc(hx, hy)) return false;
  }
  return true;
}

bool embeds_in_host(const Extension& ext, int a, int b) {
  std::vector<GridCell> placement;
  for (int r = 0; r < ext.blueprint.rows; ++r)
    for (int c = 0; c < ext.blueprint.columns; ++c) placement.push_back({r, c});
  return embeds_in_host(ext.digraph, placement, a, b);
}

std::optional<CharacterizationWitness> witness_for_throttling(const Digraph& g, int t) {
  if (t < 1) throw Error(ErrorKind::InvalidArgument, "threshold t must be positive");
  const ThrottlingCertificate cert = throttling_number(g);
  if (cert.th > t) return std::nullopt;
  const Extension ext = build_extension(g, cert.initial, cert.forces);
  const ExtensionBlueprint& bp = ext.blueprint;

  CharacterizationWitness w;
  w.a = bp.rows;
  w.b = t - w.a;
  const int columns = w.b + 1;
  if (w.a * columns > kMaxVertices)
    throw Error(ErrorKind::Capacity, "host grid exceeds " + std::to_string(kMaxVertices) + " cells");
  w.placement = bp.copies;

  for (const auto& cells : bp.copies)
    for (std::size_t i = 0; i + 1 < cells.size(); ++i) w.contractions.push_back(cells[i]);
  // Columns past pt hold no vertex; fold them into the last vertex of each row.
  for (int r = 0; r < w.a; ++r)
    for (int c = bp.columns - 1; c < w.b; ++c) w.contractions.push_back({r, c});
  std::sort(w.contractions.begin(), w.contractions.end());

  auto ext_index = [&](GridCell c) { return c.row * bp.columns + c.col; };
  const Digraph host = host_graph(w.a, columns);
  for (const auto& [x, y] : host.arcs()) {
    if (is_host_path_arc(x, y, columns)) continue;
    const GridCell from{x / columns, x % columns};
    const GridCell to{y / columns, y % columns};
    const bool inside = from.col < bp.columns && to.col < bp.columns;
    if (!inside || !ext.digraph.has_arc(ext_index(from), ext_index(to)))
      w.deletions.emplace_back(from, to);
  }
  return w;
}

Digraph apply_witness(const CharacterizationWitness& w) {
  if (w.a < 1 || w.b < 0) throw Error(ErrorKind::Validation, "witness needs a >= 1 and b >= 0");
  const int columns = w.b + 1;
  if (w.a * columns > kMaxVertices)
    throw Error(ErrorKind::Capacity, "host grid exceeds " + std::to_string(kMaxVertices) + " cells");
  auto in_grid = [&](GridCell c) { return c.row >= 0 && c.row < w.a && c.col >= 0 && c.col < columns; };

  Digraph g = host_graph(w.a, columns);
  std::set<std::pair<GridCell, GridCell>> deleted;
  for (const auto& [from, to] : w.deletions) {
    if (!in_grid(from) || !in_grid(to) || from == to)
      throw Error(ErrorKind::Validation, "deletion outside the host grid");
    const int x = host_index(from.row, from.col, columns);
    const int y = host_index(to.row, to.col, columns);
    if (!g.has_arc(x, y) && !deleted.contains({from, to}))
      throw Error(ErrorKind::Validation, "deletion " + cell_text(from) + "->" + cell_text(to) +
                                             " is not a host arc");
    if (is_host_path_arc(x, y, columns))
      throw Error(ErrorKind::Validation, "deletion " + cell_text(from) + "->" + cell_text(to) +
                                             " is a path arc");
    if (!deleted.insert({from, to}).second)
      throw Error(ErrorKind::Validation, "arc deleted twice");
    g.remove_arc(x, y);
  }

  std::vector<int> current(w.a * columns);
  for (int i = 0; i < static_cast<int>(current.size()); ++i) current[i] = i;
  std::set<GridCell> contracted;
  for (GridCell tail : w.contractions) {
    if (!in_grid(tail) || tail.col + 1 >= columns)
      throw Error(ErrorKind::Validation, "contraction " + cell_text(tail) + " is not a path arc");
    if (!contracted.insert(tail).second) throw Error(ErrorKind::Validation, "arc contracted twice");
    const int x = current[host_index(tail.row, tail.col, columns)];
    const int y = current[host_index(tail.row, tail.col + 1, columns)];
    g = contract_arc(g, x, y);
    const int lo = std::min(x, y);
    const int hi = std::max(x, y);
    for (int& c : current) {
      if (c == hi)
        c = lo;
      else if (c > hi)
        --c;
    }
  }
  return g;
}

// ----------------------------------------------------------------- isomorphism

namespace {

struct IsoSearch {
  const Digraph& g1;
  const Digraph& g2;
  std::vector<int> map;       // g1 vertex -> g2 vertex
  std::vector<bool> used;
  std::vector<int> order;     // g1 vertices, most constrained first

  bool consistent(int depth, int v, int image) const {
    for (int i = 0; i < depth; ++i) {
      const int u = order[i];
      const int uu = map[u];
      if (g1.has_arc(u, v) != g2.has_arc(uu, image)) return false;
      if (g1.has_arc(v, u) != g2.has_arc(image, uu)) return false;
    }
    return true;
  }

  bool extend(int depth) {
    if (depth == static_cast<int>(order.size())) return true;
    const int v = order[depth];
    for (int image = 0; image < g2.order(); ++image) {
      if (used[image]) continue;
      if (g1.out(v).size() != g2.out(image).size() || g1.in(v).size() != g2.in(image).size())
        continue;
      if (!consistent(depth, v, image)) continue;
      map[v] = image;
      used[image] = true;
      if (extend(depth + 1)) return true;
      used[image] = false;
    }
    return false;
  }
};

std::vector<std::pair<int, int>> degree_sequence(const Digraph& g) {
  std::vector<std::pair<int, int>> seq;
  for (int v = 0; v < g.order(); ++v) seq.emplace_back(g.in(v).size(), g.out(v).size());
  std::sort(seq.begin(), seq.end());
  return seq;
}

}  // namespace

bool are_isomorphic(const Digraph& g1, const Digraph& g2) {
  if (g1.order() > kIsomorphismCap || g2.order() > kIsomorphismCap)
    throw Error(ErrorKind::Capacity, "isomorphism check limited to " +
                                         std::to_string(kIsomorphismCap) + " vertices");
  if (g1.order() != g2.order() || g1.arc_count() != g2.arc_count()) return false;
  if (degree_sequence(g1) != degree_sequence(g2)) return false;
  IsoSearch search{g1, g2, std::vector<int>(g1.order(), -1), std::vector<bool>(g2.order(), false), {}};
  for (int v = 0; v < g1.order(); ++v) search.order.push_back(v);
  std::stable_sort(search.order.begin(), search.order.end(), [&](int x, int y) {
    return g1.underlying_neighbors(x).size() > g1.underlying_neighbors(y).size();
  });
  return search.extend(0);
}

}  // namespace dthrot
