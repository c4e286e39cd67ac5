#include "dthrot/digraph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <type_traits>

#include "dthrot/error.hpp"

namespace dthrot {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Range: return "range";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Capacity: return "capacity";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

namespace {

void check_order(int n) {
  if (n < 0) throw Error(ErrorKind::Range, "negative vertex count");
  if (n > kMaxVertices)
    throw Error(ErrorKind::Capacity,
                "vertex count " + std::to_string(n) + " exceeds cap " + std::to_string(kMaxVertices));
}

// Position of `v` after deleting vertex `gone` and shifting down.
int shift_down(int v, int gone) { return v > gone ? v - 1 : v; }

std::vector<Edge> unordered_pairs(int n) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return pairs;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_int(std::string_view token, int& out) {
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end;
}

// Shared line parser for both edge-list flavours.
template <typename AddPair>
int parse_lines(std::string_view text, AddPair add_pair) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  int n = -1;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    std::vector<std::string_view> tokens;
    while (!line.empty()) {
      auto sp = line.find_first_of(" \t");
      tokens.push_back(line.substr(0, sp));
      if (sp == std::string_view::npos) break;
      line = trim(line.substr(sp));
    }

    if (n < 0) {
      if (tokens.size() != 1 || !parse_int(tokens[0], n) || n < 0)
        fail("expected vertex count");
      if (n > kMaxVertices) fail("vertex count exceeds cap " + std::to_string(kMaxVertices));
      continue;
    }
    int u = 0;
    int v = 0;
    if (tokens.size() != 2 || !parse_int(tokens[0], u) || !parse_int(tokens[1], v))
      fail("expected \"u v\"");
    if (u < 0 || u >= n || v < 0 || v >= n) fail("vertex out of range");
    if (u == v) fail("self-loop");
    add_pair(n, u, v);
  }
  if (n < 0) throw Error(ErrorKind::Parse, "line " + std::to_string(line_no + 1) + ": missing vertex count");
  return n;
}

}  // namespace

// ---------------------------------------------------------------- Digraph

Digraph::Digraph(int n) : n_(n) {
  check_order(n);
  out_.resize(n);
  in_.resize(n);
}

void Digraph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw Error(ErrorKind::Range, "vertex " + std::to_string(v) + " out of range for order " +
                                      std::to_string(n_));
}

void Digraph::add_arc(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(ErrorKind::Precondition, "self-loop at vertex " + std::to_string(u));
  out_[u].insert(v);
  in_[v].insert(u);
}

void Digraph::remove_arc(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  out_[u].erase(v);
  in_[v].erase(u);
}

int Digraph::arc_count() const {
  int total = 0;
  for (auto row : out_) total += row.size();
  return total;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  for (int u = 0; u < n_; ++u)
    for (int v : out_[u]) result.emplace_back(u, v);
  return result;
}

VertexSet Digraph::sources() const {
  VertexSet s;
  for (int v = 0; v < n_; ++v)
    if (in_[v].empty()) s.insert(v);
  return s;
}

VertexSet Digraph::sinks() const {
  VertexSet s;
  for (int v = 0; v < n_; ++v)
    if (out_[v].empty()) s.insert(v);
  return s;
}

// -------------------------------------------------------- UndirectedGraph

UndirectedGraph::UndirectedGraph(int n) : n_(n) {
  check_order(n);
  adj_.resize(n);
}

void UndirectedGraph::add_edge(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw Error(ErrorKind::Range, "edge endpoint out of range");
  if (u == v) throw Error(ErrorKind::Precondition, "self-loop at vertex " + std::to_string(u));
  adj_[u].insert(v);
  adj_[v].insert(u);
}

int UndirectedGraph::edge_count() const {
  int total = 0;
  for (auto row : adj_) total += row.size();
  return total / 2;
}

std::vector<Edge> UndirectedGraph::edges() const {
  std::vector<Edge> result;
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) result.emplace_back(u, v);
  return result;
}

bool UndirectedGraph::is_connected() const {
  if (n_ == 0) return true;
  VertexSet seen = VertexSet::single(0);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= adj_[v];
    frontier = next - seen;
    seen |= next;
  }
  return seen == VertexSet::range(n_);
}

// ------------------------------------------------------------- text I/O

Digraph parse_edge_list(std::string_view text) {
  std::vector<Arc> arcs;
  const int n = parse_lines(text, [&](int, int u, int v) { arcs.emplace_back(u, v); });
  Digraph g(n);
  for (auto [u, v] : arcs) g.add_arc(u, v);
  return g;
}

UndirectedGraph parse_undirected_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  const int n = parse_lines(text, [&](int, int u, int v) { edges.emplace_back(u, v); });
  UndirectedGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::string to_edge_list(const Digraph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (auto [u, v] : g.arcs()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string to_edge_list(const UndirectedGraph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

namespace {

template <typename Graph>
Graph parse_compact_impl(std::string_view text, char separator) {
  const auto colon = text.find(':');
  int n = 0;
  if (!parse_int(colon == std::string_view::npos ? text : text.substr(0, colon), n) || n < 0)
    throw Error(ErrorKind::Parse, "compact graph: bad vertex count in \"" + std::string(text) + "\"");
  Graph g(n);
  if (colon == std::string_view::npos) return g;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    const auto sep = item.find(separator);
    int u = 0;
    int v = 0;
    if (sep == std::string_view::npos || !parse_int(item.substr(0, sep), u) ||
        !parse_int(item.substr(sep + 1), v))
      throw Error(ErrorKind::Parse, "compact graph: bad pair \"" + std::string(item) + "\"");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error(ErrorKind::Parse, "compact graph: vertex out of range in \"" + std::string(item) + "\"");
    if (u == v) throw Error(ErrorKind::Parse, "compact graph: self-loop");
    if constexpr (std::is_same_v<Graph, Digraph>)
      g.add_arc(u, v);
    else
      g.add_edge(u, v);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return g;
}

}  // namespace

std::string to_compact(const Digraph& g) {
  std::string out = std::to_string(g.order());
  char sep = ':';
  for (auto [u, v] : g.arcs()) {
    out += sep;
    out += std::to_string(u) + '>' + std::to_string(v);
    sep = ',';
  }
  return out;
}

Digraph parse_compact(std::string_view text) { return parse_compact_impl<Digraph>(text, '>'); }

std::string to_compact(const UndirectedGraph& g) {
  std::string out = std::to_string(g.order());
  char sep = ':';
  for (auto [u, v] : g.edges()) {
    out += sep;
    out += std::to_string(u) + '-' + std::to_string(v);
    sep = ',';
  }
  return out;
}

UndirectedGraph parse_compact_undirected(std::string_view text) {
  return parse_compact_impl<UndirectedGraph>(text, '-');
}

// ---------------------------------------------------- structural operations

Digraph to_double_arc(const UndirectedGraph& g) {
  Digraph d(g.order());
  for (auto [u, v] : g.edges()) {
    d.add_arc(u, v);
    d.add_arc(v, u);
  }
  return d;
}

UndirectedGraph underlying_graph(const Digraph& g) {
  UndirectedGraph u(g.order());
  for (auto [a, b] : g.arcs()) u.add_edge(a, b);
  return u;
}

Digraph transpose(const Digraph& g) {
  Digraph t(g.order());
  for (auto [u, v] : g.arcs()) t.add_arc(v, u);
  return t;
}

Digraph flip_arc(const Digraph& g, int u, int v) {
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order() || !g.has_arc(u, v))
    throw Error(ErrorKind::Precondition,
                "flip_arc: arc (" + std::to_string(u) + "," + std::to_string(v) + ") absent");
  if (g.has_arc(v, u))
    throw Error(ErrorKind::Precondition,
                "flip_arc: reverse arc (" + std::to_string(v) + "," + std::to_string(u) + ") present");
  Digraph result = g;
  result.remove_arc(u, v);
  result.add_arc(v, u);
  return result;
}

Digraph contract_arc(const Digraph& g, int u, int v) {
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order() || !g.has_arc(u, v))
    throw Error(ErrorKind::Precondition,
                "contract_arc: arc (" + std::to_string(u) + "," + std::to_string(v) + ") absent");
  const int keep = std::min(u, v);
  const int gone = std::max(u, v);
  auto image = [&](int x) { return shift_down(x == gone ? keep : x, gone); };
  Digraph result(g.order() - 1);
  for (auto [a, b] : g.arcs()) {
    const int ia = image(a);
    const int ib = image(b);
    if (ia != ib) result.add_arc(ia, ib);
  }
  return result;
}

Digraph disjoint_union(const Digraph& a, const Digraph& b) {
  Digraph result(a.order() + b.order());
  for (auto [u, v] : a.arcs()) result.add_arc(u, v);
  const int shift = a.order();
  for (auto [u, v] : b.arcs()) result.add_arc(u + shift, v + shift);
  return result;
}

Digraph delete_vertex(const Digraph& g, int v) {
  if (v < 0 || v >= g.order())
    throw Error(ErrorKind::Range, "delete_vertex: vertex " + std::to_string(v) + " out of range");
  Digraph result(g.order() - 1);
  for (auto [a, b] : g.arcs())
    if (a != v && b != v) result.add_arc(shift_down(a, v), shift_down(b, v));
  return result;
}

Digraph add_vertex(const Digraph& g, VertexSet in_from, VertexSet out_to) {
  const int n = g.order();
  if (!in_from.subset_of(g.vertices()) || !out_to.subset_of(g.vertices()))
    throw Error(ErrorKind::Range, "add_vertex: arc endpoint out of range");
  Digraph result(n + 1);
  for (auto [a, b] : g.arcs()) result.add_arc(a, b);
  for (int u : in_from) result.add_arc(u, n);
  for (int w : out_to) result.add_arc(n, w);
  return result;
}

Digraph induced_subgraph(const Digraph& g, VertexSet keep) {
  std::vector<int> index(g.order(), -1);
  int next = 0;
  for (int v : keep) index[v] = next++;
  Digraph result(next);
  for (auto [a, b] : g.arcs())
    if (index[a] >= 0 && index[b] >= 0) result.add_arc(index[a], index[b]);
  return result;
}

bool is_oriented(const Digraph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (!(g.out(v) & g.in(v)).empty()) return false;
  return true;
}

bool is_tournament(const Digraph& g) {
  if (!is_oriented(g)) return false;
  for (int v = 0; v < g.order(); ++v)
    if (g.underlying_neighbors(v) != g.vertices() - VertexSet::single(v)) return false;
  return true;
}

// --------------------------------------------------------- enumerations

Orientations::Orientations(const UndirectedGraph& g) : n_(g.order()), edges_(g.edges()) {
  if (static_cast<int>(edges_.size()) > kOrientationEdgeCap)
    throw Error(ErrorKind::Capacity, "orientation enumeration: " + std::to_string(edges_.size()) +
                                         " edges exceeds cap " + std::to_string(kOrientationEdgeCap));
}

Digraph Orientations::at(std::uint64_t index) const {
  if (index >= count()) throw Error(ErrorKind::Range, "orientation index out of range");
  Digraph d(n_);
  for (std::size_t j = 0; j < edges_.size(); ++j) {
    auto [u, v] = edges_[j];
    if ((index >> j) & 1U)
      d.add_arc(v, u);
    else
      d.add_arc(u, v);
  }
  return d;
}

DigraphCensus::DigraphCensus(int n, bool oriented_only)
    : n_(n), oriented_(oriented_only), pairs_(unordered_pairs(n)), count_(1) {
  const int cap = oriented_only ? kCensusCap + 1 : kCensusCap;
  if (n < 0) throw Error(ErrorKind::Range, "census: negative order");
  if (n > cap)
    throw Error(ErrorKind::Capacity,
                "census: order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  const std::uint64_t base = oriented_ ? 3 : 4;
  for (std::size_t i = 0; i < pairs_.size(); ++i) count_ *= base;
}

Digraph DigraphCensus::at(std::uint64_t index) const {
  if (index >= count_) throw Error(ErrorKind::Range, "census index out of range");
  const std::uint64_t base = oriented_ ? 3 : 4;
  Digraph d(n_);
  for (auto [u, v] : pairs_) {
    const auto state = index % base;
    index /= base;
    if (state & 1U) d.add_arc(u, v);
    if (state & 2U) d.add_arc(v, u);
  }
  return d;
}

std::vector<UndirectedGraph> undirected_census(int n, bool connected_only) {
  const auto pairs = unordered_pairs(n);
  if (pairs.size() > 28) throw Error(ErrorKind::Capacity, "undirected census: order too large");
  std::vector<UndirectedGraph> result;
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    UndirectedGraph g(n);
    for (std::size_t j = 0; j < pairs.size(); ++j)
      if ((mask >> j) & 1U) g.add_edge(pairs[j].first, pairs[j].second);
    if (!connected_only || g.is_connected()) result.push_back(std::move(g));
  }
  return result;
}

namespace {

int max_independent(const UndirectedGraph& g, VertexSet candidates) {
  if (candidates.empty()) return 0;
  // Vertices with no neighbour among the candidates join every maximum set.
  int forced = 0;
  VertexSet rest;
  for (int v : candidates) {
    if ((g.neighbors(v) & candidates).empty())
      ++forced;
    else
      rest.insert(v);
  }
  if (rest.empty()) return forced;
  int branch = rest.first();
  for (int v : rest)
    if ((g.neighbors(v) & rest).size() > (g.neighbors(branch) & rest).size()) branch = v;
  const int with = 1 + max_independent(g, rest - g.neighbors(branch) - VertexSet::single(branch));
  const int without = max_independent(g, rest - VertexSet::single(branch));
  return forced + std::max(with, without);
}

}  // namespace

int independence_number(const UndirectedGraph& g) { return max_independent(g, VertexSet::range(g.order())); }

}  // namespace dthrot
