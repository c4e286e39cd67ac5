#include "dthrot/families.hpp"

#include <charconv>

#include "dthrot/error.hpp"
#include "dthrot/int_math.hpp"

namespace dthrot {

namespace {

struct FamilyName {
  const char* name;
  Family family;
  int min_params;
  int max_params;
};

constexpr FamilyName kFamilies[] = {
    {"host", Family::Host, 2, 2},
    {"hessenberg", Family::Hessenberg, 1, 2},
    {"altpath", Family::AlternatingPath, 1, 2},
    {"onedirpath", Family::OneDirectionalPath, 1, 1},
    {"tmax", Family::TournamentMax, 1, 1},
    {"tmin", Family::TournamentMin, 1, 1},
    {"double", Family::DoubleArcOf, 0, 0},
    {"path", Family::Path, 1, 1},
    {"cycle", Family::Cycle, 1, 1},
    {"complete", Family::Complete, 1, 1},
    {"star", Family::Star, 1, 1},
    {"dstar", Family::DoubleStar, 2, 2},
    {"augdstar", Family::AugmentedDoubleStar, 2, 2},
};

const FamilyName& lookup(Family f) {
  for (const auto& entry : kFamilies)
    if (entry.family == f) return entry;
  throw Error(ErrorKind::Internal, "unknown family tag");
}

[[noreturn]] void invalid(const FamilySpec& spec, const std::string& why) {
  throw Error(ErrorKind::InvalidArgument, "family " + spec.to_string() + ": " + why);
}

void require(bool ok, const FamilySpec& spec, const char* why) {
  if (!ok) invalid(spec, why);
}

int vertex_count_param(const FamilySpec& spec, long long value, long long min) {
  require(value >= min, spec, "parameter below minimum");
  require(value <= kMaxVertices, spec, "vertex count exceeds cap");
  return static_cast<int>(value);
}

}  // namespace

bool FamilySpec::is_undirected() const {
  switch (family) {
    case Family::Path:
    case Family::Cycle:
    case Family::Complete:
    case Family::Star:
    case Family::DoubleStar:
    case Family::AugmentedDoubleStar:
      return true;
    default:
      return false;
  }
}

std::string FamilySpec::to_string() const {
  std::string out = lookup(family).name;
  out += ':';
  if (family == Family::DoubleArcOf) return out + inner;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(params[i]);
  }
  return out;
}

FamilySpec parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw Error(ErrorKind::Parse, "family spec \"" + std::string(text) + "\" lacks ':'");
  const std::string_view name = text.substr(0, colon);
  const std::string_view rest = text.substr(colon + 1);
  for (const auto& entry : kFamilies) {
    if (name != entry.name) continue;
    FamilySpec spec{entry.family, {}, {}};
    if (entry.family == Family::DoubleArcOf) {
      spec.inner = std::string(rest);
      if (!parse_family_spec(rest).is_undirected())
        throw Error(ErrorKind::InvalidArgument, "double: needs an undirected family");
      return spec;
    }
    std::string_view params = rest;
    while (!params.empty()) {
      const auto comma = params.find(',');
      const std::string_view token = params.substr(0, comma);
      long long value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size())
        throw Error(ErrorKind::Parse, "family spec \"" + std::string(text) + "\": bad integer \"" +
                                          std::string(token) + "\"");
      spec.params.push_back(value);
      if (comma == std::string_view::npos) break;
      params = params.substr(comma + 1);
    }
    const int count = static_cast<int>(spec.params.size());
    if (count < entry.min_params || count > entry.max_params)
      throw Error(ErrorKind::Parse, "family spec \"" + std::string(text) + "\": wrong parameter count");
    return spec;
  }
  throw Error(ErrorKind::Parse, "unknown family \"" + std::string(name) + "\"");
}

GeneratedGraph generate(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::Host: {
      require(p[0] >= 1, spec, "need a >= 1");
      require(p[1] >= 1, spec, "need at least one column");
      require(p[0] * p[1] <= kMaxVertices, spec, "vertex count exceeds cap");
      return host_graph(static_cast<int>(p[0]), static_cast<int>(p[1]));
    }
    case Family::Hessenberg: {
      const int n = vertex_count_param(spec, p[0], 1);
      if (p.size() == 2) {
        require(p[1] >= 0, spec, "mask must be non-negative");
        require(static_cast<long long>(n) * (n - 1) / 2 <= 62, spec, "mask form needs n <= 11");
        return hessenberg_path(n, static_cast<std::uint64_t>(p[1]));
      }
      return hessenberg_path(n);
    }
    case Family::AlternatingPath: {
      const int n = vertex_count_param(spec, p[0], 1);
      const bool flip = p.size() == 2 && p[1] != 0;
      return alternating_path(n, flip);
    }
    case Family::OneDirectionalPath:
      return one_directional_path(vertex_count_param(spec, p[0], 1));
    case Family::TournamentMax:
      return tournament_max(vertex_count_param(spec, p[0], 1));
    case Family::TournamentMin:
      return tournament_min(vertex_count_param(spec, p[0], 1));
    case Family::DoubleArcOf:
      return to_double_arc(std::get<UndirectedGraph>(generate(parse_family_spec(spec.inner))));
    case Family::Path:
      return path_graph(vertex_count_param(spec, p[0], 1));
    case Family::Cycle:
      return cycle_graph(vertex_count_param(spec, p[0], 3));
    case Family::Complete:
      return complete_graph(vertex_count_param(spec, p[0], 1));
    case Family::Star:
      return star_graph(vertex_count_param(spec, p[0], 2));
    case Family::DoubleStar:
    case Family::AugmentedDoubleStar: {
      require(p[0] >= 1 && p[1] >= 1, spec, "leaf counts must be >= 1");
      require(p[0] + p[1] + 3 <= kMaxVertices, spec, "vertex count exceeds cap");
      const int s = static_cast<int>(p[0]);
      const int t = static_cast<int>(p[1]);
      return spec.family == Family::DoubleStar ? double_star(s, t) : augmented_double_star(s, t);
    }
  }
  throw Error(ErrorKind::Internal, "unhandled family");
}

GeneratedGraph generate(std::string_view spec) { return generate(parse_family_spec(spec)); }

Digraph generate_digraph(std::string_view spec) {
  auto g = generate(spec);
  if (auto* u = std::get_if<UndirectedGraph>(&g)) return to_double_arc(*u);
  return std::get<Digraph>(std::move(g));
}

UndirectedGraph generate_undirected(std::string_view spec) {
  auto g = generate(spec);
  if (auto* u = std::get_if<UndirectedGraph>(&g)) return std::move(*u);
  throw Error(ErrorKind::InvalidArgument, "family \"" + std::string(spec) + "\" is not undirected");
}

// ----------------------------------------------------------- host digraph

bool is_host_path_arc(int from, int to, int columns) {
  return from / columns == to / columns && to == from + 1 && to % columns != 0;
}

Digraph host_graph(int rows, int columns) {
  if (rows < 1 || columns < 1)
    throw Error(ErrorKind::InvalidArgument, "host graph needs a >= 1 and at least one column");
  Digraph h(rows * columns);
  for (int r1 = 0; r1 < rows; ++r1)
    for (int c1 = 0; c1 < columns; ++c1)
      for (int r2 = 0; r2 < rows; ++r2)
        for (int c2 = 0; c2 < columns; ++c2) {
          if (r1 == r2 && c1 == c2) continue;
          // Keep vertical, backward, and in-row successor arcs.
          const bool keep = c2 <= c1 || (r1 == r2 && c2 == c1 + 1);
          if (keep) h.add_arc(host_index(r1, c1, columns), host_index(r2, c2, columns));
        }
  return h;
}

// ------------------------------------------------------------ digraph families

Digraph hessenberg_path(int n, std::uint64_t back_mask) {
  Digraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_arc(i, i + 1);
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j, ++k)
      if (k >= 64 || ((back_mask >> k) & 1U)) g.add_arc(i, j);
  return g;
}

Digraph alternating_path(int n, bool flip) {
  Digraph g(n);
  // Odd positions are sources.
  for (int i = 0; i + 1 < n; ++i) {
    const int source = (i % 2 == 1) ? i : i + 1;
    const int sink = (i % 2 == 1) ? i + 1 : i;
    if (flip)
      g.add_arc(sink, source);
    else
      g.add_arc(source, sink);
  }
  return g;
}

Digraph one_directional_path(int n) {
  Digraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_arc(i, i + 1);
  return g;
}

Digraph tournament_max(int n) {
  Digraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) g.add_arc(i, j);
  return g;
}

Digraph tournament_min(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "tmin needs n >= 1");
  const int m = static_cast<int>(isqrt(static_cast<std::uint64_t>(n)));
  const int r = n - m * m;
  const int k = r == 0 ? 0 : (r <= m ? 1 : 2);
  const int rows = m + k;
  const int cols = m;
  const int contractions = rows * cols - n;
  const int top = rows - 1;

  // Contracting the leftmost top-row path arcs merges cells (top,0..c).
  const int cells = rows * cols;
  std::vector<int> group(cells);
  std::vector<int> group_row;
  int next = 0;
  for (int cell = 0; cell < cells; ++cell) {
    const int row = cell / cols;
    const int col = cell % cols;
    if (row == top && col > 0 && col <= contractions) {
      group[cell] = group[host_index(top, 0, cols)];
      continue;
    }
    group[cell] = next++;
    group_row.push_back(row);
  }
  if (next != n) throw Error(ErrorKind::Internal, "tmin: vertex count mismatch");

  const Digraph host = host_graph(rows, cols);
  Digraph quotient(n);
  Digraph path_image(n);
  for (auto [a, b] : host.arcs()) {
    const int ga = group[a];
    const int gb = group[b];
    if (ga == gb) continue;
    quotient.add_arc(ga, gb);
    if (is_host_path_arc(a, b, cols)) path_image.add_arc(ga, gb);
  }

  // One arc per pair: a surviving path arc wins, otherwise the downward arc.
  Digraph result(n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      const bool xy = quotient.has_arc(x, y);
      const bool yx = quotient.has_arc(y, x);
      if (!xy && !yx) throw Error(ErrorKind::Internal, "tmin: quotient is not complete");
      if (xy && !yx) {
        result.add_arc(x, y);
      } else if (yx && !xy) {
        result.add_arc(y, x);
      } else if (path_image.has_arc(x, y)) {
        result.add_arc(x, y);
      } else if (path_image.has_arc(y, x)) {
        result.add_arc(y, x);
      } else if (group_row[x] != group_row[y]) {
        if (group_row[x] > group_row[y])
          result.add_arc(x, y);
        else
          result.add_arc(y, x);
      } else {
        throw Error(ErrorKind::Internal, "tmin: unresolved double arc inside a row");
      }
    }
  return result;
}

// ---------------------------------------------------------- undirected families

UndirectedGraph path_graph(int n) {
  UndirectedGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

UndirectedGraph cycle_graph(int n) {
  UndirectedGraph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

UndirectedGraph complete_graph(int n) {
  UndirectedGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

UndirectedGraph star_graph(int n) {
  UndirectedGraph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(0, i);
  return g;
}

UndirectedGraph double_star(int s, int t) {
  UndirectedGraph g(s + t + 2);
  g.add_edge(0, 1);
  for (int i = 0; i < s; ++i) g.add_edge(0, 2 + i);
  for (int i = 0; i < t; ++i) g.add_edge(1, 2 + s + i);
  return g;
}

UndirectedGraph augmented_double_star(int s, int t) {
  UndirectedGraph g(s + t + 3);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  for (int i = 0; i < s; ++i) g.add_edge(0, 3 + i);
  for (int i = 0; i < t; ++i) g.add_edge(1, 3 + s + i);
  return g;
}

}  // namespace dthrot
