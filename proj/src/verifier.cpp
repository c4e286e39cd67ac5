#include "dthrot/verifier.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <chrono>
#include <functional>
#include <random>
#include <tuple>
#include <string>
#include <utility>
#include <variant>

#include "dthrot/characterization.hpp"
#include "dthrot/error.hpp"
#include "dthrot/families.hpp"
#include "dthrot/forcing.hpp"
#include "dthrot/int_math.hpp"
#include "parallel.hpp"
#include "subsets.hpp"

namespace dthrot {

// ---------------------------------------------------------------- closed forms

ClosedForm parse_closed_form(std::string_view name) {
  if (name == "alt_odd") return ClosedForm::AltOdd;
  if (name == "alt_even") return ClosedForm::AltEven;
  if (name == "alt_even_ub") return ClosedForm::AltEvenUb;
  if (name == "alt_even_lb") return ClosedForm::AltEvenLb;
  if (name == "floor_2sqrt") return ClosedForm::Floor2Sqrt;
  throw Error(ErrorKind::InvalidArgument, "unknown closed form '" + std::string(name) + "'");
}

const char* to_string(ClosedForm form) {
  switch (form) {
    case ClosedForm::AltOdd: return "alt_odd";
    case ClosedForm::AltEven: return "alt_even";
    case ClosedForm::AltEvenUb: return "alt_even_ub";
    case ClosedForm::AltEvenLb: return "alt_even_lb";
    case ClosedForm::Floor2Sqrt: return "floor_2sqrt";
  }
  return "?";
}

ClosedFormParams ClosedFormParams::of(long long n) {
  if (n < 1) throw Error(ErrorKind::Domain, "closed form parameters need n >= 1");
  ClosedFormParams params;
  params.n = n;
  params.p = (std::sqrt(static_cast<double>(n + 1)) - 1) / 2;
  params.m = static_cast<long long>(isqrt(static_cast<std::uint64_t>(n)));
  params.r = n - params.m * params.m;
  params.k = params.r == 0 ? 0 : (params.r <= params.m ? 1 : 2);
  return params;
}

namespace {

/// Least c >= 0 with (2c + 1)^2 >= x, i.e. ceil(sqrt(x) / 2 - 1 / 2).
long long least_odd_root(long long x) {
  long long c = 0;
  while ((2 * c + 1) * (2 * c + 1) < x) ++c;
  return c;
}

}  // namespace

long long closed_form(ClosedForm form, long long n) {
  if (n < 1) throw Error(ErrorKind::Domain, "closed form needs n >= 1");
  const bool even = n % 2 == 0;
  if (form == ClosedForm::AltOdd && even)
    throw Error(ErrorKind::Domain, "alt_odd needs odd n, got " + std::to_string(n));
  if ((form == ClosedForm::AltEven || form == ClosedForm::AltEvenUb || form == ClosedForm::AltEvenLb) &&
      !even)
    throw Error(ErrorKind::Domain, std::string(to_string(form)) + " needs even n, got " + std::to_string(n));
  switch (form) {
    case ClosedForm::AltOdd:
      // ceil(sqrt(n+1) - 1/2) = least c with (2c+1)^2 >= 4(n+1)
      return (n - 1) / 2 + least_odd_root(4 * (n + 1));
    case ClosedForm::AltEven:
    case ClosedForm::AltEvenLb:
      // ceil(sqrt(n+1) - 1) and ceil(2p) coincide
      return n / 2 + static_cast<long long>(ceil_sqrt(static_cast<std::uint64_t>(n + 1))) - 1;
    case ClosedForm::AltEvenUb: {
      const long long cp = least_odd_root(n + 1);  // ceil(p)
      return n / 2 + ceil_div(n / 2 - cp, 2 * cp + 1) + cp;
    }
    case ClosedForm::Floor2Sqrt:
      return throttling_floor(n);
  }
  throw Error(ErrorKind::Internal, "unhandled closed form");
}

// --------------------------------------------------------------------- scopes

namespace {

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw Error(ErrorKind::Parse, "scope: bad " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

}  // namespace

std::string Scope::to_string() const {
  switch (kind) {
    case Kind::Census: return "census:" + std::to_string(hi);
    case Kind::Range: return "range:" + std::to_string(lo) + ".." + std::to_string(hi);
    case Kind::Random: return "random:" + std::to_string(hi) + ":" + std::to_string(count);
    case Kind::Family: return "family:" + family;
  }
  return "?";
}

Scope parse_scope(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw Error(ErrorKind::Parse, "scope: missing ':' in '" + std::string(text) + "'");
  const std::string_view kind = text.substr(0, colon);
  const std::string_view rest = text.substr(colon + 1);
  Scope scope;
  if (kind == "census") {
    scope.kind = Scope::Kind::Census;
    scope.lo = scope.hi = parse_int(rest, "order");
  } else if (kind == "range") {
    scope.kind = Scope::Kind::Range;
    const auto dots = rest.find("..");
    if (dots == std::string_view::npos) throw Error(ErrorKind::Parse, "scope: range needs A..B");
    scope.lo = parse_int(rest.substr(0, dots), "range start");
    scope.hi = parse_int(rest.substr(dots + 2), "range end");
    if (scope.lo > scope.hi) throw Error(ErrorKind::Parse, "scope: empty range");
  } else if (kind == "random") {
    scope.kind = Scope::Kind::Random;
    const auto sep = rest.find(':');
    if (sep == std::string_view::npos) throw Error(ErrorKind::Parse, "scope: random needs N:COUNT");
    scope.lo = 1;
    scope.hi = parse_int(rest.substr(0, sep), "order");
    const int count = parse_int(rest.substr(sep + 1), "count");
    if (count < 1) throw Error(ErrorKind::Parse, "scope: random count must be positive");
    scope.count = static_cast<std::uint64_t>(count);
  } else if (kind == "family") {
    scope.kind = Scope::Kind::Family;
    scope.family = std::string(rest);
    parse_family_spec(scope.family);
  } else {
    throw Error(ErrorKind::Parse, "scope: unknown kind '" + std::string(kind) + "'");
  }
  if (scope.kind != Scope::Kind::Family && (scope.lo < 0 || scope.hi < 0))
    throw Error(ErrorKind::Parse, "scope: negative order");
  if (scope.kind == Scope::Kind::Random && (scope.hi < 1 || scope.hi > kMaxVertices))
    throw Error(ErrorKind::Parse, "scope: random order must lie in 1..64");
  return scope;
}

namespace {

/// Independent stream per (seed, index) so sharded runs agree with serial ones.
std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

Digraph random_digraph(std::mt19937_64& rng, int n) {
  Digraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const auto state = below(rng, 4);
      if (state & 1U) g.add_arc(u, v);
      if (state & 2U) g.add_arc(v, u);
    }
  return g;
}

UndirectedGraph random_connected_graph(std::mt19937_64& rng, int n) {
  while (true) {
    UndirectedGraph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (below(rng, 2)) g.add_edge(u, v);
    if (g.is_connected()) return g;
  }
}

void append_orientations(std::vector<Digraph>& out, const UndirectedGraph& g) {
  const Orientations o(g);
  for (std::uint64_t i = 0; i < o.count(); ++i) out.push_back(o.at(i));
}

void append_census(std::vector<Digraph>& out, int n) {
  const DigraphCensus census(n);
  for (std::uint64_t i = 0; i < census.count(); ++i) out.push_back(census.at(i));
}

}  // namespace

std::vector<Digraph> scope_digraphs(const Scope& scope, std::uint64_t seed) {
  std::vector<Digraph> out;
  switch (scope.kind) {
    case Scope::Kind::Census:
      append_census(out, scope.hi);
      break;
    case Scope::Kind::Range:
      for (int n = scope.lo; n <= scope.hi; ++n) append_census(out, n);
      break;
    case Scope::Kind::Random:
      for (std::uint64_t i = 0; i < scope.count; ++i) {
        auto rng = instance_rng(seed, i);
        const int n = 1 + static_cast<int>(below(rng, static_cast<std::uint64_t>(scope.hi)));
        out.push_back(random_digraph(rng, n));
      }
      break;
    case Scope::Kind::Family: {
      auto g = generate(scope.family);
      if (auto* u = std::get_if<UndirectedGraph>(&g))
        append_orientations(out, *u);
      else
        out.push_back(std::get<Digraph>(std::move(g)));
      break;
    }
  }
  return out;
}

namespace {

std::vector<UndirectedGraph> scope_graphs(const Scope& scope, std::uint64_t seed) {
  std::vector<UndirectedGraph> out;
  switch (scope.kind) {
    case Scope::Kind::Census:
    case Scope::Kind::Range:
      for (int n = scope.lo; n <= scope.hi; ++n) {
        auto part = undirected_census(n, true);
        out.insert(out.end(), part.begin(), part.end());
      }
      break;
    case Scope::Kind::Random:
      for (std::uint64_t i = 0; i < scope.count; ++i) {
        auto rng = instance_rng(seed, i);
        const int n = 1 + static_cast<int>(below(rng, static_cast<std::uint64_t>(scope.hi)));
        out.push_back(random_connected_graph(rng, n));
      }
      break;
    case Scope::Kind::Family:
      out.push_back(generate_undirected(scope.family));
      break;
  }
  return out;
}

// ------------------------------------------------------------- suite harness

struct InstanceResult {
  std::vector<SuiteFailure> failures;
  std::vector<std::pair<std::string, long long>> stats;

  void fail(std::string instance, std::string relation, std::string observed) {
    failures.push_back({std::move(instance), std::move(relation), std::move(observed)});
  }
  void add(std::string key, long long value = 1) { stats.emplace_back(std::move(key), value); }
};

template <typename Instance>
using Check = std::function<void(const Instance&, std::uint64_t, InstanceResult&)>;

template <typename Instance>
void run_checks(SuiteReport& report, const std::vector<Instance>& instances, int threads,
                const Check<Instance>& check) {
  std::vector<InstanceResult> results(instances.size());
  detail::parallel_for(0, instances.size(), threads,
                       [&](std::uint64_t i) { check(instances[i], i, results[i]); });
  report.instances += instances.size();
  for (auto& r : results) {
    for (auto& f : r.failures) report.failures.push_back(std::move(f));
    for (auto& [key, value] : r.stats) report.stats[key] += value;
  }
}

int th(const Digraph& g) { return throttling_number(g).th; }

std::string str(long long v) { return std::to_string(v); }

std::string pair_text(const char* a, long long x, const char* b, long long y) {
  return std::string(a) + "=" + str(x) + " " + b + "=" + str(y);
}

std::string arc_text(int u, int v) { return "(" + str(u) + "," + str(v) + ")"; }

// One-way arcs only: flipping requires the reverse arc to be absent.
std::vector<Arc> flippable_arcs(const Digraph& g) {
  std::vector<Arc> arcs;
  for (const auto& [u, v] : g.arcs())
    if (!g.has_arc(v, u)) arcs.emplace_back(u, v);
  return arcs;
}

// Digraph checks --------------------------------------------------------------

void check_transpose(const Digraph& g, std::uint64_t, InstanceResult& r) {
  const int a = th(g);
  const int b = th(transpose(g));
  if (a != b) r.fail(to_compact(g), "th(G) == th(G^T)", pair_text("th", a, "th_T", b));
}

void check_arcflip(const Digraph& g, std::uint64_t, InstanceResult& r) {
  const int base = th(g);
  for (const auto& [u, v] : flippable_arcs(g)) {
    const int flipped = th(flip_arc(g, u, v));
    r.add("flips");
    if (std::abs(flipped - base) > 1)
      r.fail(to_compact(g), "|th(flip " + arc_text(u, v) + ") - th| <= 1", pair_text("th", base, "flipped", flipped));
  }
}

void check_flip_increase(const Digraph& g, std::uint64_t, InstanceResult& r) {
  const int base = th(g);
  for (const auto& [u, v] : flippable_arcs(g)) {
    const int flipped = th(flip_arc(g, u, v));
    r.add("flips");
    if (flipped > base + 1)
      r.fail(to_compact(g), "th(flip " + arc_text(u, v) + ") <= th + 1", pair_text("th", base, "flipped", flipped));
  }
}

void check_sourcesink(const Digraph& g, std::uint64_t, InstanceResult& r) {
  const VertexSet sources = g.sources();
  const VertexSet sinks = g.sinks();
  int base = -1;
  for (const auto& [u, v] : g.arcs()) {
    if (!sources.contains(u) || !sinks.contains(v)) continue;
    if (base < 0) base = th(g);
    const int flipped = th(flip_arc(g, u, v));
    r.add("flips");
    if (flipped > base)
      r.fail(to_compact(g), "th(flip source-sink " + arc_text(u, v) + ") <= th",
             pair_text("th", base, "flipped", flipped));
  }
}

void check_pathinterior(const Digraph& g, std::uint64_t, InstanceResult& r) {
  auto interior = [&](int v) { return g.in(v).size() == 1 && g.out(v).size() == 1; };
  int base = -1;
  for (const auto& [u, v] : flippable_arcs(g)) {
    if (!interior(u) || !interior(v)) continue;
    if (base < 0) base = th(g);
    const int flipped = th(flip_arc(g, u, v));
    r.add("flips");
    if (flipped < base)
      r.fail(to_compact(g), "th(flip interior " + arc_text(u, v) + ") >= th",
             pair_text("th", base, "flipped", flipped));
  }
}

constexpr int kVertexAddExhaustive = 4;
constexpr int kVertexAddSamples = 8;

void check_vertexpm(const Digraph& g, std::uint64_t seed, std::uint64_t index, InstanceResult& r) {
  const int base = th(g);
  const int n = g.order();
  for (int v = 0; v < n; ++v) {
    const int smaller = th(delete_vertex(g, v));
    r.add("deletions");
    if (std::abs(smaller - base) > 1)
      r.fail(to_compact(g), "|th(delete " + str(v) + ") - th| <= 1", pair_text("th", base, "deleted", smaller));
  }
  auto try_add = [&](VertexSet in_from, VertexSet out_to) {
    const int larger = th(add_vertex(g, in_from, out_to));
    r.add("additions");
    if (std::abs(larger - base) > 1)
      r.fail(to_compact(g), "|th(add in=" + str(static_cast<long long>(in_from.bits())) + " out=" +
                                str(static_cast<long long>(out_to.bits())) + ") - th| <= 1",
             pair_text("th", base, "added", larger));
  };
  if (n <= kVertexAddExhaustive) {
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t in = 0; in < subsets; ++in)
      for (std::uint64_t out = 0; out < subsets; ++out) try_add(VertexSet(in), VertexSet(out));
  } else {
    auto rng = instance_rng(seed ^ 0x5eed, index);
    const std::uint64_t mask = VertexSet::range(n).bits();
    for (int s = 0; s < kVertexAddSamples; ++s) {
      const VertexSet in(rng() & mask);
      const VertexSet out(rng() & mask);
      try_add(in, out);
    }
  }
}

const std::vector<Digraph>& small_companions() {
  static const std::vector<Digraph> companions = [] {
    std::vector<Digraph> all;
    for (int n = 1; n <= 3; ++n) append_census(all, n);
    return all;
  }();
  return companions;
}

constexpr int kUnionSamples = 3;
constexpr int kUnionExhaustiveOrder = 4;

void check_uniontranspose(const Digraph& g, std::uint64_t seed, std::uint64_t index, InstanceResult& r) {
  const Digraph gt = transpose(g);
  auto check_with = [&](const Digraph& h) {
    const int a = th(disjoint_union(g, h));
    const int b = th(disjoint_union(gt, h));
    r.add("pairs");
    if (a != b)
      r.fail(to_compact(g), "th(G u H) == th(G^T u H) for H = " + to_compact(h), pair_text("th", a, "th_T", b));
  };
  const auto& companions = small_companions();
  if (g.order() <= kUnionExhaustiveOrder) {
    for (const Digraph& h : companions) check_with(h);
  } else {
    auto rng = instance_rng(seed ^ 0xc0ffee, index);
    for (int s = 0; s < kUnionSamples; ++s) check_with(companions[below(rng, companions.size())]);
  }
}

void check_ptk_transpose(const Digraph& g, std::uint64_t, InstanceResult& r) {
  const Digraph gt = transpose(g);
  const int z = zero_forcing_number(g);
  const int zt = zero_forcing_number(gt);
  if (z != zt) {
    r.fail(to_compact(g), "Z(G) == Z(G^T)", pair_text("Z", z, "Z_T", zt));
    return;
  }
  for (int k = z; k <= g.order(); ++k) {
    const int a = pt_k(g, k);
    const int b = pt_k(gt, k);
    r.add("k_values");
    if (a != b) r.fail(to_compact(g), "pt_" + str(k) + "(G) == pt_" + str(k) + "(G^T)", pair_text("pt", a, "pt_T", b));
  }
}

void check_terminus(const Digraph& g, std::uint64_t, InstanceResult& r) {
  const int n = g.order();
  const Digraph gt = transpose(g);
  const int z = zero_forcing_number(g);
  for (int k = z; k <= n; ++k) {
    const int best = pt_k(g, k);
    detail::for_each_subset_of_size(g.vertices(), k, [&](VertexSet b) {
      const PropTime pt = pt_of_set(g, b);
      if (!pt.forcing() || pt.value() != best) return true;
      const ForceSet forces = propagate_greedy(g, b).forces();
      const VertexSet term = terminus(n, forces);
      r.add("sets");
      const std::string where = " for B=" + str(static_cast<long long>(b.bits()));
      if (term.size() != k) {
        r.fail(to_compact(g), "|Term(F)| == |B|" + where, pair_text("term", term.size(), "k", k));
        return true;
      }
      const PropTime back = pt_of_set(gt, term);
      if (back != pt)
        r.fail(to_compact(g), "pt(G^T; Term(F)) == pt(G; B)" + where,
               pair_text("pt", best, "pt_T", back.forcing() ? back.value() : -1));
      const Timeline rev = timeline_of_forces(gt, term, reverse(forces));
      if (rev.pt != pt)
        r.fail(to_compact(g), "pt(G^T; Rev(F)) == pt(G; F)" + where,
               pair_text("pt", best, "pt_rev", rev.pt.forcing() ? rev.pt.value() : -1));
      return true;
    });
  }
}

constexpr int kLeafEnumerationCap = 12;

void check_leaves(const Digraph& g, std::uint64_t, InstanceResult& r) {
  const int bound = leaf_lower_bound(g);
  const ThrottlingCertificate cert = throttling_number(g);
  if (cert.initial.size() < bound)
    r.fail(to_compact(g), "|B| >= y - x for an optimal B", pair_text("B", cert.initial.size(), "bound", bound));
  const int z = zero_forcing_number(g);
  if (z < bound) r.fail(to_compact(g), "Z >= y - x", pair_text("Z", z, "bound", bound));
  if (g.order() > kLeafEnumerationCap) return;
  // Leaves of each vertex, for the per-centre count.
  std::vector<VertexSet> leaves(g.order());
  for (int v = 0; v < g.order(); ++v) {
    const VertexSet nb = g.underlying_neighbors(v);
    if (nb.size() == 1) leaves[nb.first()].insert(v);
  }
  const std::uint64_t subsets = std::uint64_t{1} << g.order();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    const VertexSet b(mask);
    if (!pt_of_set(g, b).forcing()) continue;
    r.add("zero_forcing_sets");
    if (b.size() < bound)
      r.fail(to_compact(g), "|B| >= y - x", pair_text("B", static_cast<long long>(mask), "bound", bound));
    for (int u = 0; u < g.order(); ++u) {
      const int k = leaves[u].size();
      if (k >= 1 && (leaves[u] & b).size() < k - 1)
        r.fail(to_compact(g), "B holds k-1 leaves of " + str(u),
               pair_text("B", static_cast<long long>(mask), "leaves_in_B", (leaves[u] & b).size()));
    }
  }
}

void check_charthm(const Digraph& g, std::uint64_t, InstanceResult& r) {
  const ThrottlingCertificate cert = throttling_number(g);
  const int t = cert.th;
  if (g.order() == 0) return;
  const Extension ext = build_extension(g, cert.initial, cert.forces);
  if (!embeds_in_host(ext, cert.initial.size(), cert.pt))
    r.fail(to_compact(g), "extension embeds in H_{a,pt+1}", "no");
  for (int slack = 0; slack <= 1; ++slack) {
    const auto w = witness_for_throttling(g, t + slack);
    if (!w) {
      r.fail(to_compact(g), "witness exists at t = th + " + str(slack), "none");
      continue;
    }
    if (w->a + w->b != t + slack)
      r.fail(to_compact(g), "a + b == t", pair_text("a", w->a, "b", w->b));
    const Digraph replay = apply_witness(*w);
    if (!are_isomorphic(replay, g))
      r.fail(to_compact(g), "replay at t = th + " + str(slack) + " isomorphic to G", to_compact(replay));
  }
  if (t >= 2 && witness_for_throttling(g, t - 1))
    r.fail(to_compact(g), "no witness below th", "witness at t = " + str(t - 1));
}

void check_finite(const Digraph& g, std::uint64_t, InstanceResult& r) {
  const long long t = th(g);
  const long long limit = (t + 1) * (t + 1) / 4;
  if (g.order() > limit)
    r.fail(to_compact(g), "n <= floor((th+1)^2/4)", pair_text("n", g.order(), "th", t));
}

void check_star(const Digraph& g, std::uint64_t, InstanceResult& r) {
  const int value = th(g);
  if (value != g.order()) r.fail(to_compact(g), "th == n", pair_text("th", value, "n", g.order()));
}

void check_augstar(const Digraph& g, std::uint64_t, InstanceResult& r) {
  const int value = th(g);
  const long long floor = throttling_floor(g.order());
  r.add("th=" + str(value));
  if (!(floor < value && value < g.order()))
    r.fail(to_compact(g), "ceil(2 sqrt n - 1) < th < n", pair_text("th", value, "floor", floor));
}

// Undirected checks -----------------------------------------------------------

constexpr int kOtiEdgeCap = 20;

OTIReport oti_of(const UndirectedGraph& g) {
  if (g.edge_count() > kOtiEdgeCap)
    throw Error(ErrorKind::Capacity, "suite OTI limited to " + str(kOtiEdgeCap) + " edges");
  OtiOptions opts;
  opts.threads = 1;
  return oti(g, opts);
}

void check_oti_full(const UndirectedGraph& g, std::uint64_t, InstanceResult& r) {
  const OTIReport rep = oti_of(g);
  if (!rep.full) r.fail(to_compact(g), "OTI is full", pair_text("m", rep.m, "M", rep.M));
  if (rep.M - rep.m > g.edge_count() / 2)
    r.fail(to_compact(g), "M - m <= floor(|E|/2)", pair_text("M-m", rep.M - rep.m, "E", g.edge_count()));
}

void check_oti_bounds(const UndirectedGraph& g, std::uint64_t, InstanceResult& r) {
  const OTIReport rep = oti_of(g);
  const long long floor = throttling_floor(g.order());
  if (rep.m < floor || rep.M > g.order())
    r.fail(to_compact(g), "OTI within [ceil(2 sqrt n - 1), n]", pair_text("m", rep.m, "M", rep.M));
}

void check_oti_subset(const UndirectedGraph& g, std::uint64_t, InstanceResult& r) {
  const OTIReport rep = oti_of(g);
  const int undirected = th(to_double_arc(g));
  if (rep.m > undirected) r.fail(to_compact(g), "m <= th(G)", pair_text("m", rep.m, "th", undirected));
  if (g.edge_count() == 0) return;
  const int alpha = independence_number(g);
  if (alpha + 1 > rep.M) r.fail(to_compact(g), "alpha + 1 <= M", pair_text("alpha", alpha, "M", rep.M));
  if (undirected <= alpha + 1) {
    for (int v = undirected; v <= alpha + 1; ++v)
      if (!std::binary_search(rep.attained.begin(), rep.attained.end(), v))
        r.fail(to_compact(g), "[th(G), alpha + 1] within OTI", "missing " + str(v));
  } else {
    r.add("th_above_alpha_plus_1");
    if (undirected > rep.M) r.add("th_outside_oti");
  }
}

// Family scopes ----------------------------------------------------------------

std::vector<Digraph> star_instances(const Scope& scope, std::uint64_t seed) {
  if (scope.kind == Scope::Kind::Family) return scope_digraphs(scope, seed);
  if (scope.kind != Scope::Kind::Range && scope.kind != Scope::Kind::Census)
    throw Error(ErrorKind::InvalidArgument, "star suite takes range:A..B, census:N or family:star:n");
  std::vector<Digraph> out;
  for (int n = std::max(scope.lo, 1); n <= scope.hi; ++n) append_orientations(out, star_graph(n));
  return out;
}

std::vector<Digraph> augstar_instances(const Scope& scope, std::uint64_t seed) {
  if (scope.kind == Scope::Kind::Family) return scope_digraphs(scope, seed);
  if (scope.kind != Scope::Kind::Range && scope.kind != Scope::Kind::Census)
    throw Error(ErrorKind::InvalidArgument, "augstar suite takes range:A..B, census:N or family:augdstar:s,t");
  std::vector<Digraph> out;
  for (int n = std::max(scope.lo, 5); n <= scope.hi; ++n) {
    const int s = (n - 3) / 2;
    append_orientations(out, augmented_double_star(s, n - 3 - s));
  }
  return out;
}

std::vector<Digraph> path_instances(const Scope& scope, std::uint64_t seed) {
  if (scope.kind == Scope::Kind::Family) return scope_digraphs(scope, seed);
  if (scope.kind != Scope::Kind::Range && scope.kind != Scope::Kind::Census)
    throw Error(ErrorKind::InvalidArgument, "pathinterior suite takes range:A..B, census:N or family:SPEC");
  std::vector<Digraph> out;
  for (int n = std::max(scope.lo, 1); n <= scope.hi; ++n) append_orientations(out, path_graph(n));
  return out;
}

constexpr int kCompmaxOtiCap = 6;

void run_compmax(SuiteReport& report, const Scope& scope, int threads) {
  if (scope.kind != Scope::Kind::Range && scope.kind != Scope::Kind::Census)
    throw Error(ErrorKind::InvalidArgument, "compmax suite takes range:A..B or census:N");
  std::vector<int> orders;
  for (int n = std::max(scope.lo, 1); n <= scope.hi; ++n) orders.push_back(n);
  run_checks<int>(report, orders, threads, [](const int& n, std::uint64_t, InstanceResult& r) {
    const std::string name = "n=" + str(n);
    const Digraph big = tournament_max(n);
    const Digraph small = tournament_min(n);
    const long long floor = throttling_floor(n);
    if (!is_tournament(big)) r.fail(to_compact(big), "tournament_max is a tournament", name);
    if (!is_tournament(small)) r.fail(to_compact(small), "tournament_min is a tournament", name);
    const int hi = th(big);
    const int lo = th(small);
    if (hi != n) r.fail(to_compact(big), "th(tournament_max) == n", pair_text("th", hi, "n", n));
    if (lo != floor) r.fail(to_compact(small), "th(tournament_min) == ceil(2 sqrt n - 1)", pair_text("th", lo, "floor", floor));
    if (n <= kCompmaxOtiCap) {
      const OTIReport rep = oti_of(complete_graph(n));
      if (rep.m != floor || rep.M != n)
        r.fail(to_compact(complete_graph(n)), "OTI(K_n) == [ceil(2 sqrt n - 1), n]", pair_text("m", rep.m, "M", rep.M));
    }
  });
}

constexpr int kWitnessSizeCap = 8;

void run_witness_sound(SuiteReport& report, const Scope& scope, std::uint64_t seed, int threads) {
  if (scope.kind != Scope::Kind::Random)
    throw Error(ErrorKind::InvalidArgument, "witness_sound suite takes random:T:COUNT");
  if (scope.hi > kWitnessSizeCap) throw Error(ErrorKind::Capacity, "witness_sound limited to a + b <= 8");
  struct Job {
    int a, b;
    std::uint64_t sample;
  };
  std::vector<Job> jobs;
  for (int t = 1; t <= scope.hi; ++t)
    for (int a = 1; a <= t; ++a)
      for (std::uint64_t s = 0; s < scope.count; ++s) jobs.push_back({a, t - a, s});
  run_checks<Job>(report, jobs, threads, [seed](const Job& job, std::uint64_t index, InstanceResult& r) {
    auto rng = instance_rng(seed, index);
    CharacterizationWitness w;
    w.a = job.a;
    w.b = job.b;
    const int columns = job.b + 1;
    const Digraph host = host_graph(job.a, columns);
    for (const auto& [x, y] : host.arcs()) {
      const GridCell from{x / columns, x % columns};
      const GridCell to{y / columns, y % columns};
      if (is_host_path_arc(x, y, columns)) {
        if (below(rng, 2)) w.contractions.push_back(from);
      } else if (below(rng, 2)) {
        w.deletions.emplace_back(from, to);
      }
    }
    const Digraph g = apply_witness(w);
    const int value = th(g);
    if (value > job.a + job.b)
      r.fail(to_compact(g), "th(replay) <= a + b", pair_text("th", value, "a+b", job.a + job.b));
  });
}

void run_induced_nonmonotone(SuiteReport& report, const Scope& scope, int threads) {
  if (scope.kind != Scope::Kind::Census && scope.kind != Scope::Kind::Range)
    throw Error(ErrorKind::InvalidArgument, "induced_nonmonotone suite takes census:N or range:A..B");
  if (scope.hi > kCensusCap + 2) throw Error(ErrorKind::Capacity, "induced_nonmonotone limited to order 7");
  // Every pair (G, G - v) arises, up to relabelling, as H plus one appended
  // vertex. Since th(G) >= ceil(2 sqrt |G| - 1), only H above that floor can
  // lose throttling number when the vertex is added.
  for (int n = std::max(scope.lo, 2); n <= scope.hi; ++n) {
    const DigraphCensus census(n - 1, true);
    const long long floor = throttling_floor(n);
    std::uint64_t attach = 1;
    for (int i = 0; i < n - 1; ++i) attach *= 3;
    std::vector<std::uint64_t> indices(census.count());
    for (std::uint64_t i = 0; i < census.count(); ++i) indices[i] = i;
    SuiteReport partial;
    std::vector<std::string> first(indices.size());
    run_checks<std::uint64_t>(partial, indices, threads, [&](const std::uint64_t& i, std::uint64_t, InstanceResult& r) {
      const Digraph h = census.at(i);
      const int base = th(h);
      if (base <= floor) return;
      r.add("candidates");
      for (std::uint64_t code = 0; code < attach; ++code) {
        VertexSet in_from, out_to;
        std::uint64_t rest = code;
        for (int v = 0; v < n - 1; ++v, rest /= 3) {
          if (rest % 3 == 1) in_from.insert(v);
          if (rest % 3 == 2) out_to.insert(v);
        }
        const Digraph g = add_vertex(h, in_from, out_to);
        if (th(g) < base) {
          r.add("witnesses");
          if (first[i].empty()) first[i] = to_compact(g) + " minus " + str(n - 1);
        }
      }
    });
    report.instances += partial.instances;
    for (const auto& [key, value] : partial.stats) report.stats[key] += value;
    for (const std::string& w : first)
      if (!w.empty()) {
        report.examples.push_back(w);
        break;
      }
  }
  report.stats.try_emplace("witnesses", 0);
  if (report.stats["witnesses"] == 0)
    report.failures.push_back({scope.to_string(), "some induced subgraph H of G has th(H) > th(G)", "none found"});
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"transpose",   "arcflip",      "flip_increase", "sourcesink", "pathinterior",
          "vertexpm",    "uniontranspose", "ptk_transpose", "terminus", "oti_full",
          "oti_bounds",  "oti_subset",   "leaves",        "star",       "augstar",
          "compmax",     "charthm",      "witness_sound", "finite",     "induced_nonmonotone"};
}

SuiteReport run_suite(std::string_view name, const Scope& scope, const SuiteOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite = std::string(name);
  report.scope = scope.to_string();
  if (scope.kind == Scope::Kind::Random || name == "vertexpm" || name == "uniontranspose")
    report.seed = options.seed;
  const int threads = options.threads > 0 ? options.threads : default_thread_count();
  const std::uint64_t seed = options.seed;

  auto digraph_suite = [&](const std::vector<Digraph>& instances, Check<Digraph> check) {
    run_checks<Digraph>(report, instances, threads, check);
  };
  auto graph_suite = [&](Check<UndirectedGraph> check) {
    run_checks<UndirectedGraph>(report, scope_graphs(scope, seed), threads, check);
  };
  auto seeded = [seed](void (*fn)(const Digraph&, std::uint64_t, std::uint64_t, InstanceResult&)) {
    return [seed, fn](const Digraph& g, std::uint64_t index, InstanceResult& r) { fn(g, seed, index, r); };
  };

  if (name == "transpose") digraph_suite(scope_digraphs(scope, seed), check_transpose);
  else if (name == "arcflip") digraph_suite(scope_digraphs(scope, seed), check_arcflip);
  else if (name == "flip_increase") digraph_suite(scope_digraphs(scope, seed), check_flip_increase);
  else if (name == "sourcesink") digraph_suite(scope_digraphs(scope, seed), check_sourcesink);
  else if (name == "pathinterior") digraph_suite(path_instances(scope, seed), check_pathinterior);
  else if (name == "vertexpm") digraph_suite(scope_digraphs(scope, seed), seeded(check_vertexpm));
  else if (name == "uniontranspose") digraph_suite(scope_digraphs(scope, seed), seeded(check_uniontranspose));
  else if (name == "ptk_transpose") digraph_suite(scope_digraphs(scope, seed), check_ptk_transpose);
  else if (name == "terminus") digraph_suite(scope_digraphs(scope, seed), check_terminus);
  else if (name == "leaves") digraph_suite(scope_digraphs(scope, seed), check_leaves);
  else if (name == "star") digraph_suite(star_instances(scope, seed), check_star);
  else if (name == "augstar") digraph_suite(augstar_instances(scope, seed), check_augstar);
  else if (name == "charthm") digraph_suite(scope_digraphs(scope, seed), check_charthm);
  else if (name == "finite") digraph_suite(scope_digraphs(scope, seed), check_finite);
  else if (name == "oti_full") graph_suite(check_oti_full);
  else if (name == "oti_bounds") graph_suite(check_oti_bounds);
  else if (name == "oti_subset") graph_suite(check_oti_subset);
  else if (name == "compmax") run_compmax(report, scope, threads);
  else if (name == "witness_sound") run_witness_sound(report, scope, seed, threads);
  else if (name == "induced_nonmonotone") run_induced_nonmonotone(report, scope, threads);
  else throw Error(ErrorKind::InvalidArgument, "unknown suite '" + std::string(name) + "'");

  std::sort(report.failures.begin(), report.failures.end(), [](const SuiteFailure& a, const SuiteFailure& b) {
    return std::tie(a.instance, a.relation, a.observed) < std::tie(b.instance, b.relation, b.observed);
  });
  report.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();
  return report;
}

// ----------------------------------------------------------------- conjecture

SuiteReport conjecture_from_reports(const std::vector<OTIReport>& reports) {
  SuiteReport report;
  report.suite = "conjecture";
  int n_max = 0;
  for (const OTIReport& rep : reports) {
    if (!rep.complete()) throw Error(ErrorKind::InvalidArgument, "conjecture needs complete OTI reports");
    const UndirectedGraph g = parse_compact_undirected(rep.graph);
    const int n = g.order();
    if (!(g == path_graph(n))) throw Error(ErrorKind::InvalidArgument, "conjecture reports must describe paths");
    n_max = std::max(n_max, n);
    const long long expected = closed_form(n % 2 ? ClosedForm::AltOdd : ClosedForm::AltEven, n);
    const long long attaining = std::count(rep.values.begin(), rep.values.end(), rep.M);
    const std::string key = "n=" + (n < 10 ? "0" + str(n) : str(n));
    report.stats[key + ":max"] = rep.M;
    report.stats[key + ":expected"] = expected;
    report.stats[key + ":attaining"] = attaining;
    report.instances += rep.total;
    if (rep.M != expected)
      report.failures.push_back({rep.graph, "max th over orientations of P_n == alternating value",
                                 pair_text("max", rep.M, "expected", expected)});
    const int alt = th(alternating_path(n));
    if (alt != expected)
      report.failures.push_back({to_compact(alternating_path(n)), "th(alternating P_n) == closed form",
                                 pair_text("th", alt, "expected", expected)});
  }
  report.scope = "nmax:" + str(n_max);
  return report;
}

SuiteReport verify_alternating_conjecture(int n_max, const SuiteOptions& options) {
  if (n_max < 1) throw Error(ErrorKind::InvalidArgument, "conjecture needs n_max >= 1");
  if (n_max > kConjectureCap) throw Error(ErrorKind::Capacity, "conjecture limited to n <= " + str(kConjectureCap));
  const auto started = std::chrono::steady_clock::now();
  OtiOptions opts;
  opts.threads = options.threads;
  std::vector<OTIReport> reports;
  for (int n = 1; n <= n_max; ++n) reports.push_back(oti(path_graph(n), opts));
  SuiteReport report = conjecture_from_reports(reports);
  report.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();
  return report;
}

// --------------------------------------------------------------------- census

CensusDistribution census_distribution(int n, std::string_view stat, bool oriented, std::uint64_t shard_index,
                                       std::uint64_t shard_count, int threads) {
  if (stat != "th" && stat != "z") throw Error(ErrorKind::InvalidArgument, "census stat must be th or z");
  if (shard_count == 0 || shard_index >= shard_count)
    throw Error(ErrorKind::InvalidArgument, "shard index must lie in [0, shard count)");
  const DigraphCensus census(n, oriented);
  CensusDistribution dist;
  dist.n = n;
  dist.stat = std::string(stat);
  dist.oriented = oriented;
  dist.total = census.count();
  dist.begin = dist.total * shard_index / shard_count;
  dist.end = dist.total * (shard_index + 1) / shard_count;
  std::vector<int> values(dist.end - dist.begin);
  const bool want_th = stat == "th";
  detail::parallel_for(dist.begin, dist.end, threads > 0 ? threads : default_thread_count(), [&](std::uint64_t i) {
    const Digraph g = census.at(i);
    values[i - dist.begin] = want_th ? th(g) : zero_forcing_number(g);
  });
  for (int v : values) ++dist.counts[v];
  return dist;
}

CensusDistribution merge(std::vector<CensusDistribution> parts) {
  if (parts.empty()) throw Error(ErrorKind::InvalidArgument, "merge: no census parts");
  std::sort(parts.begin(), parts.end(),
            [](const auto& a, const auto& b) { return std::tie(a.begin, a.end) < std::tie(b.begin, b.end); });
  CensusDistribution merged = parts.front();
  merged.counts.clear();
  merged.end = merged.begin;
  for (const auto& part : parts) {
    if (part.n != merged.n || part.stat != merged.stat || part.oriented != merged.oriented || part.total != merged.total)
      throw Error(ErrorKind::InvalidArgument, "merge: census parts describe different runs");
    if (part.begin != merged.end) throw Error(ErrorKind::InvalidArgument, "merge: census ranges are not contiguous");
    for (const auto& [value, count] : part.counts) merged.counts[value] += count;
    merged.end = part.end;
  }
  return merged;
}

}  // namespace dthrot
