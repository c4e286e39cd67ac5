#include "dthrot/throttling.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <tuple>

#include "dthrot/error.hpp"
#include "dthrot/int_math.hpp"
#include "parallel.hpp"
#include "subsets.hpp"

namespace dthrot {

std::optional<int> th_of_set(const Digraph& g, VertexSet initial) {
  if (!initial.subset_of(g.vertices())) throw Error(ErrorKind::Range, "vertex set exceeds vertex range");
  const PropTime pt = pt_of_set(g, initial);
  if (!pt.forcing()) return std::nullopt;
  return throttle_sum(initial.size(), pt);
}

namespace {

bool is_leaf(const Digraph& g, int v) { return g.underlying_neighbors(v).size() == 1; }

}  // namespace

VertexSet mandatory_vertices(const Digraph& g) {
  VertexSet mandatory = g.sources();
  for (int u = 0; u < g.order(); ++u) {
    // A leaf hanging off u can only be forced by u, and u forces once. Leaves
    // with identical arcs to u are interchangeable, so all but one of each
    // class may be assumed blue.
    VertexSet sink_leaves;
    VertexSet double_leaves;
    for (int v : g.underlying_neighbors(u)) {
      if (!is_leaf(g, v)) continue;
      if (g.out(v).empty())
        sink_leaves.insert(v);
      else if (!g.in(v).empty())
        double_leaves.insert(v);
    }
    for (VertexSet cls : {sink_leaves, double_leaves})
      if (cls.size() >= 2) mandatory |= cls - VertexSet::single(cls.last());
  }
  return mandatory;
}

int leaf_lower_bound(const Digraph& g) {
  int leaves = 0;
  VertexSet centres;
  for (int v = 0; v < g.order(); ++v) {
    if (!is_leaf(g, v)) continue;
    ++leaves;
    centres |= g.underlying_neighbors(v);
  }
  return leaves - centres.size();
}

ThrottlingCertificate throttling_number(const Digraph& g, const SolverOptions& options) {
  const int n = g.order();
  if (n > kExhaustiveCap)
    throw Error(ErrorKind::Capacity, "throttling_number: order " + std::to_string(n) +
                                         " exceeds exhaustive cap " + std::to_string(kExhaustiveCap));
  if (n == 0) return {};

  VertexSet best_set = g.vertices();
  int best = n;

  if (options.prune) {
    const int floor = static_cast<int>(throttling_floor(n));
    const VertexSet mandatory = mandatory_vertices(g);
    const VertexSet free = g.vertices() - mandatory;
    const int k0 = std::max({mandatory.size(), leaf_lower_bound(g), 1});
    for (int k = k0; k < best && best > floor; ++k) {
      // At most k forces per round, one per forcing chain.
      const int pt_floor = static_cast<int>(ceil_div(n - k, k));
      if (k + pt_floor >= best) continue;
      detail::for_each_subset_of_size(free, k - mandatory.size(), [&](VertexSet s) {
        const VertexSet initial = mandatory | s;
        const PropTime pt = pt_of_set(g, initial, best - k - 1);
        if (pt.forcing()) {
          best = k + pt.value();
          best_set = initial;
        }
        return best > floor && k + pt_floor < best;
      });
    }
  } else {
    for (int k = 1; k <= n; ++k) {
      detail::for_each_subset_of_size(g.vertices(), k, [&](VertexSet initial) {
        const PropTime pt = pt_of_set(g, initial);
        if (pt.forcing() && k + pt.value() < best) {
          best = k + pt.value();
          best_set = initial;
        }
        return true;
      });
    }
  }

  const Timeline tl = propagate_greedy(g, best_set);
  ThrottlingCertificate cert;
  cert.initial = best_set;
  cert.forces = tl.forces();
  cert.pt = tl.pt.value();
  cert.th = throttle_sum(best_set.size(), tl.pt);
  if (cert.th != best) throw Error(ErrorKind::Internal, "certificate does not replay");
  return cert;
}

int default_thread_count() {
  if (const char* env = std::getenv("DTHROT_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value >= 1 && value <= 1024) return static_cast<int>(value);
  }
  return 1;
}

// ------------------------------------------------------------------------ OTI

namespace {

void fill_stats(OTIReport& report) {
  report.attained.clear();
  if (report.values.empty()) {
    report.m = report.M = 0;
    report.full = false;
    report.argmin = report.argmax = report.begin;
    return;
  }
  const auto lo = std::min_element(report.values.begin(), report.values.end());
  const auto hi = std::max_element(report.values.begin(), report.values.end());
  report.m = *lo;
  report.M = *hi;
  report.argmin = report.begin + static_cast<std::uint64_t>(lo - report.values.begin());
  report.argmax = report.begin + static_cast<std::uint64_t>(hi - report.values.begin());
  std::vector<bool> seen(report.M - report.m + 1, false);
  for (int v : report.values) seen[v - report.m] = true;
  report.full = true;
  for (int v = report.m; v <= report.M; ++v) {
    if (seen[v - report.m])
      report.attained.push_back(v);
    else
      report.full = false;
  }
}

}  // namespace

OTIReport oti(const UndirectedGraph& g, const OtiOptions& options) {
  if (g.order() > kExhaustiveCap)
    throw Error(ErrorKind::Capacity, "oti: order exceeds exhaustive cap");
  const Orientations orientations(g);
  if (options.shard_count == 0 || options.shard_index >= options.shard_count)
    throw Error(ErrorKind::InvalidArgument, "shard index must lie in [0, shard count)");
  if (options.transpose_pairing && options.shard_count != 1)
    throw Error(ErrorKind::InvalidArgument, "transpose pairing needs the full orientation range");

  OTIReport report;
  report.graph = to_compact(g);
  report.total = orientations.count();
  report.begin = report.total * options.shard_index / options.shard_count;
  report.end = report.total * (options.shard_index + 1) / options.shard_count;
  report.values.assign(report.end - report.begin, 0);
  const int threads = options.threads > 0 ? options.threads : default_thread_count();

  if (options.transpose_pairing) {
    detail::parallel_for(report.begin, report.end, threads, [&](std::uint64_t i) {
      const std::uint64_t partner = orientations.transpose_index(i);
      if (partner < i) return;
      const int th = throttling_number(orientations.at(i)).th;
      report.values[i] = th;
      report.values[partner] = th;
    });
  } else {
    detail::parallel_for(report.begin, report.end, threads, [&](std::uint64_t i) {
      report.values[i - report.begin] = throttling_number(orientations.at(i)).th;
    });
  }
  fill_stats(report);
  return report;
}

OTIReport merge(std::vector<OTIReport> parts) {
  if (parts.empty()) throw Error(ErrorKind::InvalidArgument, "merge: no reports");
  std::sort(parts.begin(), parts.end(),
            [](const OTIReport& a, const OTIReport& b) { return std::tie(a.begin, a.end) < std::tie(b.begin, b.end); });
  OTIReport merged;
  merged.graph = parts.front().graph;
  merged.total = parts.front().total;
  merged.begin = parts.front().begin;
  merged.end = merged.begin;
  for (const OTIReport& part : parts) {
    if (part.graph != merged.graph || part.total != merged.total)
      throw Error(ErrorKind::InvalidArgument, "merge: reports describe different graphs");
    if (part.begin != merged.end)
      throw Error(ErrorKind::InvalidArgument, "merge: orientation ranges are not contiguous");
    if (part.values.size() != part.end - part.begin)
      throw Error(ErrorKind::InvalidArgument, "merge: report range and values disagree");
    merged.values.insert(merged.values.end(), part.values.begin(), part.values.end());
    merged.end = part.end;
  }
  fill_stats(merged);
  return merged;
}

}  // namespace dthrot
