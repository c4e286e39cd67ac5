#include "dthrot/forcing.hpp"

#include <algorithm>
#include <string>

#include "dthrot/error.hpp"
#include "subsets.hpp"

namespace dthrot {

namespace {

void check_exhaustive(const Digraph& g, const char* what) {
  if (g.order() > kExhaustiveCap)
    throw Error(ErrorKind::Capacity, std::string(what) + ": order " + std::to_string(g.order()) +
                                         " exceeds exhaustive cap " + std::to_string(kExhaustiveCap));
}

void check_subset(const Digraph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) throw Error(ErrorKind::Range, "vertex set exceeds vertex range");
}

}  // namespace

int PropTime::value() const {
  if (!forcing()) throw Error(ErrorKind::Domain, "arithmetic on a not-forcing propagation time");
  return value_;
}

int throttle_sum(int set_size, PropTime pt) { return set_size + pt.value(); }

// ------------------------------------------------------------------ ForceSet

ForceSet::ForceSet(std::vector<Force> forces) : forces_(std::move(forces)) {
  std::sort(forces_.begin(), forces_.end());
  VertexSet seen_forcers;
  VertexSet seen_targets;
  for (const Force& f : forces_) {
    if (f.forcer < 0 || f.forcer >= kMaxVertices || f.target < 0 || f.target >= kMaxVertices)
      throw Error(ErrorKind::Validation, "force endpoint out of range");
    if (f.forcer == f.target) throw Error(ErrorKind::Validation, "vertex forcing itself");
    if (seen_forcers.contains(f.forcer))
      throw Error(ErrorKind::Validation, "vertex " + std::to_string(f.forcer) + " forces twice");
    if (seen_targets.contains(f.target))
      throw Error(ErrorKind::Validation, "vertex " + std::to_string(f.target) + " forced twice");
    seen_forcers.insert(f.forcer);
    seen_targets.insert(f.target);
  }
}

bool ForceSet::contains(Force f) const { return std::binary_search(forces_.begin(), forces_.end(), f); }

VertexSet ForceSet::forcers() const {
  VertexSet s;
  for (const Force& f : forces_) s.insert(f.forcer);
  return s;
}

VertexSet ForceSet::targets() const {
  VertexSet s;
  for (const Force& f : forces_) s.insert(f.target);
  return s;
}

// ------------------------------------------------------------------ Timeline

VertexSet Timeline::blue() const {
  VertexSet all;
  for (VertexSet layer : layers) all |= layer;
  return all;
}

ForceSet Timeline::forces() const {
  std::vector<Force> list;
  for (int w = 0; w < static_cast<int>(forcer_of.size()); ++w)
    if (forcer_of[w] >= 0) list.push_back({forcer_of[w], w});
  return ForceSet(std::move(list));
}

// ---------------------------------------------------------- greedy dynamics

std::vector<Force> valid_forces(const Digraph& g, VertexSet blue) {
  check_subset(g, blue);
  std::vector<Force> result;
  for (int u : blue) {
    const VertexSet white = g.out(u) - blue;
    if (white.size() == 1) result.push_back({u, white.first()});
  }
  return result;
}

Timeline propagate_greedy(const Digraph& g, VertexSet initial) {
  check_subset(g, initial);
  Timeline tl;
  tl.forcer_of.assign(g.order(), -1);
  tl.layers.push_back(initial);
  VertexSet blue = initial;
  const VertexSet all = g.vertices();
  while (blue != all) {
    VertexSet gained;
    for (int u : blue) {
      const VertexSet white = g.out(u) - blue;
      if (white.size() != 1) continue;
      const int w = white.first();
      if (!gained.contains(w)) {
        gained.insert(w);
        tl.forcer_of[w] = u;
      }
    }
    if (gained.empty()) return tl;
    blue |= gained;
    tl.layers.push_back(gained);
  }
  tl.pt = PropTime::steps(static_cast<int>(tl.layers.size()) - 1);
  return tl;
}

PropTime pt_of_set(const Digraph& g, VertexSet initial, int round_cap) {
  const VertexSet all = g.vertices();
  VertexSet blue = initial & all;
  // Blue vertices that may still force; once a vertex has no white
  // out-neighbour it never forces again.
  VertexSet active = blue;
  int rounds = 0;
  while (blue != all) {
    if (rounds >= round_cap) return PropTime::not_forcing();
    VertexSet gained;
    VertexSet still_active;
    for (int u : active) {
      const VertexSet white = g.out(u) - blue;
      if (white.empty()) continue;
      still_active.insert(u);
      if (white.size() == 1) gained |= white;
    }
    if (gained.empty()) return PropTime::not_forcing();
    blue |= gained;
    active = still_active | gained;
    ++rounds;
  }
  return PropTime::steps(rounds);
}

bool is_zfs(const Digraph& g, VertexSet initial) {
  check_subset(g, initial);
  const bool forcing = pt_of_set(g, initial).forcing();
  if (forcing && !g.sources().subset_of(initial))
    throw Error(ErrorKind::Internal, "zero forcing set missing a source");
  return forcing;
}

int zero_forcing_number(const Digraph& g) {
  check_exhaustive(g, "zero_forcing_number");
  const VertexSet sources = g.sources();
  const VertexSet pool = g.vertices() - sources;
  for (int extra = 0; extra <= pool.size(); ++extra) {
    bool found = false;
    detail::for_each_subset_of_size(pool, extra, [&](VertexSet s) {
      found = pt_of_set(g, sources | s).forcing();
      return !found;
    });
    if (found) return sources.size() + extra;
  }
  throw Error(ErrorKind::Internal, "vertex set is not zero forcing");
}

// ------------------------------------------------------------ sets of forces

void validate_forces(const Digraph& g, VertexSet initial, const ForceSet& forces) {
  check_subset(g, initial);
  for (const Force& f : forces.forces()) {
    if (f.forcer >= g.order() || f.target >= g.order() || !g.has_arc(f.forcer, f.target))
      throw Error(ErrorKind::Validation, "force " + std::to_string(f.forcer) + "->" +
                                             std::to_string(f.target) + " is not an arc");
    if (initial.contains(f.target))
      throw Error(ErrorKind::Validation,
                  "force onto initially blue vertex " + std::to_string(f.target));
  }
  // A valid force stays valid until performed, so any greedy order decides
  // performability.
  VertexSet blue = initial;
  std::vector<Force> pending = forces.forces();
  while (!pending.empty()) {
    auto it = std::find_if(pending.begin(), pending.end(), [&](const Force& f) {
      return blue.contains(f.forcer) && (g.out(f.forcer) - blue) == VertexSet::single(f.target);
    });
    if (it == pending.end())
      throw Error(ErrorKind::Validation, "set of forces cannot be performed from the initial set");
    blue.insert(it->target);
    pending.erase(it);
  }
}

Timeline timeline_of_forces(const Digraph& g, VertexSet initial, const ForceSet& forces) {
  validate_forces(g, initial, forces);
  Timeline tl;
  tl.forcer_of.assign(g.order(), -1);
  tl.layers.push_back(initial);
  VertexSet blue = initial;
  const VertexSet all = g.vertices();
  while (blue != all) {
    VertexSet layer;
    for (const Force& f : forces.forces()) {
      if (blue.contains(f.target) || !blue.contains(f.forcer)) continue;
      if ((g.out(f.forcer) - blue) != VertexSet::single(f.target)) continue;
      layer.insert(f.target);
      tl.forcer_of[f.target] = f.forcer;
    }
    if (layer.empty()) return tl;
    blue |= layer;
    tl.layers.push_back(layer);
  }
  tl.pt = PropTime::steps(static_cast<int>(tl.layers.size()) - 1);
  return tl;
}

// ------------------------------------------------------------- pt_k, pt_min

int pt_k(const Digraph& g, int k) {
  check_exhaustive(g, "pt_k");
  const int n = g.order();
  const int z = zero_forcing_number(g);
  if (k < z || k > n)
    throw Error(ErrorKind::Domain, "pt_k: k = " + std::to_string(k) + " outside [" +
                                       std::to_string(z) + ", " + std::to_string(n) + "]");
  const VertexSet sources = g.sources();
  int best = n;  // pt never exceeds n - k
  detail::for_each_subset_of_size(g.vertices() - sources, k - sources.size(), [&](VertexSet s) {
    const PropTime pt = pt_of_set(g, sources | s, best - 1);
    if (pt.forcing()) best = pt.value();
    return best > 0;
  });
  return best;
}

int pt_min(const Digraph& g) { return pt_k(g, zero_forcing_number(g)); }

VertexSet terminus(int n, const ForceSet& forces) { return VertexSet::range(n) - forces.forcers(); }

ForceSet reverse(const ForceSet& forces) {
  std::vector<Force> flipped;
  flipped.reserve(forces.size());
  for (const Force& f : forces.forces()) flipped.push_back({f.target, f.forcer});
  return ForceSet(std::move(flipped));
}

// --------------------------------------------------------------- PSD on paths

PropTime psd_propagate_path(int path_len, VertexSet initial) {
  if (path_len < 1) throw Error(ErrorKind::Domain, "psd_propagate_path: empty path");
  if (path_len > kMaxVertices) throw Error(ErrorKind::Capacity, "psd_propagate_path: path too long");
  const VertexSet all = VertexSet::range(path_len);
  if (!initial.subset_of(all)) throw Error(ErrorKind::Range, "vertex set exceeds path");
  VertexSet blue = initial;
  int rounds = 0;
  while (blue != all) {
    const VertexSet next =
        (blue | VertexSet(blue.bits() << 1) | VertexSet(blue.bits() >> 1)) & all;
    if (next == blue) return PropTime::not_forcing();
    blue = next;
    ++rounds;
  }
  return PropTime::steps(rounds);
}

PinnedPsdThrottle psd_throttle_pinned(int m) {
  if (m < 1) throw Error(ErrorKind::Domain, "psd_throttle_pinned: empty path");
  if (m > kExhaustiveCap) throw Error(ErrorKind::Capacity, "psd_throttle_pinned: path too long");
  PinnedPsdThrottle best{VertexSet::range(m), m, 0, m};
  const std::uint64_t rest = std::uint64_t{1} << (m - 1);
  for (std::uint64_t mask = 0; mask < rest; ++mask) {
    const VertexSet set(1 | (mask << 1));
    const PropTime pt = psd_propagate_path(m, set);
    const int th = set.size() + pt.value();
    if (th < best.th) best = {set, set.size(), pt.value(), th};
  }
  return best;
}

}  // namespace dthrot
