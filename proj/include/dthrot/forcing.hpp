#pragma once

#include <compare>
#include <vector>

#include "dthrot/digraph.hpp"
#include "dthrot/vertex_set.hpp"

namespace dthrot {

/// A number of time steps, or the distinguished "never finishes" value.
/// Arithmetic on the not-forcing value is an error, never infinity.
class PropTime {
 public:
  static constexpr PropTime not_forcing() { return PropTime(); }
  static constexpr PropTime steps(int value) { return PropTime(value); }

  constexpr bool forcing() const { return value_ >= 0; }
  /// Throws Error(Domain) when not forcing.
  int value() const;

  friend constexpr bool operator==(PropTime, PropTime) = default;

 private:
  constexpr PropTime() = default;
  constexpr explicit PropTime(int value) : value_(value) {}

  int value_ = -1;
};

/// |B| + pt. Throws when `pt` is not forcing.
int throttle_sum(int set_size, PropTime pt);

struct Force {
  int forcer;
  int target;

  friend constexpr auto operator<=>(const Force&, const Force&) = default;
};

/// A set of forces: each vertex forces at most once and is forced at most once.
class ForceSet {
 public:
  ForceSet() = default;
  /// Sorts by forcer; throws Error(Validation) on a repeated forcer or target.
  explicit ForceSet(std::vector<Force> forces);

  const std::vector<Force>& forces() const { return forces_; }
  std::size_t size() const { return forces_.size(); }
  bool contains(Force f) const;
  VertexSet forcers() const;
  VertexSet targets() const;

  friend bool operator==(const ForceSet&, const ForceSet&) = default;

 private:
  std::vector<Force> forces_;
};

/// F^(0) = B, F^(1), ... with the forcer credited for each forced vertex.
struct Timeline {
  std::vector<VertexSet> layers;
  std::vector<int> forcer_of;  // -1 for vertices that start blue or stay white
  PropTime pt = PropTime::not_forcing();

  VertexSet blue() const;
  ForceSet forces() const;
};

/// Pairs (u,w) with u blue, w white and N+(u) \ blue = {w}, ordered by u.
std::vector<Force> valid_forces(const Digraph& g, VertexSet blue);

/// Performs every valid force in each round; credits the smallest forcer.
Timeline propagate_greedy(const Digraph& g, VertexSet initial);

/// Greedy propagation time without building a timeline. Reports not-forcing
/// when more than `round_cap` rounds would be needed (default: unlimited).
PropTime pt_of_set(const Digraph& g, VertexSet initial, int round_cap = kMaxVertices);

bool is_zfs(const Digraph& g, VertexSet initial);

inline constexpr int kExhaustiveCap = 24;

int zero_forcing_number(const Digraph& g);

/// Throws Error(Validation) unless `forces` can be performed in some order
/// starting from `initial`.
void validate_forces(const Digraph& g, VertexSet initial, const ForceSet& forces);

/// Layers of F: a vertex joins F^(t+1) once a force of F onto it is valid
/// with F^[t] blue. Not forcing when F leaves vertices white.
Timeline timeline_of_forces(const Digraph& g, VertexSet initial, const ForceSet& forces);

/// min pt(g; B) over zero forcing sets with |B| = k; needs Z(g) <= k <= n.
int pt_k(const Digraph& g, int k);
/// pt_k at k = Z(g).
int pt_min(const Digraph& g);

/// Vertices of 0..n-1 that perform no force of F.
VertexSet terminus(int n, const ForceSet& forces);
ForceSet reverse(const ForceSet& forces);

// Positive semidefinite forcing restricted to an undirected path 0..len-1:
// every blue vertex colours all of its white neighbours each round.
PropTime psd_propagate_path(int path_len, VertexSet initial);

struct PinnedPsdThrottle {
  VertexSet initial;
  int size;
  int pt;
  int th;
};

/// Minimises |B'| + pt_+(P; B') over B' containing vertex 0 of a path on m vertices.
PinnedPsdThrottle psd_throttle_pinned(int m);

}  // namespace dthrot
