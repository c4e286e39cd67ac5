#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dthrot/digraph.hpp"
#include "dthrot/forcing.hpp"

namespace dthrot {

/// |B| + pt(g; B), or nullopt when B is not a zero forcing set.
std::optional<int> th_of_set(const Digraph& g, VertexSet initial);

struct ThrottlingCertificate {
  VertexSet initial;
  ForceSet forces;
  int pt = 0;
  int th = 0;
};

struct SolverOptions {
  bool prune = true;
};

/// Vertices that some optimal initial set always contains: every source, and
/// for each vertex u all but the highest-indexed leaf of each class of
/// interchangeable leaves hanging off u.
VertexSet mandatory_vertices(const Digraph& g);

/// y - x: leaves minus vertices adjacent to a leaf (underlying graph).
int leaf_lower_bound(const Digraph& g);

/// Exact th(g) with an optimal initial set and its greedy forces.
ThrottlingCertificate throttling_number(const Digraph& g, const SolverOptions& options = {});

/// Thread count from DTHROT_THREADS, else 1.
int default_thread_count();

struct OtiOptions {
  std::uint64_t shard_index = 0;
  std::uint64_t shard_count = 1;
  int threads = 0;  // 0: default_thread_count()
  /// Solve one orientation of each transpose pair and copy the value to the
  /// other. Needs the full index range.
  bool transpose_pairing = false;
};

/// Orientation throttling values of an undirected graph over the index range
/// [begin, end) of its orientations; a complete report has begin 0 and
/// end == total.
struct OTIReport {
  std::string graph;  // compact undirected form
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
  std::uint64_t total = 0;
  std::vector<int> values;
  int m = 0;
  int M = 0;
  std::vector<int> attained;
  bool full = false;
  std::uint64_t argmin = 0;
  std::uint64_t argmax = 0;

  bool complete() const { return begin == 0 && end == total; }
};

OTIReport oti(const UndirectedGraph& g, const OtiOptions& options = {});

/// Joins reports for the same graph whose ranges tile a contiguous interval.
/// Order of the inputs does not matter.
OTIReport merge(std::vector<OTIReport> parts);

}  // namespace dthrot
