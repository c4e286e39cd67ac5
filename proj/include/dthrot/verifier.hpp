#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dthrot/digraph.hpp"
#include "dthrot/throttling.hpp"

namespace dthrot {

// ---------------------------------------------------------------- closed forms

enum class ClosedForm { AltOdd, AltEven, AltEvenUb, AltEvenLb, Floor2Sqrt };

ClosedForm parse_closed_form(std::string_view name);
const char* to_string(ClosedForm form);

struct ClosedFormParams {
  long long n = 0;
  double p = 0;  // (sqrt(n+1) - 1) / 2, informational only
  long long m = 0;
  long long r = 0;
  int k = 0;

  static ClosedFormParams of(long long n);
};

/// Exact integer value; throws Error(Domain) when n has the wrong parity or
/// is not positive.
long long closed_form(ClosedForm form, long long n);

// --------------------------------------------------------------------- suites

struct SuiteFailure {
  std::string instance;  // compact digraph or graph, replayable on the command line
  std::string relation;
  std::string observed;

  friend bool operator==(const SuiteFailure&, const SuiteFailure&) = default;
};

struct SuiteReport {
  std::string suite;
  std::string scope;
  std::optional<std::uint64_t> seed;
  std::uint64_t instances = 0;
  std::vector<SuiteFailure> failures;
  std::map<std::string, long long> stats;
  std::vector<std::string> examples;  // replayable instances of note
  long long ms = 0;

  bool passed() const { return failures.empty(); }
};

/// census:N | range:A..B | random:N:COUNT | family:SPEC
struct Scope {
  enum class Kind { Census, Range, Random, Family };
  Kind kind = Kind::Census;
  int lo = 0;
  int hi = 0;
  std::uint64_t count = 0;
  std::string family;

  std::string to_string() const;
};

Scope parse_scope(std::string_view text);

struct SuiteOptions {
  std::uint64_t seed = 0;  // used by random scopes and sampled checks
  int threads = 0;         // 0: default_thread_count()
};

std::vector<std::string> suite_names();

/// Throws Error(InvalidArgument) for an unknown suite or a scope the suite
/// does not accept.
SuiteReport run_suite(std::string_view name, const Scope& scope, const SuiteOptions& options = {});

/// Max th over all orientations of P_n against the alternating-path closed
/// form, for 2 <= n <= n_max.
SuiteReport verify_alternating_conjecture(int n_max, const SuiteOptions& options = {});
/// The same verdict from complete OTI reports of path graphs.
SuiteReport conjecture_from_reports(const std::vector<OTIReport>& reports);

inline constexpr int kConjectureCap = 20;

// --------------------------------------------------------------------- census

struct CensusDistribution {
  int n = 0;
  std::string stat;  // "th" or "z"
  bool oriented = false;
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
  std::uint64_t total = 0;
  std::map<int, std::uint64_t> counts;

  bool complete() const { return begin == 0 && end == total; }
};

CensusDistribution census_distribution(int n, std::string_view stat, bool oriented,
                                       std::uint64_t shard_index = 0, std::uint64_t shard_count = 1,
                                       int threads = 0);
CensusDistribution merge(std::vector<CensusDistribution> parts);

/// Digraphs of the census or random scope, in scope order. Random instances
/// are a pure function of the seed.
std::vector<Digraph> scope_digraphs(const Scope& scope, std::uint64_t seed);

}  // namespace dthrot
