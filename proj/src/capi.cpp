#include "dthrot/dthrot.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <string_view>
#include <variant>

#include "dthrot/characterization.hpp"
#include "dthrot/error.hpp"
#include "dthrot/families.hpp"
#include "dthrot/forcing.hpp"
#include "dthrot/json_io.hpp"
#include "dthrot/throttling.hpp"
#include "dthrot/verifier.hpp"

struct dthrot_digraph {
  dthrot::Digraph g;
};

struct dthrot_graph {
  dthrot::UndirectedGraph g;
};

namespace {

using namespace dthrot;

thread_local std::string last_error;

dthrot_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return DTHROT_ERR_PARSE;
    case ErrorKind::Range: return DTHROT_ERR_RANGE;
    case ErrorKind::Precondition: return DTHROT_ERR_PRECONDITION;
    case ErrorKind::Capacity: return DTHROT_ERR_CAPACITY;
    case ErrorKind::Domain: return DTHROT_ERR_DOMAIN;
    case ErrorKind::Validation: return DTHROT_ERR_VALIDATION;
    case ErrorKind::InvalidArgument: return DTHROT_ERR_INVALID_ARGUMENT;
    case ErrorKind::Internal: return DTHROT_ERR_INTERNAL;
  }
  return DTHROT_ERR_INTERNAL;
}

dthrot_status fail(dthrot_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename Body>
dthrot_status guard(Body&& body) {
  try {
    body();
    last_error.clear();
    return DTHROT_OK;
  } catch (const Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const Json::exception& e) {
    return fail(DTHROT_ERR_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(DTHROT_ERR_CAPACITY, "out of memory");
  } catch (const std::exception& e) {
    return fail(DTHROT_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(DTHROT_ERR_INTERNAL, "unknown failure");
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

template <typename... Ptrs>
bool any_null(Ptrs... ptrs) {
  return ((ptrs == nullptr) || ...);
}

#define DTHROT_REQUIRE(...) \
  if (any_null(__VA_ARGS__)) return fail(DTHROT_ERR_NULL, "null argument")

enum class TextForm { Json, Compact, EdgeList };

TextForm detect(std::string_view text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start == std::string_view::npos) return TextForm::EdgeList;
  if (text[start] == '{') return TextForm::Json;
  const auto stop = text.find_first_of(" \t\r\n", start);
  const std::string_view token = text.substr(start, stop == std::string_view::npos ? text.npos : stop - start);
  return token.find(':') != std::string_view::npos ? TextForm::Compact : TextForm::EdgeList;
}

constexpr std::string_view kUndirectedMarker = "# undirected";

bool marked_undirected(std::string_view text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  return start != std::string_view::npos && text.substr(start).starts_with(kUndirectedMarker);
}

// Undirected input (JSON with "edges", compact with '-', or a marked edge list)
// is promoted to double arcs.
Digraph parse_digraph_text(std::string_view text) {
  switch (detect(text)) {
    case TextForm::Json: {
      const Json j = Json::parse(text);
      if (j.is_object() && j.contains("edges")) return to_double_arc(graph_from_json(j));
      return digraph_from_json(j);
    }
    case TextForm::Compact: {
      const auto start = text.find_first_not_of(" \t\r\n");
      const auto stop = text.find_last_not_of(" \t\r\n");
      const std::string_view body = text.substr(start, stop - start + 1);
      if (body.find('-') != std::string_view::npos) return to_double_arc(parse_compact_undirected(body));
      return parse_compact(body);
    }
    case TextForm::EdgeList:
      if (marked_undirected(text)) return to_double_arc(parse_undirected_edge_list(text));
      return parse_edge_list(text);
  }
  throw Error(ErrorKind::Internal, "unreachable");
}

UndirectedGraph parse_graph_text(std::string_view text) {
  switch (detect(text)) {
    case TextForm::Json: return graph_from_json(Json::parse(text));
    case TextForm::Compact: {
      const auto start = text.find_first_not_of(" \t\r\n");
      const auto stop = text.find_last_not_of(" \t\r\n");
      return parse_compact_undirected(text.substr(start, stop - start + 1));
    }
    case TextForm::EdgeList: return parse_undirected_edge_list(text);
  }
  throw Error(ErrorKind::Internal, "unreachable");
}

VertexSet set_of(const Digraph& g, const int* set, std::size_t len) {
  if (len > 0 && set == nullptr) throw Error(ErrorKind::InvalidArgument, "null vertex array");
  VertexSet s;
  for (std::size_t i = 0; i < len; ++i) {
    if (set[i] < 0 || set[i] >= g.order())
      throw Error(ErrorKind::Range, "vertex " + std::to_string(set[i]) + " out of range");
    s.insert(set[i]);
  }
  return s;
}

}  // namespace

extern "C" {

const char* dthrot_version(void) { return "1.0.0"; }

const char* dthrot_status_name(dthrot_status status) {
  switch (status) {
    case DTHROT_OK: return "ok";
    case DTHROT_ERR_PARSE: return "parse error";
    case DTHROT_ERR_RANGE: return "range error";
    case DTHROT_ERR_PRECONDITION: return "precondition error";
    case DTHROT_ERR_CAPACITY: return "capacity error";
    case DTHROT_ERR_DOMAIN: return "domain error";
    case DTHROT_ERR_VALIDATION: return "validation error";
    case DTHROT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case DTHROT_ERR_INTERNAL: return "internal error";
    case DTHROT_ERR_NULL: return "null argument";
  }
  return "unknown status";
}

const char* dthrot_last_error(void) { return last_error.c_str(); }

void dthrot_string_free(char* s) { std::free(s); }

dthrot_status dthrot_digraph_new(int n, dthrot_digraph** out) {
  DTHROT_REQUIRE(out);
  return guard([&] {
    if (n < 0 || n > kMaxVertices) throw Error(ErrorKind::Range, "order out of range");
    *out = new dthrot_digraph{Digraph(n)};
  });
}

dthrot_status dthrot_digraph_add_arc(dthrot_digraph* g, int u, int v) {
  DTHROT_REQUIRE(g);
  return guard([&] { g->g.add_arc(u, v); });
}

dthrot_status dthrot_digraph_parse(const char* text, dthrot_digraph** out) {
  DTHROT_REQUIRE(text, out);
  return guard([&] { *out = new dthrot_digraph{parse_digraph_text(text)}; });
}

dthrot_status dthrot_digraph_from_family(const char* spec, dthrot_digraph** out) {
  DTHROT_REQUIRE(spec, out);
  return guard([&] { *out = new dthrot_digraph{generate_digraph(spec)}; });
}

dthrot_status dthrot_digraph_order(const dthrot_digraph* g, int* out) {
  DTHROT_REQUIRE(g, out);
  *out = g->g.order();
  return DTHROT_OK;
}

dthrot_status dthrot_digraph_to_json(const dthrot_digraph* g, char** out) {
  DTHROT_REQUIRE(g, out);
  return guard([&] { *out = dup(to_json(g->g).dump()); });
}

dthrot_status dthrot_digraph_to_edge_list(const dthrot_digraph* g, char** out) {
  DTHROT_REQUIRE(g, out);
  return guard([&] { *out = dup(to_edge_list(g->g)); });
}

void dthrot_digraph_free(dthrot_digraph* g) { delete g; }

dthrot_status dthrot_graph_parse(const char* text, dthrot_graph** out) {
  DTHROT_REQUIRE(text, out);
  return guard([&] { *out = new dthrot_graph{parse_graph_text(text)}; });
}

dthrot_status dthrot_graph_from_family(const char* spec, dthrot_graph** out) {
  DTHROT_REQUIRE(spec, out);
  return guard([&] { *out = new dthrot_graph{generate_undirected(spec)}; });
}

dthrot_status dthrot_graph_to_edge_list(const dthrot_graph* g, char** out) {
  DTHROT_REQUIRE(g, out);
  return guard([&] { *out = dup(std::string(kUndirectedMarker) + "\n" + to_edge_list(g->g)); });
}

void dthrot_graph_free(dthrot_graph* g) { delete g; }

dthrot_status dthrot_family_is_undirected(const char* spec, int* out) {
  DTHROT_REQUIRE(spec, out);
  return guard([&] { *out = parse_family_spec(spec).is_undirected() ? 1 : 0; });
}

dthrot_status dthrot_generate(const char* spec, int as_json, char** out) {
  DTHROT_REQUIRE(spec, out);
  return guard([&] {
    const GeneratedGraph g = generate(spec);
    if (const auto* u = std::get_if<UndirectedGraph>(&g)) {
      *out = dup(as_json ? to_json(*u).dump() : std::string(kUndirectedMarker) + "\n" + to_edge_list(*u));
      return;
    }
    const Digraph& d = std::get<Digraph>(g);
    *out = dup(as_json ? to_json(d).dump() : to_edge_list(d));
  });
}

dthrot_status dthrot_pt_of_set(const dthrot_digraph* g, const int* set, size_t len, int* pt) {
  DTHROT_REQUIRE(g, pt);
  return guard([&] {
    const PropTime value = pt_of_set(g->g, set_of(g->g, set, len));
    *pt = value.forcing() ? value.value() : -1;
  });
}

dthrot_status dthrot_timeline(const dthrot_digraph* g, const int* set, size_t len, char** json) {
  DTHROT_REQUIRE(g, json);
  return guard([&] { *json = dup(to_json(propagate_greedy(g->g, set_of(g->g, set, len))).dump()); });
}

dthrot_status dthrot_zero_forcing_number(const dthrot_digraph* g, int* out) {
  DTHROT_REQUIRE(g, out);
  return guard([&] { *out = zero_forcing_number(g->g); });
}

dthrot_status dthrot_pt_k(const dthrot_digraph* g, int k, int* out) {
  DTHROT_REQUIRE(g, out);
  return guard([&] { *out = pt_k(g->g, k); });
}

dthrot_status dthrot_pt_min(const dthrot_digraph* g, int* out) {
  DTHROT_REQUIRE(g, out);
  return guard([&] { *out = pt_min(g->g); });
}

dthrot_status dthrot_throttling_number(const dthrot_digraph* g, int* th, char** certificate_json) {
  DTHROT_REQUIRE(g, th);
  return guard([&] {
    const ThrottlingCertificate cert = throttling_number(g->g);
    if (certificate_json) *certificate_json = dup(to_json(cert).dump());
    *th = cert.th;
  });
}

dthrot_status dthrot_witness(const dthrot_digraph* g, int t, char** json) {
  DTHROT_REQUIRE(g, json);
  return guard([&] {
    const auto w = witness_for_throttling(g->g, t);
    *json = dup(w ? to_json(*w).dump() : std::string("null"));
  });
}

dthrot_status dthrot_apply_witness(const char* witness_json, dthrot_digraph** out) {
  DTHROT_REQUIRE(witness_json, out);
  return guard([&] { *out = new dthrot_digraph{apply_witness(witness_from_json(Json::parse(witness_json)))}; });
}

dthrot_status dthrot_are_isomorphic(const dthrot_digraph* a, const dthrot_digraph* b, int* out) {
  DTHROT_REQUIRE(a, b, out);
  return guard([&] { *out = are_isomorphic(a->g, b->g) ? 1 : 0; });
}

dthrot_status dthrot_oti(const dthrot_graph* g, uint64_t shard_index, uint64_t shard_count, int threads,
                         int transpose_pairing, char** json) {
  DTHROT_REQUIRE(g, json);
  return guard([&] {
    OtiOptions opts;
    opts.shard_index = shard_index;
    opts.shard_count = shard_count;
    opts.threads = threads;
    opts.transpose_pairing = transpose_pairing != 0;
    *json = dup(to_json(oti(g->g, opts)).dump());
  });
}

dthrot_status dthrot_merge(const char* json_array, char** json) {
  DTHROT_REQUIRE(json_array, json);
  return guard([&] {
    const Json docs = Json::parse(json_array);
    if (!docs.is_array()) throw Error(ErrorKind::Parse, "merge expects a JSON array");
    *json = dup(merge_documents(docs.get<std::vector<Json>>()).dump());
  });
}

dthrot_status dthrot_suite_names(char** json) {
  DTHROT_REQUIRE(json);
  return guard([&] { *json = dup(Json(suite_names()).dump()); });
}

dthrot_status dthrot_run_suite(const char* name, const char* scope, uint64_t seed, int threads, int* passed,
                               char** json) {
  DTHROT_REQUIRE(name, scope, json);
  return guard([&] {
    SuiteOptions opts;
    opts.seed = seed;
    opts.threads = threads;
    const SuiteReport report = run_suite(name, parse_scope(scope), opts);
    if (passed) *passed = report.passed() ? 1 : 0;
    *json = dup(to_json(report).dump());
  });
}

dthrot_status dthrot_conjecture(int n_max, int threads, int* passed, char** json) {
  DTHROT_REQUIRE(json);
  return guard([&] {
    SuiteOptions opts;
    opts.threads = threads;
    const SuiteReport report = verify_alternating_conjecture(n_max, opts);
    if (passed) *passed = report.passed() ? 1 : 0;
    *json = dup(to_json(report).dump());
  });
}

dthrot_status dthrot_conjecture_shard(int n_max, uint64_t shard_index, uint64_t shard_count, int threads,
                                      char** json) {
  DTHROT_REQUIRE(json);
  return guard([&] {
    if (n_max < 1 || n_max > kConjectureCap)
      throw Error(ErrorKind::InvalidArgument, "conjecture needs 1 <= n_max <= " + std::to_string(kConjectureCap));
    OtiOptions opts;
    opts.shard_index = shard_index;
    opts.shard_count = shard_count;
    opts.threads = threads;
    std::vector<OTIReport> reports;
    for (int n = 1; n <= n_max; ++n) reports.push_back(oti(path_graph(n), opts));
    *json = dup(conjecture_shard_json(reports).dump());
  });
}

dthrot_status dthrot_census(int n, const char* stat, int oriented, uint64_t shard_index, uint64_t shard_count,
                            int threads, char** json) {
  DTHROT_REQUIRE(stat, json);
  return guard([&] {
    *json = dup(to_json(census_distribution(n, stat, oriented != 0, shard_index, shard_count, threads)).dump());
  });
}

dthrot_status dthrot_closed_form(const char* name, long long n, long long* out) {
  DTHROT_REQUIRE(name, out);
  return guard([&] { *out = closed_form(parse_closed_form(name), n); });
}

}  // extern "C"
