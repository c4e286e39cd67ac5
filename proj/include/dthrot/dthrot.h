#ifndef DTHROT_H
#define DTHROT_H

/* C interface to the zero forcing and throttling library.
 *
 * Every call returns a dthrot_status; on failure dthrot_last_error() holds a
 * message for the calling thread. Strings handed out through char** outputs
 * are owned by the caller and released with dthrot_string_free. Handles are
 * released with their matching _free function; passing NULL to a _free
 * function is a no-op. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define DTHROT_API __declspec(dllexport)
#else
#  define DTHROT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dthrot_status {
  DTHROT_OK = 0,
  DTHROT_ERR_PARSE = 1,
  DTHROT_ERR_RANGE = 2,
  DTHROT_ERR_PRECONDITION = 3,
  DTHROT_ERR_CAPACITY = 4,
  DTHROT_ERR_DOMAIN = 5,
  DTHROT_ERR_VALIDATION = 6,
  DTHROT_ERR_INVALID_ARGUMENT = 7,
  DTHROT_ERR_INTERNAL = 8,
  DTHROT_ERR_NULL = 9
} dthrot_status;

typedef struct dthrot_digraph dthrot_digraph;
typedef struct dthrot_graph dthrot_graph;

DTHROT_API const char* dthrot_version(void);
DTHROT_API const char* dthrot_status_name(dthrot_status status);
DTHROT_API const char* dthrot_last_error(void);
DTHROT_API void dthrot_string_free(char* s);

/* Digraphs. Text input may be an edge list ("n" then "u v" lines), the
 * compact form "n:u>v,...", or JSON {"n":..,"arcs":[[u,v],..]}. Undirected
 * input (an edge list whose first line is "# undirected", compact "n:u-v,...",
 * or JSON with "edges") is read with every edge as a pair of opposite arcs. */
DTHROT_API dthrot_status dthrot_digraph_new(int n, dthrot_digraph** out);
DTHROT_API dthrot_status dthrot_digraph_add_arc(dthrot_digraph* g, int u, int v);
DTHROT_API dthrot_status dthrot_digraph_parse(const char* text, dthrot_digraph** out);
/* Undirected families are promoted to double arcs. */
DTHROT_API dthrot_status dthrot_digraph_from_family(const char* spec, dthrot_digraph** out);
DTHROT_API dthrot_status dthrot_digraph_order(const dthrot_digraph* g, int* out);
DTHROT_API dthrot_status dthrot_digraph_to_json(const dthrot_digraph* g, char** out);
DTHROT_API dthrot_status dthrot_digraph_to_edge_list(const dthrot_digraph* g, char** out);
DTHROT_API void dthrot_digraph_free(dthrot_digraph* g);

/* Undirected graphs: edge list, compact "n:u-v,...", or JSON {"n","edges"}. */
DTHROT_API dthrot_status dthrot_graph_parse(const char* text, dthrot_graph** out);
DTHROT_API dthrot_status dthrot_graph_from_family(const char* spec, dthrot_graph** out);
DTHROT_API dthrot_status dthrot_graph_to_edge_list(const dthrot_graph* g, char** out);
DTHROT_API void dthrot_graph_free(dthrot_graph* g);

DTHROT_API dthrot_status dthrot_family_is_undirected(const char* spec, int* out);
/* Edge list of the family member; JSON when as_json is nonzero. Undirected
 * members are edge lists headed by "# undirected", or JSON with "edges". */
DTHROT_API dthrot_status dthrot_generate(const char* spec, int as_json, char** out);

/* Forcing and throttling. Sets are arrays of vertex indices. A propagation
 * time of -1 means the set is not zero forcing. */
DTHROT_API dthrot_status dthrot_pt_of_set(const dthrot_digraph* g, const int* set, size_t len, int* pt);
DTHROT_API dthrot_status dthrot_timeline(const dthrot_digraph* g, const int* set, size_t len, char** json);
DTHROT_API dthrot_status dthrot_zero_forcing_number(const dthrot_digraph* g, int* out);
DTHROT_API dthrot_status dthrot_pt_k(const dthrot_digraph* g, int k, int* out);
DTHROT_API dthrot_status dthrot_pt_min(const dthrot_digraph* g, int* out);
/* certificate_json may be NULL. */
DTHROT_API dthrot_status dthrot_throttling_number(const dthrot_digraph* g, int* th, char** certificate_json);

/* Characterization. The witness output is the JSON literal null when
 * th(g) > t. */
DTHROT_API dthrot_status dthrot_witness(const dthrot_digraph* g, int t, char** json);
DTHROT_API dthrot_status dthrot_apply_witness(const char* witness_json, dthrot_digraph** out);
DTHROT_API dthrot_status dthrot_are_isomorphic(const dthrot_digraph* a, const dthrot_digraph* b, int* out);

/* Orientation throttling interval over shard shard_index of shard_count.
 * threads <= 0 uses DTHROT_THREADS. */
DTHROT_API dthrot_status dthrot_oti(const dthrot_graph* g, uint64_t shard_index, uint64_t shard_count,
                                    int threads, int transpose_pairing, char** json);
/* json_array: array of OTI reports, census parts or conjecture shards. */
DTHROT_API dthrot_status dthrot_merge(const char* json_array, char** json);

/* Verification. *passed is 1 when the report lists no failures. */
DTHROT_API dthrot_status dthrot_suite_names(char** json);
DTHROT_API dthrot_status dthrot_run_suite(const char* name, const char* scope, uint64_t seed, int threads,
                                          int* passed, char** json);
DTHROT_API dthrot_status dthrot_conjecture(int n_max, int threads, int* passed, char** json);
DTHROT_API dthrot_status dthrot_conjecture_shard(int n_max, uint64_t shard_index, uint64_t shard_count,
                                                 int threads, char** json);
/* stat is "th" or "z". */
DTHROT_API dthrot_status dthrot_census(int n, const char* stat, int oriented, uint64_t shard_index,
                                       uint64_t shard_count, int threads, char** json);
/* name: alt_odd, alt_even, alt_even_ub, alt_even_lb, floor_2sqrt. */
DTHROT_API dthrot_status dthrot_closed_form(const char* name, long long n, long long* out);

#ifdef __cplusplus
}
#endif

#endif
