#ifndef COLLAPSE_LAB_H
#define COLLAPSE_LAB_H

/*
 * C interface to the collapse-lab library: simplicial complexes of
 * hypergraphs, collapsibility bounds, exact d-collapse search and set-pair
 * lemma verification.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns a cl_status; on failure a message is available
 * from cl_last_error() on the calling thread until the next call. Strings
 * returned through char** out-parameters are owned by the caller and must be
 * released with cl_string_free().
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(COLLAPSE_LAB_BUILDING)
#    define CL_API __declspec(dllexport)
#  else
#    define CL_API __declspec(dllimport)
#  endif
#else
#  define CL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cl_status {
  CL_OK = 0,
  /* Malformed input or violated parameter hypotheses. */
  CL_INVALID_INPUT = 1,
  /* A search exhausted its node budget; the report is still produced. */
  CL_UNDECIDED = 2,
  CL_INTERNAL_ERROR = 3
} cl_status;

typedef enum cl_ordering_mode {
  CL_ORDERING_LEX = 0,
  /* The facet lines of the parsed input, in file order. */
  CL_ORDERING_GIVEN = 1,
  /* Every facet permutation (at most 7 facets); the least d is kept. */
  CL_ORDERING_SEARCH = 2
} cl_ordering_mode;

typedef enum cl_lemma {
  CL_LEMMA_FRANKL_KALAI = 0,
  CL_LEMMA_FUREDI = 1,
  CL_LEMMA_LNP = 2
} cl_lemma;

typedef struct cl_complex cl_complex;
typedef struct cl_hypergraph cl_hypergraph;
typedef struct cl_graph cl_graph;

CL_API const char* cl_version(void);
CL_API const char* cl_last_error(void);
CL_API void cl_string_free(char* s);

/* Complexes ------------------------------------------------------------- */

/* Parses the complex text format. */
CL_API cl_status cl_complex_parse(const char* text, cl_complex** out);
/* Builds the downward closure of `count` candidate facets; facet i has
 * lengths[i] vertex ids, stored consecutively in `ids`. */
CL_API cl_status cl_complex_from_facets(const uint32_t* ids, const size_t* lengths, size_t count,
                                        cl_complex** out);
CL_API void cl_complex_free(cl_complex* x);

CL_API cl_status cl_complex_facet_count(const cl_complex* x, size_t* out);
CL_API cl_status cl_complex_is_void(const cl_complex* x, int* out);
CL_API cl_status cl_complex_euler_characteristic(const cl_complex* x, int64_t* out);
/* Writes the dimension, or -1 when X is not of that shape. */
CL_API cl_status cl_complex_simplex_boundary_dimension(const cl_complex* x, int* out);
CL_API cl_status cl_complex_cross_polytope_dimension(const cl_complex* x, int* out);
CL_API cl_status cl_complex_to_text(const cl_complex* x, char** out);
CL_API cl_status cl_complex_to_json(const cl_complex* x, char** out);

/* Hypergraphs and graphs ------------------------------------------------ */

CL_API cl_status cl_hypergraph_parse(const char* text, cl_hypergraph** out);
CL_API cl_status cl_hypergraph_complete_uniform(int n, int r, cl_hypergraph** out);
CL_API cl_status cl_hypergraph_complete_r_partite(const int* sides, size_t count,
                                                  cl_hypergraph** out);
CL_API cl_status cl_hypergraph_family_h1(int r, int p, int t, cl_hypergraph** out);
CL_API cl_status cl_hypergraph_family_h2(int r, int t, cl_hypergraph** out);
CL_API void cl_hypergraph_free(cl_hypergraph* h);
CL_API cl_status cl_hypergraph_edge_count(const cl_hypergraph* h, size_t* out);
CL_API cl_status cl_hypergraph_covering_number(const cl_hypergraph* h, int t, int* out);

CL_API cl_status cl_graph_parse(const char* text, cl_graph** out);
CL_API cl_status cl_graph_disjointness(const cl_hypergraph* h, int t, cl_graph** out);
CL_API void cl_graph_free(cl_graph* g);

/* Complex constructors. The complexes built from a hypergraph label their
 * vertices by edge index and carry the edges for reports. */
CL_API cl_status cl_build_cov(const cl_hypergraph* h, int p, int t, cl_complex** out);
CL_API cl_status cl_build_int(const cl_hypergraph* h, int t, cl_complex** out);
CL_API cl_status cl_build_ind(const cl_graph* g, cl_complex** out);

/* JSON reports ----------------------------------------------------------- */

CL_API cl_status cl_report_build(const cl_complex* x, char** json_out);
CL_API cl_status cl_report_mes_bound(const cl_complex* x, cl_ordering_mode mode, char** json_out);
CL_API cl_status cl_report_d_prime(const cl_complex* x, char** json_out);
CL_API cl_status cl_report_k_graph(const cl_graph* g, char** json_out);
/* Returns CL_UNDECIDED, with the report, when the budget runs out. */
CL_API cl_status cl_report_collapse(const cl_complex* x, int d, uint64_t budget, char** json_out);
CL_API cl_status cl_report_collapsibility(const cl_complex* x, uint64_t budget, char** json_out);
/* ground: ground-set size for frankl-kalai/furedi; part_sizes: lnp parts
 * (NULL/0 for r parts of size 2). */
CL_API cl_status cl_report_verify_lemma(cl_lemma lemma, int r, int p, int t, int ground,
                                        const int* part_sizes, size_t part_count, uint64_t budget,
                                        char** json_out);
CL_API cl_status cl_report_verify_extremal(int r, int p, int t, uint64_t budget, char** json_out);

/* Replays a certificate given as JSON; *ok is 1 when it collapses X to the
 * void complex. */
CL_API cl_status cl_verify_certificate(const cl_complex* x, const char* certificate_json, int* ok);

#ifdef __cplusplus
}
#endif

#endif /* COLLAPSE_LAB_H */
