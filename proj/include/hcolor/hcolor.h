/* C interface to the hcolor library: H-colourings of loopless multigraphs. */
#ifndef HCOLOR_HCOLOR_H
#define HCOLOR_HCOLOR_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define HC_API __declspec(dllexport)
#else
#define HC_API __attribute__((visibility("default")))
#endif

typedef enum hc_status {
    HC_OK = 0,
    HC_ERR_INVALID_ARGUMENT,
    HC_ERR_INVALID_VERTEX,
    HC_ERR_INVALID_EDGE,
    HC_ERR_PARSE,
    HC_ERR_IO,
    HC_ERR_SIZE_GUARD,
    HC_ERR_NOT_TOTAL,
    HC_ERR_INVALID_COLOURING,
    HC_ERR_AMBIGUOUS,
    HC_ERR_DISCONNECTED,
    HC_ERR_UNKNOWN_RECIPE,
    HC_ERR_INCOMPLETE,
    HC_ERR_INTERNAL
} hc_status;

/* Message for the last failed call on this thread; empty after success. */
HC_API const char* hc_last_error(void);
HC_API const char* hc_status_name(hc_status status);
HC_API const char* hc_version(void);
/* Frees strings returned through char** out-parameters. */
HC_API void hc_string_free(char* s);

/* Graphs. Edge ids are positions in the edge list. */

typedef struct hc_graph hc_graph;

/* ends holds 2*m vertex ids: edge i joins ends[2i] and ends[2i+1]. */
HC_API hc_status hc_graph_create(size_t n, const uint32_t* ends, size_t m, hc_graph** out);
/* Named construction, e.g. ("s12+kM", {1}, 1). */
HC_API hc_status hc_graph_generate(const char* name, const int* params, size_t param_count, hc_graph** out);
/* Newline-separated list of generator names. */
HC_API hc_status hc_generator_names(char** out);
HC_API hc_status hc_graph_read(const char* path, hc_graph** out);
HC_API hc_status hc_graph_parse(const char* text, hc_graph** out);
HC_API hc_status hc_graph_from_graph6(const char* line, hc_graph** out);
HC_API void hc_graph_free(hc_graph* g);

HC_API size_t hc_graph_vertex_count(const hc_graph* g);
HC_API size_t hc_graph_edge_count(const hc_graph* g);
HC_API hc_status hc_graph_edge(const hc_graph* g, size_t e, uint32_t* a, uint32_t* b);
/* Edge-list text; generated graphs carry their role labels as comments. */
HC_API hc_status hc_graph_to_text(const hc_graph* g, char** out);
HC_API hc_status hc_graph_to_graph6(const hc_graph* g, char** out);
HC_API hc_status hc_graph_to_dot(const hc_graph* g, char** out);
/* Isomorphism-invariant 16 hex digit digest. */
HC_API hc_status hc_graph_digest(const hc_graph* g, char** out);
HC_API hc_status hc_graph_isomorphic(const hc_graph* a, const hc_graph* b, int* out);

/* Fixed-host solving. */

typedef enum hc_solve_mode { HC_MODE_FIRST = 0, HC_MODE_ALL, HC_MODE_COUNT } hc_solve_mode;
typedef enum hc_solve_status { HC_SAT = 0, HC_UNSAT, HC_UNKNOWN } hc_solve_status;

typedef struct hc_solve_result hc_solve_result;

/* node_limit 0 and time_limit_seconds 0 mean unlimited. */
HC_API hc_status hc_solve(const hc_graph* host, const hc_graph* guest, hc_solve_mode mode, uint64_t node_limit,
                          double time_limit_seconds, hc_solve_result** out);
HC_API hc_solve_status hc_solve_result_status(const hc_solve_result* r);
HC_API uint64_t hc_solve_result_count(const hc_solve_result* r);
HC_API uint64_t hc_solve_result_nodes(const hc_solve_result* r);
HC_API size_t hc_solve_result_colouring_count(const hc_solve_result* r);
/* Edge map of witness i (guest edge -> host edge); length = guest edge count. */
HC_API const uint32_t* hc_solve_result_colouring(const hc_solve_result* r, size_t i, size_t* length);
HC_API void hc_solve_result_free(hc_solve_result* r);

/* Validates an explicit edge map. valid receives 1 or 0; problems (optional)
 * receives one line per violation. */
HC_API hc_status hc_check_colouring(const hc_graph* host, const hc_graph* guest, const uint32_t* map, size_t length,
                                    int* valid, char** problems);

/* Certificates reference graph files by path and canonical digest. */
HC_API hc_status hc_certificate_format(const hc_graph* host, const hc_graph* guest, const uint32_t* map,
                                       size_t length, const char* host_path, const char* guest_path, char** out);
/* Relative paths resolve against base_dir. */
HC_API hc_status hc_certificate_check(const char* text, const char* base_dir, int* valid, char** problems);

/* Splitted-image enumeration. */

typedef struct hc_image_set hc_image_set;

typedef struct hc_image_info {
    size_t split_vertices;
    size_t unused_leaves;
    uint64_t multiplicity;
    int admits_extension;
} hc_image_info;

HC_API hc_status hc_images(const hc_graph* guest, uint64_t node_limit, hc_image_set** out);
HC_API size_t hc_image_set_size(const hc_image_set* s);
HC_API int hc_image_set_complete(const hc_image_set* s);
HC_API int hc_image_set_tk2_realizable(const hc_image_set* s);
HC_API uint64_t hc_image_set_nodes(const hc_image_set* s);
HC_API uint64_t hc_image_set_partitions(const hc_image_set* s);
HC_API hc_status hc_image_info_get(const hc_image_set* s, size_t i, hc_image_info* out);
/* New handle owned by the caller. */
HC_API hc_status hc_image_graph(const hc_image_set* s, size_t i, hc_graph** out);
/* Witness: the guest coloured by the image graph itself. */
HC_API const uint32_t* hc_image_witness(const hc_image_set* s, size_t i, size_t* length);
HC_API void hc_image_set_free(hc_image_set* s);

/* Verification recipes and corpus runs. Reports arrive one JSON line at a
 * time through the callback, in order. The outcome is 0 pass, 1 fail,
 * 2 unknown. Wall-clock timings go to the optional timing callback so the
 * report lines themselves are reproducible. */

typedef void (*hc_line_callback)(const char* line, void* user);
typedef void (*hc_timing_callback)(const char* check, double seconds, void* user);

typedef enum hc_outcome { HC_PASS = 0, HC_FAIL = 1, HC_UNKNOWN_OUTCOME = 2 } hc_outcome;

HC_API hc_status hc_recipe_names(char** out);
/* params_json: a JSON object, or NULL for defaults. */
HC_API hc_status hc_recipe_run(const char* name, const char* params_json, hc_line_callback on_line,
                               hc_timing_callback on_timing, void* user, hc_outcome* outcome);

typedef struct hc_corpus_options {
    const char* host;         /* generator name */
    const int* host_params;
    size_t host_param_count;
    uint64_t node_limit;      /* per solve; 0 = unlimited */
    size_t threads;           /* 0 = HCOLOR_THREADS or hardware concurrency */
    size_t resume_from;       /* 1-based record index */
} hc_corpus_options;

HC_API void hc_corpus_options_init(hc_corpus_options* options);
HC_API hc_status hc_corpus_run(const char* path, const hc_corpus_options* options, hc_line_callback on_line,
                               hc_timing_callback on_timing, void* user, hc_outcome* outcome);

#ifdef __cplusplus
}
#endif

#endif
