/*
 * Copyright 2026 the fusegraph authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * fusegraph: learning sparse graph Laplacians from node signals fused with
 * node-metadata distances.
 *
 * The library learns the m = p(p-1)/2 nonnegative edge weights of a
 * combinatorial graph Laplacian by minimizing
 *
 *   alpha * [ -log det(L(w)+J) + tr(S L(w)) + sum_i scad(w_i) ]
 *     + (1-alpha) * [ w^T z + sigma2 * sum_i w_i (log w_i - 1) ]
 *
 * with a majorization-minimization loop whose per-edge updates are positive
 * roots of cubic equations. S is a sample covariance of the node signals and
 * z collects squared distances between node metadata embeddings.
 *
 * All functions returning fusegraph_status leave their outputs untouched on
 * failure; fusegraph_last_error_message() describes the most recent failure
 * on the calling thread. Handles are destroyed with their _destroy function;
 * passing NULL to a _destroy function is a no-op.
 *
 * Node and edge indices crossing this interface are 1-based, matching the
 * canonical edge-index map k = i - j + (j-1)(2p-j)/2 for i > j.
 */

#ifndef FUSEGRAPH_H
#define FUSEGRAPH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef FUSEGRAPH_API
#if defined(_WIN32) || defined(__CYGWIN__)
#define FUSEGRAPH_API __declspec(dllexport)
#else
#define FUSEGRAPH_API __attribute__((visibility("default")))
#endif
#endif

typedef enum fusegraph_status {
  FUSEGRAPH_OK = 0,
  FUSEGRAPH_ERROR_INVALID_ARGUMENT = 1,
  FUSEGRAPH_ERROR_INVALID_EDGE = 2,
  FUSEGRAPH_ERROR_NOT_SYMMETRIC = 3,
  FUSEGRAPH_ERROR_NOT_POSITIVE_DEFINITE = 4,
  FUSEGRAPH_ERROR_INFEASIBLE_UPDATE = 5,
  FUSEGRAPH_ERROR_INGEST = 6,
  FUSEGRAPH_ERROR_PARSE = 7,
  FUSEGRAPH_ERROR_IO = 8,
  FUSEGRAPH_ERROR_DEGENERATE_INPUT = 9,
  FUSEGRAPH_ERROR_LABEL_MISMATCH = 10,
  FUSEGRAPH_ERROR_GENERATION = 11,
  FUSEGRAPH_ERROR_UNKNOWN = 12
} fusegraph_status;

typedef struct fusegraph_problem fusegraph_problem;
typedef struct fusegraph_config fusegraph_config;
typedef struct fusegraph_result fusegraph_result;
typedef struct fusegraph_graph fusegraph_graph;
typedef struct fusegraph_partition fusegraph_partition;
typedef struct fusegraph_report fusegraph_report;
typedef struct fusegraph_instance fusegraph_instance;

FUSEGRAPH_API const char* fusegraph_version(void);
FUSEGRAPH_API const char* fusegraph_status_name(fusegraph_status status);

/* Detail message for the most recent failure on this thread. The pointer is
 * valid until the next failing fusegraph call on the same thread. */
FUSEGRAPH_API const char* fusegraph_last_error_message(void);

/* ---------- edge indexing and small numeric helpers ---------- */

/* m = p(p-1)/2 */
FUSEGRAPH_API fusegraph_status fusegraph_edge_count(int p, int* m);

/* Canonical edge index k for nodes (i, j), 1 <= j < i <= p; k in [1, m]. */
FUSEGRAPH_API fusegraph_status fusegraph_edge_index(int i, int j, int p, int* k);

/* Inverse of fusegraph_edge_index. */
FUSEGRAPH_API fusegraph_status fusegraph_edge_pair(int k, int p, int* i, int* j);

/* Dense Laplacian of the weight vector w (length m) into L, row-major p*p. */
FUSEGRAPH_API fusegraph_status fusegraph_laplacian(const double* w, int p, double* L);

/* Gaussian kernel weights w_k = exp(-z_k / sigma2). */
FUSEGRAPH_API fusegraph_status fusegraph_kernel_weights(const double* z, int m, double sigma2,
                                                        double* w);

/* ---------- problem construction ---------- */

/* From an explicit covariance. labels may be NULL (nodes named "n1".."np");
 * z may be NULL (no side information attached, only alpha = 1 can run).
 * S is row-major p*p and must be symmetric PSD up to the documented repair. */
FUSEGRAPH_API fusegraph_status fusegraph_problem_create(int p, const char* const* labels,
                                                        const double* S, const double* z,
                                                        fusegraph_problem** out);

/* From a signal matrix X, row-major p*n: S = (1/n) X X^T (optionally centered). */
FUSEGRAPH_API fusegraph_status fusegraph_problem_from_signal_array(int p, int n, const double* X,
                                                                   const char* const* labels,
                                                                   int center,
                                                                   fusegraph_problem** out);

/* From a closing-price CSV (header "node,<date>,...", one row per node):
 * log-returns then sample covariance. */
FUSEGRAPH_API fusegraph_status fusegraph_problem_from_prices_csv(const char* path, int center,
                                                                 fusegraph_problem** out);

/* From a signals CSV (header "node,...", one row per node). */
FUSEGRAPH_API fusegraph_status fusegraph_problem_from_signals_csv(const char* path, int center,
                                                                  fusegraph_problem** out);

/* Attach side information. Rows are joined on node labels; a missing or
 * extra label is an error, never an implicit intersection. */
FUSEGRAPH_API fusegraph_status fusegraph_problem_set_embeddings_csv(fusegraph_problem* problem,
                                                                    const char* path);
FUSEGRAPH_API fusegraph_status fusegraph_problem_set_distances_csv(fusegraph_problem* problem,
                                                                   const char* path);

/* Attach an explicit distance vector in canonical edge order. */
FUSEGRAPH_API fusegraph_status fusegraph_problem_set_distance_array(fusegraph_problem* problem,
                                                                    const double* z, int m);

FUSEGRAPH_API int fusegraph_problem_node_count(const fusegraph_problem* problem);
FUSEGRAPH_API int fusegraph_problem_edge_count(const fusegraph_problem* problem);
FUSEGRAPH_API const char* fusegraph_problem_node_label(const fusegraph_problem* problem,
                                                       int index_1based);
FUSEGRAPH_API int fusegraph_problem_has_side_info(const fusegraph_problem* problem);

/* Kernel width heuristic over the attached distances; method is "median" or
 * "mean". */
FUSEGRAPH_API fusegraph_status fusegraph_problem_sigma2_heuristic(
    const fusegraph_problem* problem, const char* method, double* sigma2);

FUSEGRAPH_API void fusegraph_problem_destroy(fusegraph_problem* problem);

/* ---------- solver configuration ---------- */

/* Defaults: alpha 0.5, sigma2 1, lambda 0, scad_a 3.7, epsilon 1e-6,
 * maxiter 1000, weight floor 1e-10, weight cap 1e6, companion-matrix cubic. */
FUSEGRAPH_API fusegraph_status fusegraph_config_create(fusegraph_config** out);

FUSEGRAPH_API fusegraph_status fusegraph_config_set_alpha(fusegraph_config* config, double alpha);
FUSEGRAPH_API fusegraph_status fusegraph_config_set_sigma2(fusegraph_config* config, double sigma2);
FUSEGRAPH_API fusegraph_status fusegraph_config_set_lambda(fusegraph_config* config, double lambda);
FUSEGRAPH_API fusegraph_status fusegraph_config_set_scad_a(fusegraph_config* config, double scad_a);
FUSEGRAPH_API fusegraph_status fusegraph_config_set_epsilon(fusegraph_config* config,
                                                            double epsilon);
FUSEGRAPH_API fusegraph_status fusegraph_config_set_max_iterations(fusegraph_config* config,
                                                                   int max_iterations);
FUSEGRAPH_API fusegraph_status fusegraph_config_set_weight_floor(fusegraph_config* config,
                                                                 double floor);
FUSEGRAPH_API fusegraph_status fusegraph_config_set_weight_cap(fusegraph_config* config,
                                                               double cap);

/* method is "companion" or "bisection". */
FUSEGRAPH_API fusegraph_status fusegraph_config_set_cubic_method(fusegraph_config* config,
                                                                 const char* method);

/* Initial iterate (length m, strictly positive); default is all-ones. */
FUSEGRAPH_API fusegraph_status fusegraph_config_set_initial_weights(fusegraph_config* config,
                                                                    const double* w, int m);

FUSEGRAPH_API void fusegraph_config_destroy(fusegraph_config* config);

/* ---------- solving ---------- */

FUSEGRAPH_API fusegraph_status fusegraph_learn(const fusegraph_problem* problem,
                                               const fusegraph_config* config,
                                               fusegraph_result** out);

FUSEGRAPH_API int fusegraph_result_weight_count(const fusegraph_result* result);
FUSEGRAPH_API fusegraph_status fusegraph_result_weights(const fusegraph_result* result,
                                                        double* w);
FUSEGRAPH_API int fusegraph_result_iterations(const fusegraph_result* result);
FUSEGRAPH_API int fusegraph_result_converged(const fusegraph_result* result);
FUSEGRAPH_API fusegraph_status fusegraph_result_final_objective(const fusegraph_result* result,
                                                                double* value);
FUSEGRAPH_API fusegraph_status fusegraph_result_final_delta(const fusegraph_result* result,
                                                            double* value);

/* Trace rows: row 0 is the initial point, rows 1..iterations follow the
 * sweeps. */
FUSEGRAPH_API int fusegraph_result_trace_size(const fusegraph_result* result);
FUSEGRAPH_API fusegraph_status fusegraph_result_trace_row(const fusegraph_result* result, int row,
                                                          int* iteration, double* objective,
                                                          double* delta_norm, double* millis);

/* Line-delimited trace: header plus "iteration,objective,delta_norm,millis". */
FUSEGRAPH_API fusegraph_status fusegraph_result_write_trace_csv(const fusegraph_result* result,
                                                                const char* path);

FUSEGRAPH_API void fusegraph_result_destroy(fusegraph_result* result);

/* ---------- learned graphs ---------- */

/* Extract the edge list (weights above threshold * max weight) together with
 * the hyperparameters and convergence summary of the producing run. */
FUSEGRAPH_API fusegraph_status fusegraph_graph_from_result(const fusegraph_problem* problem,
                                                           const fusegraph_config* config,
                                                           const fusegraph_result* result,
                                                           double threshold,
                                                           fusegraph_graph** out);

FUSEGRAPH_API fusegraph_status fusegraph_graph_load(const char* path, fusegraph_graph** out);
FUSEGRAPH_API fusegraph_status fusegraph_graph_save(const fusegraph_graph* graph,
                                                    const char* path);
FUSEGRAPH_API fusegraph_status fusegraph_graph_save_edge_csv(const fusegraph_graph* graph,
                                                             const char* path);

FUSEGRAPH_API int fusegraph_graph_node_count(const fusegraph_graph* graph);
FUSEGRAPH_API int fusegraph_graph_edge_count(const fusegraph_graph* graph);
FUSEGRAPH_API const char* fusegraph_graph_node_label(const fusegraph_graph* graph,
                                                     int index_1based);
FUSEGRAPH_API fusegraph_status fusegraph_graph_edge(const fusegraph_graph* graph, int index_1based,
                                                    const char** i, const char** j,
                                                    double* weight);

FUSEGRAPH_API void fusegraph_graph_destroy(fusegraph_graph* graph);

/* ---------- evaluation ---------- */

/* Loads a "node,cluster" CSV. */
FUSEGRAPH_API fusegraph_status fusegraph_partition_load(const char* path,
                                                        fusegraph_partition** out);
FUSEGRAPH_API void fusegraph_partition_destroy(fusegraph_partition* partition);

/* F-score of the binarized graph against the same-cluster block truth, and
 * weighted modularity. The partition must cover every graph node. With
 * use_detected_partition, modularity is scored against the connected
 * components of the binarized graph instead of the given partition.
 * modularity is NaN when the graph carries no weight. */
FUSEGRAPH_API fusegraph_status fusegraph_eval_graph(const fusegraph_graph* graph,
                                                    const fusegraph_partition* partition,
                                                    double threshold, int use_detected_partition,
                                                    double* f_score, double* modularity);

/* ---------- grid sweeps ---------- */

/* Runs the solver for every (alpha, lambda) pair, alpha-major, scoring each
 * learned graph against the partition. lambdas may be NULL (uses the config
 * lambda). Per-row failures are recorded in the row's termination field as
 * "error:<code>" without aborting the sweep. jobs > 1 parallelizes rows;
 * results are independent of scheduling. */
FUSEGRAPH_API fusegraph_status fusegraph_sweep(const fusegraph_problem* problem,
                                               const fusegraph_config* config,
                                               const double* alphas, int n_alphas,
                                               const double* lambdas, int n_lambdas,
                                               const fusegraph_partition* partition,
                                               double threshold, int jobs,
                                               fusegraph_report** out);

FUSEGRAPH_API int fusegraph_report_row_count(const fusegraph_report* report);
FUSEGRAPH_API fusegraph_status fusegraph_report_row(const fusegraph_report* report, int row,
                                                    double* alpha, double* lambda, double* f_score,
                                                    double* modularity, int* iterations,
                                                    double* millis);
FUSEGRAPH_API const char* fusegraph_report_row_termination(const fusegraph_report* report,
                                                           int row);

/* CSV: alpha,lambda,f_score,modularity,iters[,millis],termination. Timing is
 * opt-in so the default report is byte-stable across reruns. */
FUSEGRAPH_API fusegraph_status fusegraph_report_save_csv(const fusegraph_report* report,
                                                         const char* path, int include_timings);

FUSEGRAPH_API void fusegraph_report_destroy(fusegraph_report* report);

/* ---------- synthetic instances ---------- */

typedef struct fusegraph_synth_config {
  int p;
  int n_clusters;
  const int* cluster_sizes; /* optional, length n_clusters, must sum to p */
  double intra_edge_prob;
  double intra_weight_lo;
  double intra_weight_hi;
  double inter_edge_prob;
  double inter_weight_lo;
  double inter_weight_hi;
  int confusion_a; /* -1 to disable the signal-confusable cluster pair */
  int confusion_b;
  double confusion_edge_prob;
  int n_samples;
  int embed_dim;
  double intra_sq_dist;
  double inter_sq_dist;
  double metadata_noise;
  uint64_t seed;
  int max_retries;
} fusegraph_synth_config;

FUSEGRAPH_API void fusegraph_synth_config_init(fusegraph_synth_config* config);

FUSEGRAPH_API fusegraph_status fusegraph_synth_generate(const fusegraph_synth_config* config,
                                                        fusegraph_instance** out);

FUSEGRAPH_API int fusegraph_instance_node_count(const fusegraph_instance* instance);
FUSEGRAPH_API int fusegraph_instance_sample_count(const fusegraph_instance* instance);

FUSEGRAPH_API fusegraph_status fusegraph_instance_write_signals_csv(
    const fusegraph_instance* instance, const char* path);
FUSEGRAPH_API fusegraph_status fusegraph_instance_write_embeddings_csv(
    const fusegraph_instance* instance, const char* path);
FUSEGRAPH_API fusegraph_status fusegraph_instance_write_labels_csv(
    const fusegraph_instance* instance, const char* path);

/* Ground-truth graph document (every positive edge, threshold 0). */
FUSEGRAPH_API fusegraph_status fusegraph_instance_truth_graph(const fusegraph_instance* instance,
                                                              fusegraph_graph** out);

FUSEGRAPH_API void fusegraph_instance_destroy(fusegraph_instance* instance);

#ifdef __cplusplus
}
#endif

#endif /* FUSEGRAPH_H */
