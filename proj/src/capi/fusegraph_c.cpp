// Copyright 2026 the fusegraph authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fusegraph.h"

#include <cmath>
#include <cstring>
#include <new>
#include <numeric>
#include <string>
#include <vector>

#include "core/data_io.hpp"
#include "core/eval.hpp"
#include "core/mm_solver.hpp"
#include "core/side_info.hpp"
#include "core/synth.hpp"

namespace fg = fusegraph;

namespace {

thread_local std::string g_last_error;

fusegraph_status map_code(fg::ErrorCode code) {
  switch (code) {
    case fg::ErrorCode::invalid_argument: return FUSEGRAPH_ERROR_INVALID_ARGUMENT;
    case fg::ErrorCode::invalid_edge: return FUSEGRAPH_ERROR_INVALID_EDGE;
    case fg::ErrorCode::not_symmetric: return FUSEGRAPH_ERROR_NOT_SYMMETRIC;
    case fg::ErrorCode::not_positive_definite: return FUSEGRAPH_ERROR_NOT_POSITIVE_DEFINITE;
    case fg::ErrorCode::infeasible_update: return FUSEGRAPH_ERROR_INFEASIBLE_UPDATE;
    case fg::ErrorCode::ingest: return FUSEGRAPH_ERROR_INGEST;
    case fg::ErrorCode::parse: return FUSEGRAPH_ERROR_PARSE;
    case fg::ErrorCode::io: return FUSEGRAPH_ERROR_IO;
    case fg::ErrorCode::degenerate_input: return FUSEGRAPH_ERROR_DEGENERATE_INPUT;
    case fg::ErrorCode::label_mismatch: return FUSEGRAPH_ERROR_LABEL_MISMATCH;
    case fg::ErrorCode::generation: return FUSEGRAPH_ERROR_GENERATION;
  }
  return FUSEGRAPH_ERROR_UNKNOWN;
}

fusegraph_status fail(fusegraph_status status, const char* message) {
  g_last_error = message;
  return status;
}

// Runs fn inside the exception barrier; fn returns fusegraph_status.
template <typename Fn>
fusegraph_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const fg::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return FUSEGRAPH_ERROR_UNKNOWN;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FUSEGRAPH_ERROR_UNKNOWN;
  } catch (...) {
    g_last_error = "unknown error";
    return FUSEGRAPH_ERROR_UNKNOWN;
  }
}

std::vector<std::string> default_labels(int p) {
  std::vector<std::string> labels;
  labels.reserve(p);
  for (int v = 0; v < p; ++v) labels.push_back("n" + std::to_string(v + 1));
  return labels;
}

std::vector<std::string> copy_labels(const char* const* labels, int p) {
  if (!labels) return default_labels(p);
  std::vector<std::string> out;
  out.reserve(p);
  for (int v = 0; v < p; ++v) {
    if (!labels[v]) throw fg::Error(fg::ErrorCode::invalid_argument, "label array entry is NULL");
    out.emplace_back(labels[v]);
  }
  return out;
}

}  // namespace

struct fusegraph_problem {
  std::vector<std::string> labels;
  fg::ProblemData data;
  bool has_side_info = false;
};

struct fusegraph_config {
  fg::HyperParams hyper;
  fg::SolverConfig solver;
};

struct fusegraph_result {
  fg::WeightVector weights;
  fg::SolverTrace trace;
};

struct fusegraph_graph {
  fg::LearnedGraph graph;
};

struct fusegraph_partition {
  fg::Partition partition;
};

struct fusegraph_report {
  std::vector<fg::SweepRow> rows;
};

struct fusegraph_instance {
  fg::SynthInstance instance;
};

extern "C" {

const char* fusegraph_version(void) { return "0.1.0"; }

const char* fusegraph_status_name(fusegraph_status status) {
  switch (status) {
    case FUSEGRAPH_OK: return "ok";
    case FUSEGRAPH_ERROR_INVALID_ARGUMENT: return "invalid_argument";
    case FUSEGRAPH_ERROR_INVALID_EDGE: return "invalid_edge";
    case FUSEGRAPH_ERROR_NOT_SYMMETRIC: return "not_symmetric";
    case FUSEGRAPH_ERROR_NOT_POSITIVE_DEFINITE: return "not_positive_definite";
    case FUSEGRAPH_ERROR_INFEASIBLE_UPDATE: return "infeasible_update";
    case FUSEGRAPH_ERROR_INGEST: return "ingest";
    case FUSEGRAPH_ERROR_PARSE: return "parse";
    case FUSEGRAPH_ERROR_IO: return "io";
    case FUSEGRAPH_ERROR_DEGENERATE_INPUT: return "degenerate_input";
    case FUSEGRAPH_ERROR_LABEL_MISMATCH: return "label_mismatch";
    case FUSEGRAPH_ERROR_GENERATION: return "generation";
    case FUSEGRAPH_ERROR_UNKNOWN: break;
  }
  return "unknown";
}

const char* fusegraph_last_error_message(void) { return g_last_error.c_str(); }

/* ---------- edge indexing and numeric helpers ---------- */

fusegraph_status fusegraph_edge_count(int p, int* m) {
  if (!m) return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "m is NULL");
  return guarded([&] {
    *m = fg::edge_count(p);
    return FUSEGRAPH_OK;
  });
}

fusegraph_status fusegraph_edge_index(int i, int j, int p, int* k) {
  if (!k) return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "k is NULL");
  return guarded([&] {
    *k = fg::edge_index(i, j, p);
    return FUSEGRAPH_OK;
  });
}

fusegraph_status fusegraph_edge_pair(int k, int p, int* i, int* j) {
  if (!i || !j) return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "output pointer is NULL");
  return guarded([&] {
    auto [ii, jj] = fg::edge_pair(k, p);
    *i = ii;
    *j = jj;
    return FUSEGRAPH_OK;
  });
}

fusegraph_status fusegraph_laplacian(const double* w, int p, double* L) {
  if (!w || !L) return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "w or L is NULL");
  return guarded([&] {
    const int m = fg::edge_count(p);
    fg::WeightVector wv{p, Eigen::Map<const fg::Vector>(w, m)};
    Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(L, p, p) =
        fg::laplacian(wv);
    return FUSEGRAPH_OK;
  });
}

fusegraph_status fusegraph_kernel_weights(const double* z, int m, double sigma2, double* w) {
  if (!z || !w) return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "z or w is NULL");
  if (m < 1) return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "m must be >= 1");
  return guarded([&] {
    if (!(sigma2 > 0.0))
      throw fg::Error(fg::ErrorCode::invalid_argument, "sigma2 must be positive");
    for (int k = 0; k < m; ++k) w[k] = std::exp(-z[k] / sigma2);
    return FUSEGRAPH_OK;
  });
}

/* ---------- problem ---------- */

fusegraph_status fusegraph_problem_create(int p, const char* const* labels, const double* S,
                                          const double* z, fusegraph_problem** out) {
  if (!S || !out) return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "S or out is NULL");
  return guarded([&] {
    const int m = fg::edge_count(p);
    fg::Matrix cov = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                                    Eigen::RowMajor>>(S, p, p);
    auto problem = std::make_unique<fusegraph_problem>();
    problem->labels = copy_labels(labels, p);
    if (z) {
      problem->data = fg::ProblemData(std::move(cov), Eigen::Map<const fg::Vector>(z, m));
      problem->has_side_info = true;
    } else {
      problem->data = fg::ProblemData(std::move(cov));
    }
    *out = problem.release();
    return FUSEGRAPH_OK;
  });
}

fusegraph_status fusegraph_problem_from_signal_array(int p, int n, const double* X,
                                                     const char* const* labels, int center,
                                                     fusegraph_problem** out) {
  if (!X || !out) return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "X or out is NULL");
  return guarded([&] {
    if (n < 1) throw fg::Error(fg::ErrorCode::invalid_argument, "sample count must be >= 1");
    fg::Matrix signals = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                                        Eigen::RowMajor>>(X, p, n);
    auto problem = std::make_unique<fusegraph_problem>();
    problem->labels = copy_labels(labels, p);
    problem->data = fg::ProblemData(fg::sample_covariance(signals, center != 0));
    *out = problem.release();
    return FUSEGRAPH_OK;
  });
}

fusegraph_status fusegraph_problem_from_prices_csv(const char* path, int center,
                                                   fusegraph_problem** out) {
  if (!path || !out) return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "path or out is NULL");
  return guarded([&] {
    const fg::PricePanel panel = fg::read_prices_csv(path);
    const fg::Matrix X = fg::log_returns(panel);
    auto problem = std::make_unique<fusegraph_problem>();
    problem->labels = panel.labels;
    problem->data = fg::ProblemData(fg::sample_covariance(X, center != 0));
    *out = problem.release();
    return FUSEGRAPH_OK;
  });
}

fusegraph_status fusegraph_problem_from_signals_csv(const char* path, int center,
                                                    fusegraph_problem** out) {
  if (!path || !out) return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "path or out is NULL");
  return guarded([&] {
    const fg::SignalMatrix signals = fg::read_signals_csv(path);
    auto problem = std::make_unique<fusegraph_problem>();
    problem->labels = signals.labels;
    problem->data = fg::ProblemData(fg::sample_covariance(signals.X, center != 0));
    *out = problem.release();
    return FUSEGRAPH_OK;
  });
}

fusegraph_status fusegraph_problem_set_embeddings_csv(fusegraph_problem* problem,
                                                      const char* path) {
  if (!problem || !path) return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "problem or path is NULL");
  return guarded([&] {
    const fg::EmbeddingSet emb =
        fg::align_to_labels(fg::read_embeddings_csv(path), problem->labels);
    problem->data.z = fg::pairwise_sq_dists(emb);
    problem->has_side_info = true;
    return FUSEGRAPH_OK;
  });
}

fusegraph_status fusegraph_problem_set_distances_csv(fusegraph_problem* problem,
                                                     const char* path) {
  if (!problem || !path) return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "problem or path is NULL");
  return guarded([&] {
    const fg::DistanceMatrix dm =
        fg::align_to_labels(fg::read_distances_csv(path), problem->labels);
    problem->data.z = fg::distance_vector(dm);
    problem->has_side_info = true;
    return FUSEGRAPH_OK;
  });
}

fusegraph_status fusegraph_problem_set_distance_array(fusegraph_problem* problem, const double* z,
                                                      int m) {
  if (!problem || !z) return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "problem or z is NULL");
  return guarded([&] {
    if (m != fg::edge_count(problem->data.p))
      throw fg::Error(fg::ErrorCode::invalid_argument, "distance vector length must be p(p-1)/2");
    fg::Vector zv = Eigen::Map<const fg::Vector>(z, m);
    for (int k = 0; k < m; ++k)
      if (!(zv[k] >= 0.0))
        throw fg::Error(fg::ErrorCode::invalid_argument, "distances must be nonnegative");
    problem->data.z = std::move(zv);
    problem->has_side_info = true;
    return FUSEGRAPH_OK;
  });
}

int fusegraph_problem_node_count(const fusegraph_problem* problem) {
  return problem ? problem->data.p : 0;
}

int fusegraph_problem_edge_count(const fusegraph_problem* problem) {
  return problem ? static_cast<int>(problem->data.z.size()) : 0;
}

const char* fusegraph_problem_node_label(const fusegraph_problem* problem, int index_1based) {
  if (!problem || index_1based < 1 || index_1based > problem->data.p) return nullptr;
  return problem->labels[index_1based - 1].c_str();
}

int fusegraph_problem_has_side_info(const fusegraph_problem* problem) {
  return problem && problem->has_side_info ? 1 : 0;
}

fusegraph_status fusegraph_problem_sigma2_heuristic(const fusegraph_problem* problem,
                                                    const char* method, double* sigma2) {
  if (!problem || !method || !sigma2)
    return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "problem, method or sigma2 is NULL");
  return guarded([&] {
    if (!problem->has_side_info)
      throw fg::Error(fg::ErrorCode::invalid_argument,
                      "no side information attached; cannot derive sigma2");
    fg::Sigma2Method m;
    if (std::strcmp(method, "median") == 0)
      m = fg::Sigma2Method::median;
    else if (std::strcmp(method, "mean") == 0)
      m = fg::Sigma2Method::mean;
    else
      throw fg::Error(fg::ErrorCode::invalid_argument, "sigma2 method must be 'median' or 'mean'");
    *sigma2 = fg::sigma2_heuristic(problem->data.z, m);
    return FUSEGRAPH_OK;
  });
}

void fusegraph_problem_destroy(fusegraph_problem* problem) { delete problem; }

/* ---------- config ---------- */

fusegraph_status fusegraph_config_create(fusegraph_config** out) {
  if (!out) return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "out is NULL");
  return guarded([&] {
    *out = new fusegraph_config();
    return FUSEGRAPH_OK;
  });
}

#define FUSEGRAPH_CONFIG_SETTER(name, expr)                                      \
  fusegraph_status name {                                                        \
    if (!config) return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "config is NULL"); \
    return guarded([&] {                                                         \
      expr;                                                                      \
      return FUSEGRAPH_OK;                                                       \
    });                                                                          \
  }

FUSEGRAPH_CONFIG_SETTER(fusegraph_config_set_alpha(fusegraph_config* config, double alpha), {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw fg::Error(fg::ErrorCode::invalid_argument, "alpha must lie in [0, 1]");
  config->hyper.alpha = alpha;
})

FUSEGRAPH_CONFIG_SETTER(fusegraph_config_set_sigma2(fusegraph_config* config, double sigma2), {
  if (!(sigma2 > 0.0)) throw fg::Error(fg::ErrorCode::invalid_argument, "sigma2 must be positive");
  config->hyper.sigma2 = sigma2;
})

FUSEGRAPH_CONFIG_SETTER(fusegraph_config_set_lambda(fusegraph_config* config, double lambda), {
  if (!(lambda >= 0.0))
    throw fg::Error(fg::ErrorCode::invalid_argument, "lambda must be nonnegative");
  config->hyper.lambda = lambda;
})

FUSEGRAPH_CONFIG_SETTER(fusegraph_config_set_scad_a(fusegraph_config* config, double scad_a), {
  if (!(scad_a > 2.0)) throw fg::Error(fg::ErrorCode::invalid_argument, "scad_a must exceed 2");
  config->hyper.scad_a = scad_a;
})

FUSEGRAPH_CONFIG_SETTER(fusegraph_config_set_epsilon(fusegraph_config* config, double epsilon), {
  if (!(epsilon > 0.0)) throw fg::Error(fg::ErrorCode::invalid_argument, "epsilon must be positive");
  config->solver.epsilon = epsilon;
})

FUSEGRAPH_CONFIG_SETTER(
    fusegraph_config_set_max_iterations(fusegraph_config* config, int max_iterations), {
      if (max_iterations < 1)
        throw fg::Error(fg::ErrorCode::invalid_argument, "maxiter must be >= 1");
      config->solver.max_iterations = max_iterations;
    })

FUSEGRAPH_CONFIG_SETTER(fusegraph_config_set_weight_floor(fusegraph_config* config, double floor), {
  if (!(floor > 0.0))
    throw fg::Error(fg::ErrorCode::invalid_argument, "weight floor must be positive");
  config->solver.weight_floor = floor;
})

FUSEGRAPH_CONFIG_SETTER(fusegraph_config_set_weight_cap(fusegraph_config* config, double cap), {
  if (!(cap > 0.0)) throw fg::Error(fg::ErrorCode::invalid_argument, "weight cap must be positive");
  config->solver.weight_cap = cap;
})

fusegraph_status fusegraph_config_set_cubic_method(fusegraph_config* config, const char* method) {
  if (!config || !method) return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "config or method is NULL");
  return guarded([&] {
    if (std::strcmp(method, "companion") == 0)
      config->solver.cubic_method = fg::CubicMethod::companion_matrix;
    else if (std::strcmp(method, "bisection") == 0)
      config->solver.cubic_method = fg::CubicMethod::bisection;
    else
      throw fg::Error(fg::ErrorCode::invalid_argument,
                      "cubic method must be 'companion' or 'bisection'");
    return FUSEGRAPH_OK;
  });
}

fusegraph_status fusegraph_config_set_initial_weights(fusegraph_config* config, const double* w,
                                                      int m) {
  if (!config || !w) return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "config or w is NULL");
  return guarded([&] {
    fg::Vector init = Eigen::Map<const fg::Vector>(w, m);
    for (int k = 0; k < m; ++k)
      if (!(init[k] > 0.0))
        throw fg::Error(fg::ErrorCode::invalid_argument, "initial weights must be positive");
    config->solver.w_init = std::move(init);
    return FUSEGRAPH_OK;
  });
}

void fusegraph_config_destroy(fusegraph_config* config) { delete config; }

/* ---------- solve ---------- */

fusegraph_status fusegraph_learn(const fusegraph_problem* problem, const fusegraph_config* config,
                                 fusegraph_result** out) {
  if (!problem || !config || !out)
    return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "problem, config or out is NULL");
  return guarded([&] {
    if (config->hyper.alpha < 1.0 && !problem->has_side_info)
      throw fg::Error(fg::ErrorCode::invalid_argument,
                      "alpha < 1 requires side information (embeddings or distances)");
    auto [w, trace] = fg::run_mm(problem->data, config->hyper, config->solver);
    *out = new fusegraph_result{std::move(w), std::move(trace)};
    return FUSEGRAPH_OK;
  });
}

int fusegraph_result_weight_count(const fusegraph_result* result) {
  return result ? result->weights.edge_count() : 0;
}

fusegraph_status fusegraph_result_weights(const fusegraph_result* result, double* w) {
  if (!result || !w) return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "result or w is NULL");
  Eigen::Map<fg::Vector>(w, result->weights.values.size()) = result->weights.values;
  return FUSEGRAPH_OK;
}

int fusegraph_result_iterations(const fusegraph_result* result) {
  return result ? result->trace.iterations() : 0;
}

int fusegraph_result_converged(const fusegraph_result* result) {
  return result && result->trace.termination == fg::Termination::converged ? 1 : 0;
}

fusegraph_status fusegraph_result_final_objective(const fusegraph_result* result, double* value) {
  if (!result || !value) return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "result or value is NULL");
  *value = result->trace.final_objective();
  return FUSEGRAPH_OK;
}

fusegraph_status fusegraph_result_final_delta(const fusegraph_result* result, double* value) {
  if (!result || !value) return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "result or value is NULL");
  *value = result->trace.final_delta_norm();
  return FUSEGRAPH_OK;
}

int fusegraph_result_trace_size(const fusegraph_result* result) {
  return result ? static_cast<int>(result->trace.records.size()) : 0;
}

fusegraph_status fusegraph_result_trace_row(const fusegraph_result* result, int row,
                                            int* iteration, double* objective, double* delta_norm,
                                            double* millis) {
  if (!result) return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "result is NULL");
  if (row < 0 || row >= static_cast<int>(result->trace.records.size()))
    return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "trace row out of range");
  const fg::TraceRecord& rec = result->trace.records[row];
  if (iteration) *iteration = rec.iteration;
  if (objective) *objective = rec.objective;
  if (delta_norm) *delta_norm = rec.delta_norm;
  if (millis) *millis = rec.millis;
  return FUSEGRAPH_OK;
}

fusegraph_status fusegraph_result_write_trace_csv(const fusegraph_result* result,
                                                  const char* path) {
  if (!result || !path) return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "result or path is NULL");
  return guarded([&] {
    fg::write_text_file(path, fg::trace_to_csv(result->trace));
    return FUSEGRAPH_OK;
  });
}

void fusegraph_result_destroy(fusegraph_result* result) { delete result; }

/* ---------- graph ---------- */

fusegraph_status fusegraph_graph_from_result(const fusegraph_problem* problem,
                                             const fusegraph_config* config,
                                             const fusegraph_result* result, double threshold,
                                             fusegraph_graph** out) {
  if (!problem || !config || !result || !out)
    return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "problem, config, result or out is NULL");
  return guarded([&] {
    fg::SolveSummary summary;
    summary.iterations = result->trace.iterations();
    summary.converged = result->trace.termination == fg::Termination::converged;
    summary.final_objective = result->trace.final_objective();
    summary.final_delta_norm = result->trace.final_delta_norm();
    *out = new fusegraph_graph{
        fg::make_graph(problem->labels, result->weights, threshold, config->hyper, summary)};
    return FUSEGRAPH_OK;
  });
}

fusegraph_status fusegraph_graph_load(const char* path, fusegraph_graph** out) {
  if (!path || !out) return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "path or out is NULL");
  return guarded([&] {
    *out = new fusegraph_graph{fg::read_graph(path)};
    return FUSEGRAPH_OK;
  });
}

fusegraph_status fusegraph_graph_save(const fusegraph_graph* graph, const char* path) {
  if (!graph || !path) return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "graph or path is NULL");
  return guarded([&] {
    fg::write_graph(graph->graph, path);
    return FUSEGRAPH_OK;
  });
}

fusegraph_status fusegraph_graph_save_edge_csv(const fusegraph_graph* graph, const char* path) {
  if (!graph || !path) return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "graph or path is NULL");
  return guarded([&] {
    fg::write_edge_csv(graph->graph, path);
    return FUSEGRAPH_OK;
  });
}

int fusegraph_graph_node_count(const fusegraph_graph* graph) {
  return graph ? static_cast<int>(graph->graph.nodes.size()) : 0;
}

int fusegraph_graph_edge_count(const fusegraph_graph* graph) {
  return graph ? static_cast<int>(graph->graph.edges.size()) : 0;
}

const char* fusegraph_graph_node_label(const fusegraph_graph* graph, int index_1based) {
  if (!graph || index_1based < 1 ||
      index_1based > static_cast<int>(graph->graph.nodes.size()))
    return nullptr;
  return graph->graph.nodes[index_1based - 1].c_str();
}

fusegraph_status fusegraph_graph_edge(const fusegraph_graph* graph, int index_1based,
                                      const char** i, const char** j, double* weight) {
  if (!graph) return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "graph is NULL");
  if (index_1based < 1 || index_1based > static_cast<int>(graph->graph.edges.size()))
    return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "edge index out of range");
  const fg::GraphEdge& e = graph->graph.edges[index_1based - 1];
  if (i) *i = e.i.c_str();
  if (j) *j = e.j.c_str();
  if (weight) *weight = e.weight;
  return FUSEGRAPH_OK;
}

void fusegraph_graph_destroy(fusegraph_graph* graph) { delete graph; }

/* ---------- evaluation ---------- */

fusegraph_status fusegraph_partition_load(const char* path, fusegraph_partition** out) {
  if (!path || !out) return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "path or out is NULL");
  return guarded([&] {
    *out = new fusegraph_partition{fg::partition_from_rows(fg::read_labels_csv(path))};
    return FUSEGRAPH_OK;
  });
}

void fusegraph_partition_destroy(fusegraph_partition* partition) { delete partition; }

fusegraph_status fusegraph_eval_graph(const fusegraph_graph* graph,
                                      const fusegraph_partition* partition, double threshold,
                                      int use_detected_partition, double* f_score,
                                      double* modularity) {
  if (!graph || !partition || !f_score || !modularity)
    return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "graph, partition or outputs are NULL");
  return guarded([&] {
    const fg::WeightVector w = fg::to_weight_vector(graph->graph);
    const fg::EdgeSet truth = fg::sector_block_truth(graph->graph.nodes, partition->partition);
    *f_score = fg::f_score(fg::binarize(w, threshold), truth);
    try {
      const fg::Partition& scored =
          use_detected_partition
              ? fg::components_clustering(w, graph->graph.nodes, threshold)
              : partition->partition;
      *modularity = fg::modularity(w, graph->graph.nodes, scored);
    } catch (const fg::Error& e) {
      if (e.code() != fg::ErrorCode::degenerate_input) throw;
      *modularity = std::nan("");
    }
    return FUSEGRAPH_OK;
  });
}

/* ---------- sweep ---------- */

fusegraph_status fusegraph_sweep(const fusegraph_problem* problem, const fusegraph_config* config,
                                 const double* alphas, int n_alphas, const double* lambdas,
                                 int n_lambdas, const fusegraph_partition* partition,
                                 double threshold, int jobs, fusegraph_report** out) {
  if (!problem || !config || !alphas || !partition || !out)
    return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "required argument is NULL");
  if (n_alphas < 1) return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "need at least one alpha");
  return guarded([&] {
    bool needs_side_info = false;
    for (int a = 0; a < n_alphas; ++a)
      if (alphas[a] < 1.0) needs_side_info = true;
    if (needs_side_info && !problem->has_side_info)
      throw fg::Error(fg::ErrorCode::invalid_argument,
                      "alpha < 1 in the grid requires side information");
    std::vector<double> av(alphas, alphas + n_alphas);
    std::vector<double> lv;
    if (lambdas && n_lambdas > 0) lv.assign(lambdas, lambdas + n_lambdas);
    auto rows = fg::alpha_sweep(problem->data, problem->labels, config->hyper, av, lv,
                                partition->partition, threshold, config->solver,
                                jobs < 1 ? 1 : jobs);
    *out = new fusegraph_report{std::move(rows)};
    return FUSEGRAPH_OK;
  });
}

int fusegraph_report_row_count(const fusegraph_report* report) {
  return report ? static_cast<int>(report->rows.size()) : 0;
}

fusegraph_status fusegraph_report_row(const fusegraph_report* report, int row, double* alpha,
                                      double* lambda, double* f_score, double* modularity,
                                      int* iterations, double* millis) {
  if (!report) return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "report is NULL");
  if (row < 0 || row >= static_cast<int>(report->rows.size()))
    return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "report row out of range");
  const fg::SweepRow& r = report->rows[row];
  if (alpha) *alpha = r.alpha;
  if (lambda) *lambda = r.lambda;
  if (f_score) *f_score = r.f_score;
  if (modularity) *modularity = r.modularity;
  if (iterations) *iterations = r.iterations;
  if (millis) *millis = r.millis;
  return FUSEGRAPH_OK;
}

const char* fusegraph_report_row_termination(const fusegraph_report* report, int row) {
  if (!report || row < 0 || row >= static_cast<int>(report->rows.size())) return nullptr;
  return report->rows[row].termination.c_str();
}

fusegraph_status fusegraph_report_save_csv(const fusegraph_report* report, const char* path,
                                           int include_timings) {
  if (!report || !path) return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "report or path is NULL");
  return guarded([&] {
    fg::write_text_file(path, fg::report_to_csv(report->rows, include_timings != 0));
    return FUSEGRAPH_OK;
  });
}

void fusegraph_report_destroy(fusegraph_report* report) { delete report; }

/* ---------- synth ---------- */

void fusegraph_synth_config_init(fusegraph_synth_config* config) {
  if (!config) return;
  const fg::SynthConfig defaults;
  config->p = defaults.p;
  config->n_clusters = defaults.n_clusters;
  config->cluster_sizes = nullptr;
  config->intra_edge_prob = defaults.intra_edge_prob;
  config->intra_weight_lo = defaults.intra_weight_lo;
  config->intra_weight_hi = defaults.intra_weight_hi;
  config->inter_edge_prob = defaults.inter_edge_prob;
  config->inter_weight_lo = defaults.inter_weight_lo;
  config->inter_weight_hi = defaults.inter_weight_hi;
  config->confusion_a = defaults.confusion_a;
  config->confusion_b = defaults.confusion_b;
  config->confusion_edge_prob = defaults.confusion_edge_prob;
  config->n_samples = defaults.n_samples;
  config->embed_dim = defaults.embed_dim;
  config->intra_sq_dist = defaults.intra_sq_dist;
  config->inter_sq_dist = defaults.inter_sq_dist;
  config->metadata_noise = defaults.metadata_noise;
  config->seed = defaults.seed;
  config->max_retries = defaults.max_retries;
}

fusegraph_status fusegraph_synth_generate(const fusegraph_synth_config* config,
                                          fusegraph_instance** out) {
  if (!config || !out) return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "config or out is NULL");
  return guarded([&] {
    fg::SynthConfig cfg;
    cfg.p = config->p;
    cfg.n_clusters = config->n_clusters;
    if (config->cluster_sizes)
      cfg.cluster_sizes.assign(config->cluster_sizes, config->cluster_sizes + config->n_clusters);
    cfg.intra_edge_prob = config->intra_edge_prob;
    cfg.intra_weight_lo = config->intra_weight_lo;
    cfg.intra_weight_hi = config->intra_weight_hi;
    cfg.inter_edge_prob = config->inter_edge_prob;
    cfg.inter_weight_lo = config->inter_weight_lo;
    cfg.inter_weight_hi = config->inter_weight_hi;
    cfg.confusion_a = config->confusion_a;
    cfg.confusion_b = config->confusion_b;
    cfg.confusion_edge_prob = config->confusion_edge_prob;
    cfg.n_samples = config->n_samples;
    cfg.embed_dim = config->embed_dim;
    cfg.intra_sq_dist = config->intra_sq_dist;
    cfg.inter_sq_dist = config->inter_sq_dist;
    cfg.metadata_noise = config->metadata_noise;
    cfg.seed = config->seed;
    cfg.max_retries = config->max_retries;
    *out = new fusegraph_instance{fg::generate_instance(cfg)};
    return FUSEGRAPH_OK;
  });
}

int fusegraph_instance_node_count(const fusegraph_instance* instance) {
  return instance ? instance->instance.truth.p : 0;
}

int fusegraph_instance_sample_count(const fusegraph_instance* instance) {
  return instance ? static_cast<int>(instance->instance.signals.cols()) : 0;
}

fusegraph_status fusegraph_instance_write_signals_csv(const fusegraph_instance* instance,
                                                      const char* path) {
  if (!instance || !path) return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "instance or path is NULL");
  return guarded([&] {
    fg::write_signals_csv(instance->instance.labels, instance->instance.signals, path);
    return FUSEGRAPH_OK;
  });
}

fusegraph_status fusegraph_instance_write_embeddings_csv(const fusegraph_instance* instance,
                                                         const char* path) {
  if (!instance || !path) return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "instance or path is NULL");
  return guarded([&] {
    fg::write_embeddings_csv(instance->instance.embeddings, path);
    return FUSEGRAPH_OK;
  });
}

fusegraph_status fusegraph_instance_write_labels_csv(const fusegraph_instance* instance,
                                                     const char* path) {
  if (!instance || !path) return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "instance or path is NULL");
  return guarded([&] {
    fg::write_labels_csv(instance->instance.cluster_rows, path);
    return FUSEGRAPH_OK;
  });
}

fusegraph_status fusegraph_instance_truth_graph(const fusegraph_instance* instance,
                                                fusegraph_graph** out) {
  if (!instance || !out) return fail(FUSEGRAPH_ERROR_INVALID_ARGUMENT, "instance or out is NULL");
  return guarded([&] {
    *out = new fusegraph_graph{
        fg::make_graph(instance->instance.labels, instance->instance.truth, 0.0)};
    return FUSEGRAPH_OK;
  });
}

void fusegraph_instance_destroy(fusegraph_instance* instance) { delete instance; }

}  // extern "C"
