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

// Command-line front end: ingestion -> solver -> evaluation -> export.
// Links the shared library through include/fusegraph.h only.

#include <fusegraph.h>

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitSolverError = 3;

int exit_code_for(fusegraph_status status) {
  switch (status) {
    case FUSEGRAPH_OK:
      return kExitOk;
    case FUSEGRAPH_ERROR_NOT_POSITIVE_DEFINITE:
    case FUSEGRAPH_ERROR_INFEASIBLE_UPDATE:
    case FUSEGRAPH_ERROR_GENERATION:
    case FUSEGRAPH_ERROR_UNKNOWN:
      return kExitSolverError;
    default:
      return kExitInputError;
  }
}

// Thrown on any failed library call; carries the mapped process exit code.
struct CliError {
  int exit_code;
  std::string message;
};

void check(fusegraph_status status, const std::string& context) {
  if (status == FUSEGRAPH_OK) return;
  throw CliError{exit_code_for(status),
                 context + ": " + fusegraph_last_error_message() + " [" +
                     fusegraph_status_name(status) + "]"};
}

void input_error(const std::string& message) { throw CliError{kExitInputError, message}; }

// RAII wrappers over the opaque handles.
template <typename T, void (*Destroy)(T*)>
struct Handle {
  T* ptr = nullptr;
  Handle() = default;
  explicit Handle(T* p) : ptr(p) {}
  ~Handle() { Destroy(ptr); }
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  Handle(Handle&& other) noexcept : ptr(other.ptr) { other.ptr = nullptr; }
  Handle& operator=(Handle&& other) noexcept {
    if (this != &other) {
      Destroy(ptr);
      ptr = other.ptr;
      other.ptr = nullptr;
    }
    return *this;
  }
  T** out() { return &ptr; }
  T* get() const { return ptr; }
};

using ProblemHandle = Handle<fusegraph_problem, fusegraph_problem_destroy>;
using ConfigHandle = Handle<fusegraph_config, fusegraph_config_destroy>;
using ResultHandle = Handle<fusegraph_result, fusegraph_result_destroy>;
using GraphHandle = Handle<fusegraph_graph, fusegraph_graph_destroy>;
using PartitionHandle = Handle<fusegraph_partition, fusegraph_partition_destroy>;
using ReportHandle = Handle<fusegraph_report, fusegraph_report_destroy>;
using InstanceHandle = Handle<fusegraph_instance, fusegraph_instance_destroy>;

std::string sha256_hex(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) input_error("cannot open " + path + " for digest");
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                              EVP_MD_CTX_free);
  EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr);
  std::vector<char> buf(1 << 16);
  while (in.read(buf.data(), buf.size()) || in.gcount() > 0)
    EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<size_t>(in.gcount()));
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), digest, &len);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) input_error("cannot write " + path);
  out << contents;
}

// ---------- shared ingestion flags ----------

struct IngestOptions {
  std::string prices;
  std::string signals;
  std::string embeddings;
  std::string distances;
  bool center = false;

  void add_flags(CLI::App* cmd) {
    cmd->add_option("--prices", prices, "closing-price CSV (node,<date>,...)");
    cmd->add_option("--signals", signals, "signal matrix CSV (node,...)");
    cmd->add_option("--embeddings", embeddings, "node embedding CSV (node,e0,...)");
    cmd->add_option("--distances", distances, "precomputed distance matrix CSV");
    cmd->add_flag("--center", center, "subtract row means before the covariance");
  }

  ProblemHandle load(double min_alpha, json& manifest_inputs) const {
    if (prices.empty() == signals.empty())
      input_error("exactly one of --prices or --signals is required");
    if (!embeddings.empty() && !distances.empty())
      input_error("--embeddings and --distances are mutually exclusive");
    if (min_alpha < 1.0 && embeddings.empty() && distances.empty())
      input_error("alpha < 1 uses metadata: pass --embeddings or --distances");

    ProblemHandle problem;
    if (!prices.empty()) {
      check(fusegraph_problem_from_prices_csv(prices.c_str(), center ? 1 : 0, problem.out()),
            prices);
      manifest_inputs.push_back({{"role", "prices"}, {"path", prices}, {"sha256", sha256_hex(prices)}});
    } else {
      check(fusegraph_problem_from_signals_csv(signals.c_str(), center ? 1 : 0, problem.out()),
            signals);
      manifest_inputs.push_back(
          {{"role", "signals"}, {"path", signals}, {"sha256", sha256_hex(signals)}});
    }
    if (!embeddings.empty()) {
      check(fusegraph_problem_set_embeddings_csv(problem.get(), embeddings.c_str()), embeddings);
      manifest_inputs.push_back(
          {{"role", "embeddings"}, {"path", embeddings}, {"sha256", sha256_hex(embeddings)}});
    }
    if (!distances.empty()) {
      check(fusegraph_problem_set_distances_csv(problem.get(), distances.c_str()), distances);
      manifest_inputs.push_back(
          {{"role", "distances"}, {"path", distances}, {"sha256", sha256_hex(distances)}});
    }
    return problem;
  }
};

struct SolverOptions {
  std::string sigma2 = "median";  // numeric value, "median" or "mean"
  double lambda = 0.0;
  double scad_a = 3.7;
  double epsilon = 1e-6;
  int maxiter = 1000;
  std::string cubic = "companion";
  double weight_floor = 1e-10;
  double weight_cap = 1e6;

  void add_flags(CLI::App* cmd) {
    cmd->add_option("--sigma2", sigma2, "kernel width: value, 'median' or 'mean'")
        ->capture_default_str();
    cmd->add_option("--lambda", lambda, "SCAD sparsity level")->capture_default_str();
    cmd->add_option("--scad-a", scad_a, "SCAD shape parameter (> 2)")->capture_default_str();
    cmd->add_option("--epsilon", epsilon, "convergence threshold on ||dw||")
        ->capture_default_str();
    cmd->add_option("--maxiter", maxiter, "iteration cap")->capture_default_str();
    cmd->add_option("--cubic", cubic, "cubic solver: companion or bisection")
        ->capture_default_str();
    cmd->add_option("--weight-floor", weight_floor, "reference-iterate floor")
        ->capture_default_str();
    cmd->add_option("--weight-cap", weight_cap, "per-edge weight cap")->capture_default_str();
  }

  // Resolves sigma2 (heuristics need attached metadata) and fills the config.
  ConfigHandle make_config(const fusegraph_problem* problem, double alpha, json& params) const {
    ConfigHandle config;
    check(fusegraph_config_create(config.out()), "config");
    check(fusegraph_config_set_alpha(config.get(), alpha), "--alpha");

    double sigma2_value = 1.0;
    std::string sigma2_source = sigma2;
    if (sigma2 == "median" || sigma2 == "mean") {
      if (fusegraph_problem_has_side_info(problem)) {
        check(fusegraph_problem_sigma2_heuristic(problem, sigma2.c_str(), &sigma2_value),
              "--sigma2 " + sigma2);
      } else {
        // alpha = 1 never evaluates the kernel term; keep the default width.
        sigma2_source = "unused";
      }
    } else {
      try {
        size_t used = 0;
        sigma2_value = std::stod(sigma2, &used);
        if (used != sigma2.size()) throw std::invalid_argument(sigma2);
      } catch (const std::exception&) {
        input_error("--sigma2 expects a number, 'median' or 'mean', got '" + sigma2 + "'");
      }
      sigma2_source = "explicit";
    }
    check(fusegraph_config_set_sigma2(config.get(), sigma2_value), "--sigma2");
    check(fusegraph_config_set_lambda(config.get(), lambda), "--lambda");
    check(fusegraph_config_set_scad_a(config.get(), scad_a), "--scad-a");
    check(fusegraph_config_set_epsilon(config.get(), epsilon), "--epsilon");
    check(fusegraph_config_set_max_iterations(config.get(), maxiter), "--maxiter");
    check(fusegraph_config_set_cubic_method(config.get(), cubic.c_str()), "--cubic");
    check(fusegraph_config_set_weight_floor(config.get(), weight_floor), "--weight-floor");
    check(fusegraph_config_set_weight_cap(config.get(), weight_cap), "--weight-cap");

    params["sigma2"] = sigma2_value;
    params["sigma2_source"] = sigma2_source;
    params["lambda"] = lambda;
    params["scad_a"] = scad_a;
    params["epsilon"] = epsilon;
    params["maxiter"] = maxiter;
    params["cubic_method"] = cubic;
    params["weight_floor"] = weight_floor;
    params["weight_cap"] = weight_cap;
    return config;
  }
};

json manifest_skeleton(const std::string& command) {
  json manifest;
  manifest["tool"] = "fusegraph";
  manifest["version"] = fusegraph_version();
  manifest["command"] = command;
  manifest["inputs"] = json::array();
  manifest["outputs"] = json::array();
  manifest["parameters"] = json::object();
  return manifest;
}

void emit_manifest(json& manifest, const std::string& path) {
  write_file(path, manifest.dump(2) + "\n");
}

// ---------- grid parsing ----------

std::vector<double> parse_alpha_grid(const std::string& spec) {
  // start:end:step, inclusive on both ends.
  double start, end, step;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &start, &end, &step) != 3)
    input_error("--alpha-grid expects start:end:step, got '" + spec + "'");
  if (step <= 0.0 || end < start) input_error("--alpha-grid needs step > 0 and end >= start");
  const int count = static_cast<int>(std::round((end - start) / step)) + 1;
  std::vector<double> grid;
  for (int i = 0; i < count; ++i) {
    double v = start + i * step;
    if (std::abs(v - end) < 1e-12) v = end;
    if (v > end + 1e-12) break;
    grid.push_back(v);
  }
  if (!(grid.front() >= 0.0 && grid.back() <= 1.0))
    input_error("--alpha-grid values must lie in [0, 1]");
  return grid;
}

std::vector<double> parse_lambda_grid(const std::string& spec) {
  // log:lo:hi:count or lin:lo:hi:count.
  char kind[8];
  double lo, hi;
  int count;
  if (std::sscanf(spec.c_str(), "%7[a-z]:%lf:%lf:%d", kind, &lo, &hi, &count) != 4)
    input_error("--lambda-grid expects log:lo:hi:count or lin:lo:hi:count, got '" + spec + "'");
  const std::string k(kind);
  if (count < 1 || hi < lo) input_error("--lambda-grid needs count >= 1 and hi >= lo");
  std::vector<double> grid;
  if (k == "log") {
    if (lo <= 0.0) input_error("--lambda-grid log spacing needs lo > 0");
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < count; ++i)
      grid.push_back(std::exp(count == 1 ? llo : llo + (lhi - llo) * i / (count - 1)));
  } else if (k == "lin") {
    for (int i = 0; i < count; ++i)
      grid.push_back(count == 1 ? lo : lo + (hi - lo) * i / (count - 1));
  } else {
    input_error("--lambda-grid spacing must be 'log' or 'lin'");
  }
  return grid;
}

// ---------- subcommands ----------

struct LearnArgs {
  IngestOptions ingest;
  SolverOptions solver;
  double alpha = 0.5;
  double threshold = 1e-4;
  std::string out;
  std::string edges_csv;
  std::string trace;
  std::string manifest_path;
};

int run_learn(const LearnArgs& args) {
  json manifest = manifest_skeleton("learn");
  ProblemHandle problem = args.ingest.load(args.alpha, manifest["inputs"]);
  manifest["parameters"]["alpha"] = args.alpha;
  manifest["parameters"]["threshold"] = args.threshold;
  manifest["parameters"]["center"] = args.ingest.center;
  ConfigHandle config =
      args.solver.make_config(problem.get(), args.alpha, manifest["parameters"]);

  const auto t0 = std::chrono::steady_clock::now();
  ResultHandle result;
  check(fusegraph_learn(problem.get(), config.get(), result.out()), "solver");
  const double millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  GraphHandle graph;
  check(fusegraph_graph_from_result(problem.get(), config.get(), result.get(), args.threshold,
                                    graph.out()),
        "graph extraction");
  check(fusegraph_graph_save(graph.get(), args.out.c_str()), args.out);
  manifest["outputs"].push_back({{"role", "graph"}, {"path", args.out}});

  if (!args.edges_csv.empty()) {
    check(fusegraph_graph_save_edge_csv(graph.get(), args.edges_csv.c_str()), args.edges_csv);
    manifest["outputs"].push_back({{"role", "edges_csv"}, {"path", args.edges_csv}});
  }
  if (!args.trace.empty()) {
    check(fusegraph_result_write_trace_csv(result.get(), args.trace.c_str()), args.trace);
    manifest["outputs"].push_back({{"role", "trace"}, {"path", args.trace}});
  }

  double objective = 0.0, delta = 0.0;
  check(fusegraph_result_final_objective(result.get(), &objective), "objective");
  check(fusegraph_result_final_delta(result.get(), &delta), "delta");
  manifest["solver"] = {{"iterations", fusegraph_result_iterations(result.get())},
                        {"converged", fusegraph_result_converged(result.get()) != 0},
                        {"final_objective", objective},
                        {"final_delta_norm", delta},
                        {"millis", millis}};
  const std::string manifest_path =
      args.manifest_path.empty() ? args.out + ".manifest.json" : args.manifest_path;
  emit_manifest(manifest, manifest_path);

  std::cout << "learned graph: " << fusegraph_graph_node_count(graph.get()) << " nodes, "
            << fusegraph_graph_edge_count(graph.get()) << " edges\n"
            << "iterations: " << fusegraph_result_iterations(result.get())
            << (fusegraph_result_converged(result.get()) ? " (converged)" : " (maxiter)") << "\n"
            << "objective: " << objective << "\n"
            << "wrote " << args.out << " and " << manifest_path << "\n";
  return kExitOk;
}

struct SweepArgs {
  IngestOptions ingest;
  SolverOptions solver;
  std::string alpha_grid = "0:1:0.1";
  std::string lambda_grid;
  std::string labels;
  double threshold = 1e-4;
  int jobs = 1;
  bool timings = false;
  std::string out;
  std::string manifest_path;
};

int run_sweep(const SweepArgs& args) {
  const std::vector<double> alphas = parse_alpha_grid(args.alpha_grid);
  std::vector<double> lambdas;
  if (!args.lambda_grid.empty()) lambdas = parse_lambda_grid(args.lambda_grid);
  if (args.labels.empty()) input_error("--labels is required for scoring");

  json manifest = manifest_skeleton("sweep");
  const double min_alpha = *std::min_element(alphas.begin(), alphas.end());
  ProblemHandle problem = args.ingest.load(min_alpha, manifest["inputs"]);
  PartitionHandle partition;
  check(fusegraph_partition_load(args.labels.c_str(), partition.out()), args.labels);
  manifest["inputs"].push_back(
      {{"role", "labels"}, {"path", args.labels}, {"sha256", sha256_hex(args.labels)}});

  ConfigHandle config =
      args.solver.make_config(problem.get(), min_alpha, manifest["parameters"]);
  manifest["parameters"]["alpha_grid"] = alphas;
  manifest["parameters"]["lambda_grid"] = lambdas;
  manifest["parameters"]["threshold"] = args.threshold;
  manifest["parameters"]["jobs"] = args.jobs;
  manifest["parameters"]["center"] = args.ingest.center;

  ReportHandle report;
  check(fusegraph_sweep(problem.get(), config.get(), alphas.data(),
                        static_cast<int>(alphas.size()),
                        lambdas.empty() ? nullptr : lambdas.data(),
                        static_cast<int>(lambdas.size()), partition.get(), args.threshold,
                        args.jobs, report.out()),
        "sweep");
  check(fusegraph_report_save_csv(report.get(), args.out.c_str(), args.timings ? 1 : 0),
        args.out);
  manifest["outputs"].push_back({{"role", "report"}, {"path", args.out}});
  const std::string manifest_path =
      args.manifest_path.empty() ? args.out + ".manifest.json" : args.manifest_path;
  emit_manifest(manifest, manifest_path);

  // Human-readable echo (timings included; the CSV stays deterministic).
  std::printf("%8s %10s %9s %11s %6s %9s  %s\n", "alpha", "lambda", "f_score", "modularity",
              "iters", "millis", "termination");
  for (int r = 0; r < fusegraph_report_row_count(report.get()); ++r) {
    double alpha, lambda, fs, mod, millis;
    int iters;
    check(fusegraph_report_row(report.get(), r, &alpha, &lambda, &fs, &mod, &iters, &millis),
          "report row");
    std::printf("%8.3f %10.5f %9.4f %11.4f %6d %9.1f  %s\n", alpha, lambda, fs, mod, iters,
                millis, fusegraph_report_row_termination(report.get(), r));
  }
  std::cout << "wrote " << args.out << " and " << manifest_path << "\n";
  return kExitOk;
}

struct EvalArgs {
  std::string graph;
  std::string labels;
  double threshold = 1e-4;
  bool detected = false;
  bool as_json = false;
  std::string manifest_path;
};

int run_eval(const EvalArgs& args) {
  GraphHandle graph;
  check(fusegraph_graph_load(args.graph.c_str(), graph.out()), args.graph);
  PartitionHandle partition;
  check(fusegraph_partition_load(args.labels.c_str(), partition.out()), args.labels);

  double fs = 0.0, mod = 0.0;
  check(fusegraph_eval_graph(graph.get(), partition.get(), args.threshold,
                             args.detected ? 1 : 0, &fs, &mod),
        "eval");

  if (args.as_json) {
    json out;
    out["f_score"] = fs;
    out["modularity"] = mod;
    out["nodes"] = fusegraph_graph_node_count(graph.get());
    out["edges"] = fusegraph_graph_edge_count(graph.get());
    out["modularity_partition"] = args.detected ? "detected" : "truth";
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "f_score: " << fs << "\n"
              << "modularity: " << mod << "\n";
  }
  if (!args.manifest_path.empty()) {
    json manifest = manifest_skeleton("eval");
    manifest["inputs"].push_back(
        {{"role", "graph"}, {"path", args.graph}, {"sha256", sha256_hex(args.graph)}});
    manifest["inputs"].push_back(
        {{"role", "labels"}, {"path", args.labels}, {"sha256", sha256_hex(args.labels)}});
    manifest["parameters"]["threshold"] = args.threshold;
    manifest["parameters"]["modularity_partition"] = args.detected ? "detected" : "truth";
    manifest["results"] = {{"f_score", fs}, {"modularity", mod}};
    emit_manifest(manifest, args.manifest_path);
  }
  return kExitOk;
}

struct SynthArgs {
  fusegraph_synth_config config;
  std::vector<int> sizes;
  std::vector<int> confusion;  // two cluster ids
  std::string out_dir;
};

int run_synth(SynthArgs& args) {
  if (!args.sizes.empty()) {
    if (static_cast<int>(args.sizes.size()) != args.config.n_clusters)
      input_error("--sizes must list one size per cluster");
    args.config.cluster_sizes = args.sizes.data();
  }
  if (!args.confusion.empty()) {
    if (args.confusion.size() != 2) input_error("--confusion expects two cluster ids");
    args.config.confusion_a = args.confusion[0];
    args.config.confusion_b = args.confusion[1];
  }

  InstanceHandle instance;
  check(fusegraph_synth_generate(&args.config, instance.out()), "synth");

  std::filesystem::create_directories(args.out_dir);
  const auto in_dir = [&](const char* name) {
    return (std::filesystem::path(args.out_dir) / name).string();
  };
  const std::string signals = in_dir("signals.csv");
  const std::string embeddings = in_dir("embeddings.csv");
  const std::string labels = in_dir("labels.csv");
  const std::string truth = in_dir("truth_graph.json");
  check(fusegraph_instance_write_signals_csv(instance.get(), signals.c_str()), signals);
  check(fusegraph_instance_write_embeddings_csv(instance.get(), embeddings.c_str()), embeddings);
  check(fusegraph_instance_write_labels_csv(instance.get(), labels.c_str()), labels);
  GraphHandle truth_graph;
  check(fusegraph_instance_truth_graph(instance.get(), truth_graph.out()), "truth graph");
  check(fusegraph_graph_save(truth_graph.get(), truth.c_str()), truth);

  json manifest = manifest_skeleton("synth");
  manifest["parameters"] = {{"p", args.config.p},
                            {"clusters", args.config.n_clusters},
                            {"sizes", args.sizes},
                            {"intra_edge_prob", args.config.intra_edge_prob},
                            {"intra_weight", {args.config.intra_weight_lo, args.config.intra_weight_hi}},
                            {"inter_edge_prob", args.config.inter_edge_prob},
                            {"inter_weight", {args.config.inter_weight_lo, args.config.inter_weight_hi}},
                            {"confusion", {args.config.confusion_a, args.config.confusion_b}},
                            {"confusion_edge_prob", args.config.confusion_edge_prob},
                            {"n", args.config.n_samples},
                            {"embed_dim", args.config.embed_dim},
                            {"intra_sq_dist", args.config.intra_sq_dist},
                            {"inter_sq_dist", args.config.inter_sq_dist},
                            {"metadata_noise", args.config.metadata_noise},
                            {"max_retries", args.config.max_retries}};
  manifest["seed"] = args.config.seed;
  for (const std::string* path : {&signals, &embeddings, &labels, &truth})
    manifest["outputs"].push_back(
        {{"role", std::filesystem::path(*path).stem().string()}, {"path", *path},
         {"sha256", sha256_hex(*path)}});
  emit_manifest(manifest, in_dir("manifest.json"));

  std::cout << "wrote synthetic instance (" << fusegraph_instance_node_count(instance.get())
            << " nodes, " << fusegraph_instance_sample_count(instance.get()) << " samples) to "
            << args.out_dir << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fusegraph: sparse graph Laplacian learning from signals fused with metadata"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(fusegraph_version()));

  LearnArgs learn_args;
  auto* learn = app.add_subcommand("learn", "learn a graph from signals and metadata");
  learn_args.ingest.add_flags(learn);
  learn->add_option("--alpha", learn_args.alpha, "fusion weight in [0, 1]")->required();
  learn_args.solver.add_flags(learn);
  learn->add_option("--threshold", learn_args.threshold, "relative edge threshold")
      ->capture_default_str();
  learn->add_option("--out", learn_args.out, "output graph document")->required();
  learn->add_option("--edges-csv", learn_args.edges_csv, "also write a flat edge list");
  learn->add_option("--trace", learn_args.trace, "write the per-iteration solver trace");
  learn->add_option("--manifest", learn_args.manifest_path,
                    "manifest path (default <out>.manifest.json)");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "score a grid of alpha (and lambda) values");
  sweep_args.ingest.add_flags(sweep);
  sweep->add_option("--alpha-grid", sweep_args.alpha_grid, "start:end:step")
      ->capture_default_str();
  sweep->add_option("--lambda-grid", sweep_args.lambda_grid, "log:lo:hi:count or lin:lo:hi:count");
  sweep_args.solver.add_flags(sweep);
  sweep->add_option("--labels", sweep_args.labels, "ground-truth sector labels CSV")->required();
  sweep->add_option("--threshold", sweep_args.threshold, "relative edge threshold")
      ->capture_default_str();
  sweep->add_option("--jobs", sweep_args.jobs, "parallel solver instances")
      ->capture_default_str();
  sweep->add_flag("--timings", sweep_args.timings, "include a millis column in the CSV");
  sweep->add_option("--out", sweep_args.out, "output report CSV")->required();
  sweep->add_option("--manifest", sweep_args.manifest_path,
                    "manifest path (default <out>.manifest.json)");

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "score a saved graph against sector labels");
  eval->add_option("--graph", eval_args.graph, "graph document")->required();
  eval->add_option("--labels", eval_args.labels, "sector labels CSV")->required();
  eval->add_option("--threshold", eval_args.threshold, "relative edge threshold")
      ->capture_default_str();
  eval->add_flag("--detected", eval_args.detected,
                 "score modularity on detected components instead of the labels");
  eval->add_flag("--json", eval_args.as_json, "machine-readable output");
  eval->add_option("--manifest", eval_args.manifest_path, "optionally write a manifest");

  SynthArgs synth_args;
  fusegraph_synth_config_init(&synth_args.config);
  auto* synth = app.add_subcommand("synth", "generate a synthetic clustered instance");
  synth->add_option("--p", synth_args.config.p, "node count")->capture_default_str();
  synth->add_option("--clusters", synth_args.config.n_clusters, "cluster count")
      ->capture_default_str();
  synth->add_option("--sizes", synth_args.sizes, "explicit cluster sizes");
  synth->add_option("--n", synth_args.config.n_samples, "sample count")->capture_default_str();
  synth->add_option("--seed", synth_args.config.seed, "random seed")->capture_default_str();
  synth->add_option("--intra-prob", synth_args.config.intra_edge_prob,
                    "intra-cluster edge probability")
      ->capture_default_str();
  synth->add_option("--intra-w-lo", synth_args.config.intra_weight_lo, "intra weight lower bound")
      ->capture_default_str();
  synth->add_option("--intra-w-hi", synth_args.config.intra_weight_hi, "intra weight upper bound")
      ->capture_default_str();
  synth->add_option("--inter-prob", synth_args.config.inter_edge_prob,
                    "background inter-cluster edge probability")
      ->capture_default_str();
  synth->add_option("--inter-w-lo", synth_args.config.inter_weight_lo, "inter weight lower bound")
      ->capture_default_str();
  synth->add_option("--inter-w-hi", synth_args.config.inter_weight_hi, "inter weight upper bound")
      ->capture_default_str();
  synth->add_option("--confusion", synth_args.confusion,
                    "two cluster ids the signals cannot separate");
  synth->add_option("--confusion-prob", synth_args.config.confusion_edge_prob,
                    "edge probability between the confusion pair")
      ->capture_default_str();
  synth->add_option("--embed-dim", synth_args.config.embed_dim, "embedding dimension")
      ->capture_default_str();
  synth->add_option("--d-in", synth_args.config.intra_sq_dist, "intra-cluster squared distance")
      ->capture_default_str();
  synth->add_option("--d-out", synth_args.config.inter_sq_dist, "centroid squared distance")
      ->capture_default_str();
  synth->add_option("--noise", synth_args.config.metadata_noise, "metadata noise level in [0, 1]")
      ->capture_default_str();
  synth->add_option("--retries", synth_args.config.max_retries, "connectivity retry budget")
      ->capture_default_str();
  synth->add_option("--out-dir", synth_args.out_dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (learn->parsed()) return run_learn(learn_args);
    if (sweep->parsed()) return run_sweep(sweep_args);
    if (eval->parsed()) return run_eval(eval_args);
    if (synth->parsed()) return run_synth(synth_args);
  } catch (const CliError& e) {
    std::cerr << "fusegraph: " << e.message << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "fusegraph: " << e.what() << "\n";
    return kExitSolverError;
  }
  return kExitInputError;
}
