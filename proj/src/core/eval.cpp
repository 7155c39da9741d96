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

#include "core/eval.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

#include "core/format.hpp"

namespace fusegraph {

const std::string& Partition::at(const std::string& node) const {
  auto it = cluster_of.find(node);
  if (it == cluster_of.end())
    throw Error(ErrorCode::label_mismatch, "partition does not cover node '" + node + "'");
  return it->second;
}

Partition partition_from_rows(const std::vector<std::pair<std::string, std::string>>& rows) {
  Partition part;
  for (const auto& [node, cluster] : rows) part.cluster_of[node] = cluster;
  return part;
}

EdgeSet binarize(const WeightVector& w, double threshold) {
  w.validate();
  if (threshold < 0.0) throw Error(ErrorCode::invalid_argument, "threshold must be >= 0");
  EdgeSet set;
  set.p = w.p;
  const double cutoff = threshold * (w.edge_count() > 0 ? w.values.maxCoeff() : 0.0);
  for (int k = 0; k < w.edge_count(); ++k)
    if (w.values[k] > cutoff && w.values[k] > 0.0) set.edges.push_back(k);
  return set;
}

double f_score(const EdgeSet& estimated, const EdgeSet& truth) {
  if (estimated.p != truth.p)
    throw Error(ErrorCode::invalid_argument, "edge sets are over different node universes");
  if (estimated.edges.empty() && truth.edges.empty()) return 1.0;

  std::vector<int> a = estimated.edges;
  std::vector<int> b = truth.edges;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<int> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  const double tp = static_cast<double>(common.size());
  const double fp = static_cast<double>(a.size()) - tp;
  const double fn = static_cast<double>(b.size()) - tp;
  if (tp == 0.0 && fp == 0.0 && fn == 0.0) return 1.0;
  return 2.0 * tp / (2.0 * tp + fp + fn);
}

EdgeSet sector_block_truth(const std::vector<std::string>& nodes, const Partition& partition) {
  const int p = static_cast<int>(nodes.size());
  EdgeSet set;
  set.p = p;
  for_each_edge(p, [&](int k, int i, int j) {
    if (partition.at(nodes[i]) == partition.at(nodes[j])) set.edges.push_back(k);
  });
  return set;
}

double modularity(const WeightVector& w, const std::vector<std::string>& nodes,
                  const Partition& partition) {
  w.validate();
  if (nodes.size() != static_cast<size_t>(w.p))
    throw Error(ErrorCode::invalid_argument, "modularity: node list does not match p");
  const double total = w.values.sum();  // sum over unordered edges
  if (!(total > 0.0))
    throw Error(ErrorCode::degenerate_input, "modularity undefined for zero total weight");
  const double two_w = 2.0 * total;

  Vector degree = Vector::Zero(w.p);
  for_each_edge(w.p, [&](int k, int i, int j) {
    degree[i] += w.values[k];
    degree[j] += w.values[k];
  });

  // Sum over ordered pairs, diagonal included (A_ii = 0, null model is not).
  double q = 0.0;
  for_each_edge(w.p, [&](int k, int i, int j) {
    if (partition.at(nodes[i]) == partition.at(nodes[j])) q += 2.0 * w.values[k];
  });
  for (int i = 0; i < w.p; ++i)
    for (int j = 0; j < w.p; ++j)
      if (partition.at(nodes[i]) == partition.at(nodes[j])) q -= degree[i] * degree[j] / two_w;
  return q / two_w;
}

Partition components_clustering(const WeightVector& w, const std::vector<std::string>& nodes,
                                double threshold) {
  if (nodes.size() != static_cast<size_t>(w.p))
    throw Error(ErrorCode::invalid_argument, "node list does not match p");
  const EdgeSet kept = binarize(w, threshold);

  std::vector<int> parent(w.p);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int k : kept.edges) {
    const auto [i, j] = edge_pair(k + 1, w.p);
    const int a = find(i - 1);
    const int b = find(j - 1);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  // Component ids numbered by smallest member index.
  std::unordered_map<int, std::string> name_of_root;
  Partition part;
  int next = 0;
  for (int v = 0; v < w.p; ++v) {
    const int root = find(v);
    auto it = name_of_root.find(root);
    if (it == name_of_root.end())
      it = name_of_root.emplace(root, std::to_string(next++)).first;
    part.cluster_of[nodes[v]] = it->second;
  }
  return part;
}

namespace {

SweepRow run_one(const ProblemData& data, const std::vector<std::string>& nodes,
                 HyperParams hp, double alpha, double lambda, const Partition& truth,
                 double threshold, const SolverConfig& cfg) {
  SweepRow row;
  row.alpha = alpha;
  row.lambda = lambda;
  hp.alpha = alpha;
  hp.lambda = lambda;
  try {
    auto [w, trace] = run_mm(data, hp, cfg);
    row.iterations = trace.iterations();
    row.millis = std::accumulate(trace.records.begin(), trace.records.end(), 0.0,
                                 [](double acc, const TraceRecord& r) { return acc + r.millis; });
    row.termination = termination_name(trace.termination);
    const EdgeSet truth_edges = sector_block_truth(nodes, truth);
    row.f_score = f_score(binarize(w, threshold), truth_edges);
    row.modularity = modularity(w, nodes, truth);
  } catch (const Error& e) {
    row.f_score = std::nan("");
    row.modularity = std::nan("");
    row.termination = std::string("error:") + error_code_name(e.code());
  }
  return row;
}

}  // namespace

std::vector<SweepRow> alpha_sweep(const ProblemData& data, const std::vector<std::string>& nodes,
                                  const HyperParams& base, const std::vector<double>& alphas,
                                  const std::vector<double>& lambdas, const Partition& truth,
                                  double threshold, const SolverConfig& cfg, int jobs) {
  for (double a : alphas)
    if (!(a >= 0.0 && a <= 1.0))
      throw Error(ErrorCode::invalid_argument, "alpha grid values must lie in [0, 1]");
  const std::vector<double> lam = lambdas.empty() ? std::vector<double>{base.lambda} : lambdas;

  struct Point {
    double alpha;
    double lambda;
  };
  std::vector<Point> grid;
  for (double a : alphas)
    for (double l : lam) grid.push_back({a, l});

  std::vector<SweepRow> rows(grid.size());
  if (jobs <= 1 || grid.size() <= 1) {
    for (size_t g = 0; g < grid.size(); ++g)
      rows[g] = run_one(data, nodes, base, grid[g].alpha, grid[g].lambda, truth, threshold, cfg);
    return rows;
  }

  std::atomic<size_t> cursor{0};
  auto worker = [&]() {
    while (true) {
      const size_t g = cursor.fetch_add(1);
      if (g >= grid.size()) break;
      rows[g] = run_one(data, nodes, base, grid[g].alpha, grid[g].lambda, truth, threshold, cfg);
    }
  };
  std::vector<std::thread> pool;
  const int n_threads = std::min<int>(jobs, static_cast<int>(grid.size()));
  pool.reserve(n_threads);
  for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return rows;
}

std::string report_to_csv(const std::vector<SweepRow>& rows, bool include_timings) {
  std::string out = include_timings ? "alpha,lambda,f_score,modularity,iters,millis,termination\n"
                                    : "alpha,lambda,f_score,modularity,iters,termination\n";
  for (const SweepRow& row : rows) {
    out += format_double(row.alpha);
    out += ',';
    out += format_double(row.lambda);
    out += ',';
    out += format_double(row.f_score);
    out += ',';
    out += format_double(row.modularity);
    out += ',';
    out += std::to_string(row.iterations);
    out += ',';
    if (include_timings) {
      out += format_double(row.millis);
      out += ',';
    }
    out += row.termination;
    out += '\n';
  }
  return out;
}

}  // namespace fusegraph
