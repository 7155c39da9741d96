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

#include "core/synth.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numeric>

namespace fusegraph {

void SynthConfig::validate() const {
  if (p < 2) throw Error(ErrorCode::invalid_argument, "synth: p must be >= 2");
  if (n_clusters < 1 || n_clusters > p)
    throw Error(ErrorCode::invalid_argument, "synth: cluster count must lie in [1, p]");
  if (!cluster_sizes.empty()) {
    if (static_cast<int>(cluster_sizes.size()) != n_clusters)
      throw Error(ErrorCode::invalid_argument, "synth: cluster_sizes length != n_clusters");
    int total = 0;
    for (int s : cluster_sizes) {
      if (s < 1) throw Error(ErrorCode::invalid_argument, "synth: cluster sizes must be >= 1");
      total += s;
    }
    if (total != p) throw Error(ErrorCode::invalid_argument, "synth: cluster sizes must sum to p");
  }
  for (double prob : {intra_edge_prob, inter_edge_prob, confusion_edge_prob})
    if (!(prob >= 0.0 && prob <= 1.0))
      throw Error(ErrorCode::invalid_argument, "synth: edge probabilities must lie in [0, 1]");
  if (!(intra_weight_lo > 0.0 && intra_weight_hi >= intra_weight_lo) ||
      !(inter_weight_lo > 0.0 && inter_weight_hi >= inter_weight_lo))
    throw Error(ErrorCode::invalid_argument, "synth: weight ranges must satisfy 0 < lo <= hi");
  if (n_samples < 1) throw Error(ErrorCode::invalid_argument, "synth: n_samples must be >= 1");
  if (embed_dim < n_clusters)
    throw Error(ErrorCode::invalid_argument,
                "synth: embed_dim must be >= n_clusters for centroid placement");
  if (!(intra_sq_dist > 0.0 && inter_sq_dist > 0.0))
    throw Error(ErrorCode::invalid_argument, "synth: metadata distances must be positive");
  if (!(metadata_noise >= 0.0 && metadata_noise <= 1.0))
    throw Error(ErrorCode::invalid_argument, "synth: metadata_noise must lie in [0, 1]");
  if ((confusion_a >= 0) != (confusion_b >= 0) || confusion_a >= n_clusters ||
      confusion_b >= n_clusters || (confusion_a >= 0 && confusion_a == confusion_b))
    throw Error(ErrorCode::invalid_argument, "synth: confusion pair must name two distinct clusters");
  if (max_retries < 1) throw Error(ErrorCode::invalid_argument, "synth: max_retries must be >= 1");
}

std::vector<int> SynthConfig::resolved_sizes() const {
  if (!cluster_sizes.empty()) return cluster_sizes;
  std::vector<int> sizes(n_clusters, p / n_clusters);
  for (int c = 0; c < p % n_clusters; ++c) ++sizes[c];
  return sizes;
}

namespace {

std::vector<int> cluster_assignment(const std::vector<int>& sizes) {
  std::vector<int> of_node;
  for (size_t c = 0; c < sizes.size(); ++c)
    of_node.insert(of_node.end(), sizes[c], static_cast<int>(c));
  return of_node;
}

bool connected(const WeightVector& w) {
  std::vector<int> parent(w.p);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for_each_edge(w.p, [&](int k, int i, int j) {
    if (w.values[k] > 0.0) {
      const int a = find(i);
      const int b = find(j);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  });
  for (int v = 1; v < w.p; ++v)
    if (find(v) != find(0)) return false;
  return true;
}

WeightVector draw_truth(const SynthConfig& cfg, const std::vector<int>& cluster, Rng& rng) {
  WeightVector w{cfg.p, Vector::Zero(edge_count(cfg.p))};
  for_each_edge(cfg.p, [&](int k, int i, int j) {
    const int ci = cluster[i];
    const int cj = cluster[j];
    double prob, lo, hi;
    if (ci == cj) {
      prob = cfg.intra_edge_prob;
      lo = cfg.intra_weight_lo;
      hi = cfg.intra_weight_hi;
    } else if (cfg.confusion_a >= 0 &&
               ((ci == cfg.confusion_a && cj == cfg.confusion_b) ||
                (ci == cfg.confusion_b && cj == cfg.confusion_a))) {
      prob = cfg.confusion_edge_prob;
      lo = cfg.intra_weight_lo;
      hi = cfg.intra_weight_hi;
    } else {
      prob = cfg.inter_edge_prob;
      lo = cfg.inter_weight_lo;
      hi = cfg.inter_weight_hi;
    }
    // Draw the weight unconditionally so the stream position does not depend
    // on earlier coin flips.
    const double weight = rng.uniform(lo, hi);
    if (rng.bernoulli(prob)) w.values[k] = weight;
  });
  return w;
}

}  // namespace

Matrix sample_gmrf(const WeightVector& w, int n, Rng& rng) {
  w.validate();
  Eigen::SelfAdjointEigenSolver<Matrix> es(laplacian(w));
  if (es.info() != Eigen::Success)
    throw Error(ErrorCode::generation, "gmrf sampler: eigendecomposition failed");
  const Vector& evals = es.eigenvalues();
  const double cutoff = 1e-10 * std::max(evals.maxCoeff(), 1.0);

  int null_dim = 0;
  for (int i = 0; i < w.p; ++i)
    if (evals[i] <= cutoff) ++null_dim;
  if (null_dim != 1)
    throw Error(ErrorCode::generation,
                "gmrf sampler: Laplacian nullity is " + std::to_string(null_dim) +
                    "; graph must be connected");

  // Columns scaled by 1/sqrt(lambda) span the pseudoinverse square root.
  Matrix factor(w.p, w.p - 1);
  int col = 0;
  for (int i = 0; i < w.p; ++i)
    if (evals[i] > cutoff) factor.col(col++) = es.eigenvectors().col(i) / std::sqrt(evals[i]);

  Matrix X(w.p, n);
  Vector eps(w.p - 1);
  for (int t = 0; t < n; ++t) {
    for (int i = 0; i < w.p - 1; ++i) eps[i] = rng.normal();
    X.col(t) = factor * eps;
  }
  return X;
}

SynthInstance generate_instance(const SynthConfig& cfg) {
  cfg.validate();
  const std::vector<int> sizes = cfg.resolved_sizes();
  const std::vector<int> cluster = cluster_assignment(sizes);
  Rng rng(cfg.seed);

  WeightVector truth;
  bool ok = false;
  for (int attempt = 0; attempt < cfg.max_retries; ++attempt) {
    truth = draw_truth(cfg, cluster, rng);
    if (connected(truth)) {
      ok = true;
      break;
    }
  }
  if (!ok)
    throw Error(ErrorCode::generation,
                "could not draw a connected truth graph in " + std::to_string(cfg.max_retries) +
                    " attempts; raise the edge probabilities");

  SynthInstance inst;
  inst.seed = cfg.seed;
  inst.truth = truth;
  for (int v = 0; v < cfg.p; ++v) inst.labels.push_back("n" + std::to_string(v + 1));
  for (int v = 0; v < cfg.p; ++v)
    inst.cluster_rows.emplace_back(inst.labels[v], "s" + std::to_string(cluster[v]));

  inst.signals = sample_gmrf(truth, cfg.n_samples, rng);

  // Centroids sit on a scaled orthogonal frame: mutual squared distance is
  // exactly inter_sq_dist. Jitter interpolates toward the inter scale as the
  // noise level grows.
  const double centroid_scale = std::sqrt(cfg.inter_sq_dist / 2.0);
  const double jitter_sq =
      cfg.intra_sq_dist + cfg.metadata_noise * (cfg.inter_sq_dist - cfg.intra_sq_dist);
  const double coord_sd = std::sqrt(jitter_sq / (2.0 * cfg.embed_dim));
  inst.embeddings.labels = inst.labels;
  inst.embeddings.vectors = Matrix::Zero(cfg.p, cfg.embed_dim);
  for (int v = 0; v < cfg.p; ++v) {
    inst.embeddings.vectors(v, cluster[v]) = centroid_scale;
    for (int d = 0; d < cfg.embed_dim; ++d)
      inst.embeddings.vectors(v, d) += coord_sd * rng.normal();
  }
  return inst;
}

}  // namespace fusegraph
