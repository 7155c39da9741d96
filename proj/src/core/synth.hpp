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

#ifndef FUSEGRAPH_CORE_SYNTH_HPP
#define FUSEGRAPH_CORE_SYNTH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "core/eval.hpp"
#include "core/rng.hpp"
#include "core/side_info.hpp"

namespace fusegraph {

// Generator configuration for clustered ground-truth graphs, GMRF signals
// and cluster-consistent metadata. Everything is a pure function of
// (config, seed).
struct SynthConfig {
  int p = 30;
  int n_clusters = 3;
  std::vector<int> cluster_sizes;  // empty => as-equal-as-possible split

  double intra_edge_prob = 0.35;
  double intra_weight_lo = 0.5;
  double intra_weight_hi = 2.0;

  // Weak background edges keep the graph connected across clusters.
  double inter_edge_prob = 0.05;
  double inter_weight_lo = 0.05;
  double inter_weight_hi = 0.3;

  // Optional pair of clusters the signals cannot separate: extra
  // intra-strength edges are drawn between them.
  int confusion_a = -1;
  int confusion_b = -1;
  double confusion_edge_prob = 0.0;

  int n_samples = 200;

  int embed_dim = 3;
  double intra_sq_dist = 1.0;    // typical metadata distance within a cluster
  double inter_sq_dist = 25.0;   // squared distance between cluster centroids
  double metadata_noise = 0.25;  // 0 = tight clusters, 1 = intra spread reaches inter scale

  std::uint64_t seed = 0;
  int max_retries = 50;

  void validate() const;
  std::vector<int> resolved_sizes() const;
};

struct SynthInstance {
  std::vector<std::string> labels;
  WeightVector truth;
  Matrix signals;  // p x n
  EmbeddingSet embeddings;
  std::vector<std::pair<std::string, std::string>> cluster_rows;
  std::uint64_t seed = 0;
};

// Ground-truth graph with clustered structure (resampled until connected),
// zero-mean GMRF signals with precision L(w_true) drawn on the pseudoinverse
// spectrum, and metadata embeddings around cluster centroids.
SynthInstance generate_instance(const SynthConfig& cfg);

// n i.i.d. samples of x ~ N(0, L(w)^+); every sample is orthogonal to the
// all-ones vector. Throws when the graph is disconnected.
Matrix sample_gmrf(const WeightVector& w, int n, Rng& rng);

}  // namespace fusegraph

#endif  // FUSEGRAPH_CORE_SYNTH_HPP
