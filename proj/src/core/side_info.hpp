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

#ifndef FUSEGRAPH_CORE_SIDE_INFO_HPP
#define FUSEGRAPH_CORE_SIDE_INFO_HPP

#include <string>
#include <vector>

#include "core/graph_core.hpp"

namespace fusegraph {

// Node metadata embeddings; row r is the vector for labels[r].
struct EmbeddingSet {
  std::vector<std::string> labels;
  Matrix vectors;  // p x d

  void validate() const;
};

// Squared Euclidean distances z_k = ||y_i - y_j||^2 in canonical edge order.
Vector pairwise_sq_dists(const EmbeddingSet& emb);

// Reorders embedding rows to match target label order. Missing or extra
// labels are a hard error, never an implicit intersection.
EmbeddingSet align_to_labels(const EmbeddingSet& emb, const std::vector<std::string>& target);

// w_k = exp(-z_k / sigma2), the closed-form minimizer of the entropic
// side-information objective.
WeightVector gaussian_kernel_weights(const Vector& z, int p, double sigma2);

enum class Sigma2Method { median, mean };

// Kernel-width heuristic over the distance vector; rejects all-zero z.
double sigma2_heuristic(const Vector& z, Sigma2Method method);

}  // namespace fusegraph

#endif  // FUSEGRAPH_CORE_SIDE_INFO_HPP
