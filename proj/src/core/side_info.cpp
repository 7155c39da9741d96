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

#include "core/side_info.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace fusegraph {

void EmbeddingSet::validate() const {
  if (vectors.rows() < 2)
    throw Error(ErrorCode::ingest, "embedding set needs at least 2 nodes");
  if (vectors.cols() < 1)
    throw Error(ErrorCode::ingest, "embedding set needs dimension >= 1");
  if (labels.size() != static_cast<size_t>(vectors.rows()))
    throw Error(ErrorCode::ingest, "embedding labels and rows disagree");
}

Vector pairwise_sq_dists(const EmbeddingSet& emb) {
  emb.validate();
  const int p = static_cast<int>(emb.vectors.rows());
  Vector z(edge_count(p));
  for_each_edge(p, [&](int k, int i, int j) {
    z[k] = (emb.vectors.row(i) - emb.vectors.row(j)).squaredNorm();
  });
  return z;
}

EmbeddingSet align_to_labels(const EmbeddingSet& emb, const std::vector<std::string>& target) {
  emb.validate();
  if (emb.labels.size() != target.size())
    throw Error(ErrorCode::label_mismatch,
                "embedding node set has " + std::to_string(emb.labels.size()) +
                    " labels, expected " + std::to_string(target.size()));
  std::unordered_map<std::string, int> row_of;
  for (size_t r = 0; r < emb.labels.size(); ++r)
    if (!row_of.emplace(emb.labels[r], static_cast<int>(r)).second)
      throw Error(ErrorCode::ingest, "duplicate embedding label: " + emb.labels[r]);

  EmbeddingSet out;
  out.labels = target;
  out.vectors.resize(emb.vectors.rows(), emb.vectors.cols());
  for (size_t r = 0; r < target.size(); ++r) {
    auto it = row_of.find(target[r]);
    if (it == row_of.end())
      throw Error(ErrorCode::label_mismatch, "embedding set is missing node: " + target[r]);
    out.vectors.row(static_cast<int>(r)) = emb.vectors.row(it->second);
  }
  return out;
}

WeightVector gaussian_kernel_weights(const Vector& z, int p, double sigma2) {
  if (!(sigma2 > 0.0)) throw Error(ErrorCode::invalid_argument, "sigma2 must be positive");
  if (z.size() != edge_count(p))
    throw Error(ErrorCode::invalid_argument, "distance vector length does not match p(p-1)/2");
  WeightVector w{p, (-z / sigma2).array().exp().matrix()};
  return w;
}

double sigma2_heuristic(const Vector& z, Sigma2Method method) {
  if (z.size() == 0) throw Error(ErrorCode::invalid_argument, "sigma2 heuristic needs nonempty z");
  if (z.maxCoeff() <= 0.0)
    throw Error(ErrorCode::degenerate_input,
                "all metadata distances are zero; kernel width is undefined");
  if (method == Sigma2Method::mean) return z.mean();

  std::vector<double> sorted(z.data(), z.data() + z.size());
  std::sort(sorted.begin(), sorted.end());
  const size_t n = sorted.size();
  const double median =
      n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
  if (median <= 0.0)
    throw Error(ErrorCode::degenerate_input,
                "median metadata distance is zero; pass an explicit sigma2");
  return median;
}

}  // namespace fusegraph
