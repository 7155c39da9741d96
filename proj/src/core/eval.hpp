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

#ifndef FUSEGRAPH_CORE_EVAL_HPP
#define FUSEGRAPH_CORE_EVAL_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "core/mm_solver.hpp"

namespace fusegraph {

// Total assignment of node labels to cluster names.
struct Partition {
  std::unordered_map<std::string, std::string> cluster_of;

  const std::string& at(const std::string& node) const;
};

Partition partition_from_rows(const std::vector<std::pair<std::string, std::string>>& rows);

// Unordered edge set over p nodes, stored as sorted canonical edge indices
// (0-based).
struct EdgeSet {
  int p = 0;
  std::vector<int> edges;
};

// Edge k kept iff w_k > threshold * max(w). threshold = 0 keeps every
// strictly positive weight.
EdgeSet binarize(const WeightVector& w, double threshold);

// FS = 2tp / (2tp + fp + fn); both-empty convention: 1.
double f_score(const EdgeSet& estimated, const EdgeSet& truth);

// Complete graph within each cluster: every unordered same-cluster pair.
EdgeSet sector_block_truth(const std::vector<std::string>& nodes, const Partition& partition);

// Weighted Newman modularity of the partition on the weighted adjacency
// built from w. Throws when the total weight is zero.
double modularity(const WeightVector& w, const std::vector<std::string>& nodes,
                  const Partition& partition);

// Connected components of the binarized graph; cluster names are "0", "1",
// ... in order of each component's smallest node index.
Partition components_clustering(const WeightVector& w, const std::vector<std::string>& nodes,
                                double threshold);

struct SweepRow {
  double alpha = 0.0;
  double lambda = 0.0;
  double f_score = 0.0;
  double modularity = 0.0;
  int iterations = 0;
  double millis = 0.0;
  std::string termination;  // converged | maxiter | error:<code>
};

// Runs the solver on every (alpha, lambda) grid point and scores the result
// against the ground-truth partition. Rows are ordered alpha-major; failures
// are reported per row without aborting the remaining grid. jobs > 1 runs
// rows on a small worker pool; row content does not depend on scheduling.
std::vector<SweepRow> alpha_sweep(const ProblemData& data, const std::vector<std::string>& nodes,
                                  const HyperParams& base, const std::vector<double>& alphas,
                                  const std::vector<double>& lambdas, const Partition& truth,
                                  double threshold, const SolverConfig& cfg, int jobs = 1);

// CSV serialization of a sweep report. Timing columns are opt-in so that the
// default report is byte-stable across reruns.
std::string report_to_csv(const std::vector<SweepRow>& rows, bool include_timings = false);

}  // namespace fusegraph

#endif  // FUSEGRAPH_CORE_EVAL_HPP
