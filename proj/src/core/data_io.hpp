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

#ifndef FUSEGRAPH_CORE_DATA_IO_HPP
#define FUSEGRAPH_CORE_DATA_IO_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/mm_solver.hpp"
#include "core/side_info.hpp"

namespace fusegraph {

// All CSV formats carry one header row and use the first column for node
// labels. Cells are locale-independent decimals; missing cells are a hard
// ingestion error. Quoting is not supported; labels must not contain commas.

// Closing prices: header "node,<date>,...", one row per node, p x (n+1).
struct PricePanel {
  std::vector<std::string> labels;
  std::vector<std::string> dates;
  Matrix prices;
};

// Graph signals: header "node,...", one row per node, p x n.
struct SignalMatrix {
  std::vector<std::string> labels;
  Matrix X;
};

// Precomputed metadata distances: square, labeled rows and columns,
// symmetric with zero diagonal.
struct DistanceMatrix {
  std::vector<std::string> labels;
  Matrix Z;
};

struct GraphEdge {
  std::string i;
  std::string j;
  double weight = 0.0;
};

struct SolveSummary {
  int iterations = 0;
  bool converged = false;
  double final_objective = 0.0;
  double final_delta_norm = 0.0;
};

// Serializable learned graph: node labels, thresholded weighted edge list,
// and the provenance needed to reproduce the run.
struct LearnedGraph {
  std::vector<std::string> nodes;
  std::vector<GraphEdge> edges;
  std::optional<HyperParams> hyper;
  std::optional<SolveSummary> summary;
  double threshold = 0.0;  // relative threshold used to extract the edge list
};

PricePanel read_prices_csv(const std::string& path);
SignalMatrix read_signals_csv(const std::string& path);
EmbeddingSet read_embeddings_csv(const std::string& path);
DistanceMatrix read_distances_csv(const std::string& path);

// Rows of (node label, cluster label).
std::vector<std::pair<std::string, std::string>> read_labels_csv(const std::string& path);

void write_signals_csv(const std::vector<std::string>& labels, const Matrix& X,
                       const std::string& path);
void write_embeddings_csv(const EmbeddingSet& emb, const std::string& path);
void write_labels_csv(const std::vector<std::pair<std::string, std::string>>& rows,
                      const std::string& path);

// X_{i,t} = log P_{i,t} - log P_{i,t-1}.
Matrix log_returns(const PricePanel& panel);

// S = (1/n) X X^T; no mean subtraction unless center is set.
Matrix sample_covariance(const Matrix& X, bool center = false);

// Upper-triangular entries of a distance matrix in canonical edge order.
Vector distance_vector(const DistanceMatrix& dm);

// Reorders distance matrix rows/columns to a target label order.
DistanceMatrix align_to_labels(const DistanceMatrix& dm, const std::vector<std::string>& target);

// Builds the edge list from weights above threshold * max(w).
LearnedGraph make_graph(const std::vector<std::string>& labels, const WeightVector& w,
                        double threshold, std::optional<HyperParams> hyper = std::nullopt,
                        std::optional<SolveSummary> summary = std::nullopt);

// Dense weight vector over graph.nodes order; absent edges are zero.
WeightVector to_weight_vector(const LearnedGraph& graph);

// Structured-text graph document (JSON). Unknown fields are ignored on read;
// a note per ignored field is appended to *warnings when provided.
void write_graph(const LearnedGraph& graph, const std::string& path);
LearnedGraph read_graph(const std::string& path, std::vector<std::string>* warnings = nullptr);

// Flat "i,j,weight" edge list for external tools.
void write_edge_csv(const LearnedGraph& graph, const std::string& path);

void write_text_file(const std::string& path, const std::string& contents);

}  // namespace fusegraph

#endif  // FUSEGRAPH_CORE_DATA_IO_HPP
