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

#include "core/data_io.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "core/format.hpp"

namespace fusegraph {

namespace {

using nlohmann::json;

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  fields.push_back(current);
  return fields;
}

struct CsvTable {
  std::vector<std::string> header;           // fields of the first row
  std::vector<std::vector<std::string>> rows;
};

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open " + path);
  CsvTable table;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_fields(line);
    if (lineno == 1) {
      table.header = std::move(fields);
      continue;
    }
    if (fields.size() != table.header.size())
      throw Error(ErrorCode::parse, path + ":" + std::to_string(lineno) + ": expected " +
                                        std::to_string(table.header.size()) + " fields, got " +
                                        std::to_string(fields.size()));
    table.rows.push_back(std::move(fields));
  }
  if (table.header.empty())
    throw Error(ErrorCode::parse, path + ": empty file (header row required)");
  return table;
}

double cell_to_double(const CsvTable& table, const std::string& path, size_t row, size_t col) {
  const std::string& token = table.rows[row][col];
  double value;
  if (token.empty() || !parse_double(token, value) || !std::isfinite(value))
    throw Error(ErrorCode::ingest, path + ":" + std::to_string(row + 2) + ": column " +
                                       std::to_string(col + 1) + ": bad numeric cell '" + token + "'");
  return value;
}

void check_unique_labels(const std::vector<std::string>& labels, const std::string& path) {
  std::unordered_set<std::string> seen;
  for (const auto& label : labels) {
    if (label.empty()) throw Error(ErrorCode::ingest, path + ": empty node label");
    if (!seen.insert(label).second)
      throw Error(ErrorCode::ingest, path + ": duplicate node label '" + label + "'");
  }
}

struct LabeledMatrix {
  std::vector<std::string> header;
  std::vector<std::string> labels;
  Matrix values;
};

LabeledMatrix read_labeled_matrix(const std::string& path, int min_cols) {
  CsvTable table = read_csv(path);
  LabeledMatrix lm;
  lm.header = table.header;
  const int cols = static_cast<int>(table.header.size()) - 1;
  const int rows = static_cast<int>(table.rows.size());
  if (cols < min_cols)
    throw Error(ErrorCode::ingest, path + ": need at least " + std::to_string(min_cols) +
                                       " value columns after the label column");
  if (rows < 2) throw Error(ErrorCode::ingest, path + ": need at least 2 node rows");

  lm.values.resize(rows, cols);
  for (int r = 0; r < rows; ++r) {
    lm.labels.push_back(table.rows[r][0]);
    for (int c = 0; c < cols; ++c)
      lm.values(r, c) = cell_to_double(table, path, r, c + 1);
  }
  check_unique_labels(lm.labels, path);
  return lm;
}

}  // namespace

PricePanel read_prices_csv(const std::string& path) {
  LabeledMatrix lm = read_labeled_matrix(path, 2);  // need n >= 1 returns
  for (int r = 0; r < lm.values.rows(); ++r)
    for (int c = 0; c < lm.values.cols(); ++c)
      if (!(lm.values(r, c) > 0.0))
        throw Error(ErrorCode::ingest, path + ": nonpositive price at node '" + lm.labels[r] +
                                           "', column " + std::to_string(c + 2));
  PricePanel panel;
  panel.labels = std::move(lm.labels);
  panel.dates.assign(lm.header.begin() + 1, lm.header.end());
  panel.prices = std::move(lm.values);
  return panel;
}

SignalMatrix read_signals_csv(const std::string& path) {
  LabeledMatrix lm = read_labeled_matrix(path, 1);
  return SignalMatrix{std::move(lm.labels), std::move(lm.values)};
}

EmbeddingSet read_embeddings_csv(const std::string& path) {
  LabeledMatrix lm = read_labeled_matrix(path, 1);
  EmbeddingSet emb;
  emb.labels = std::move(lm.labels);
  emb.vectors = std::move(lm.values);
  emb.validate();
  return emb;
}

DistanceMatrix read_distances_csv(const std::string& path) {
  LabeledMatrix lm = read_labeled_matrix(path, 2);
  std::vector<std::string> col_labels(lm.header.begin() + 1, lm.header.end());
  check_unique_labels(col_labels, path);
  const int p = static_cast<int>(col_labels.size());
  if (lm.values.rows() != p)
    throw Error(ErrorCode::ingest, path + ": distance matrix must be square (got " +
                                       std::to_string(lm.values.rows()) + " rows, " +
                                       std::to_string(p) + " columns)");

  // Rows may arrive permuted; reindex rows into header order.
  std::unordered_map<std::string, int> row_of;
  for (int r = 0; r < p; ++r) row_of.emplace(lm.labels[r], r);
  Matrix Z(p, p);
  for (int r = 0; r < p; ++r) {
    auto it = row_of.find(col_labels[r]);
    if (it == row_of.end())
      throw Error(ErrorCode::ingest, path + ": row for node '" + col_labels[r] + "' is missing");
    Z.row(r) = lm.values.row(it->second);
  }

  for (int i = 0; i < p; ++i) {
    if (Z(i, i) != 0.0)
      throw Error(ErrorCode::ingest, path + ": diagonal entry for '" + col_labels[i] +
                                         "' must be exactly 0");
    for (int j = 0; j < i; ++j) {
      if (Z(i, j) < 0.0)
        throw Error(ErrorCode::ingest, path + ": negative distance between '" + col_labels[i] +
                                           "' and '" + col_labels[j] + "'");
      const double gap = std::abs(Z(i, j) - Z(j, i));
      if (gap > 1e-10 * (1.0 + std::abs(Z(i, j))))
        throw Error(ErrorCode::ingest, path + ": asymmetric distances between '" + col_labels[i] +
                                           "' and '" + col_labels[j] + "'");
      const double sym = 0.5 * (Z(i, j) + Z(j, i));
      Z(i, j) = Z(j, i) = sym;
    }
  }
  return DistanceMatrix{std::move(col_labels), std::move(Z)};
}

std::vector<std::pair<std::string, std::string>> read_labels_csv(const std::string& path) {
  CsvTable table = read_csv(path);
  if (table.header.size() != 2)
    throw Error(ErrorCode::parse, path + ": labels file must have exactly 2 columns");
  std::vector<std::pair<std::string, std::string>> rows;
  std::vector<std::string> node_labels;
  for (const auto& fields : table.rows) {
    if (fields[0].empty() || fields[1].empty())
      throw Error(ErrorCode::ingest, path + ": empty node or cluster label");
    rows.emplace_back(fields[0], fields[1]);
    node_labels.push_back(fields[0]);
  }
  check_unique_labels(node_labels, path);
  return rows;
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io, "cannot open " + path + " for writing");
  out << contents;
  if (!out) throw Error(ErrorCode::io, "write failed: " + path);
}

void write_signals_csv(const std::vector<std::string>& labels, const Matrix& X,
                       const std::string& path) {
  std::string out = "node";
  for (int c = 0; c < X.cols(); ++c) out += ",x" + std::to_string(c);
  out += '\n';
  for (int r = 0; r < X.rows(); ++r) {
    out += labels[r];
    for (int c = 0; c < X.cols(); ++c) {
      out += ',';
      out += format_double(X(r, c));
    }
    out += '\n';
  }
  write_text_file(path, out);
}

void write_embeddings_csv(const EmbeddingSet& emb, const std::string& path) {
  std::string out = "node";
  for (int c = 0; c < emb.vectors.cols(); ++c) out += ",e" + std::to_string(c);
  out += '\n';
  for (int r = 0; r < emb.vectors.rows(); ++r) {
    out += emb.labels[r];
    for (int c = 0; c < emb.vectors.cols(); ++c) {
      out += ',';
      out += format_double(emb.vectors(r, c));
    }
    out += '\n';
  }
  write_text_file(path, out);
}

void write_labels_csv(const std::vector<std::pair<std::string, std::string>>& rows,
                      const std::string& path) {
  std::string out = "node,sector\n";
  for (const auto& [node, sector] : rows) out += node + "," + sector + "\n";
  write_text_file(path, out);
}

Matrix log_returns(const PricePanel& panel) {
  if (panel.prices.cols() < 2)
    throw Error(ErrorCode::ingest, "log returns need at least 2 price columns");
  const int p = static_cast<int>(panel.prices.rows());
  const int n = static_cast<int>(panel.prices.cols()) - 1;
  Matrix X(p, n);
  for (int r = 0; r < p; ++r)
    for (int t = 0; t < n; ++t) {
      if (!(panel.prices(r, t) > 0.0) || !(panel.prices(r, t + 1) > 0.0))
        throw Error(ErrorCode::ingest, "nonpositive price at row " + std::to_string(r + 1) +
                                           ", column " + std::to_string(t + 2));
      X(r, t) = std::log(panel.prices(r, t + 1)) - std::log(panel.prices(r, t));
    }
  return X;
}

Matrix sample_covariance(const Matrix& X, bool center) {
  if (X.cols() < 1) throw Error(ErrorCode::invalid_argument, "sample covariance needs n >= 1");
  const double n = static_cast<double>(X.cols());
  if (!center) return (X * X.transpose()) / n;
  const Vector mean = X.rowwise().mean();
  const Matrix centered = X.colwise() - mean;
  return (centered * centered.transpose()) / n;
}

Vector distance_vector(const DistanceMatrix& dm) {
  const int p = static_cast<int>(dm.Z.rows());
  Vector z(edge_count(p));
  for_each_edge(p, [&](int k, int i, int j) { z[k] = dm.Z(i, j); });
  return z;
}

DistanceMatrix align_to_labels(const DistanceMatrix& dm, const std::vector<std::string>& target) {
  if (dm.labels.size() != target.size())
    throw Error(ErrorCode::label_mismatch,
                "distance matrix has " + std::to_string(dm.labels.size()) + " labels, expected " +
                    std::to_string(target.size()));
  std::unordered_map<std::string, int> idx;
  for (size_t r = 0; r < dm.labels.size(); ++r) idx.emplace(dm.labels[r], static_cast<int>(r));
  const int p = static_cast<int>(target.size());
  Matrix Z(p, p);
  for (int r = 0; r < p; ++r) {
    auto rit = idx.find(target[r]);
    if (rit == idx.end())
      throw Error(ErrorCode::label_mismatch, "distance matrix is missing node: " + target[r]);
    for (int c = 0; c < p; ++c) {
      auto cit = idx.find(target[c]);
      Z(r, c) = dm.Z(rit->second, cit->second);
    }
  }
  return DistanceMatrix{target, std::move(Z)};
}

LearnedGraph make_graph(const std::vector<std::string>& labels, const WeightVector& w,
                        double threshold, std::optional<HyperParams> hyper,
                        std::optional<SolveSummary> summary) {
  w.validate();
  if (labels.size() != static_cast<size_t>(w.p))
    throw Error(ErrorCode::invalid_argument, "make_graph: label count does not match p");
  if (threshold < 0.0) throw Error(ErrorCode::invalid_argument, "threshold must be >= 0");

  LearnedGraph graph;
  graph.nodes = labels;
  graph.hyper = std::move(hyper);
  graph.summary = std::move(summary);
  graph.threshold = threshold;
  const double cutoff = threshold * w.values.maxCoeff();
  for_each_edge(w.p, [&](int k, int i, int j) {
    if (w.values[k] > cutoff && w.values[k] > 0.0)
      graph.edges.push_back({labels[i], labels[j], w.values[k]});
  });
  return graph;
}

WeightVector to_weight_vector(const LearnedGraph& graph) {
  const int p = static_cast<int>(graph.nodes.size());
  std::unordered_map<std::string, int> idx;
  for (int r = 0; r < p; ++r) idx.emplace(graph.nodes[r], r);
  WeightVector w{p, Vector::Zero(edge_count(p))};
  for (const GraphEdge& e : graph.edges) {
    auto it_i = idx.find(e.i);
    auto it_j = idx.find(e.j);
    if (it_i == idx.end() || it_j == idx.end())
      throw Error(ErrorCode::label_mismatch, "edge references unknown node '" +
                                                 (it_i == idx.end() ? e.i : e.j) + "'");
    const int hi = std::max(it_i->second, it_j->second) + 1;
    const int lo = std::min(it_i->second, it_j->second) + 1;
    w.values[edge_index(hi, lo, p) - 1] += e.weight;
  }
  return w;
}

void write_graph(const LearnedGraph& graph, const std::string& path) {
  json doc;
  doc["format"] = "fusegraph-graph";
  doc["version"] = 1;
  doc["nodes"] = graph.nodes;
  json edges = json::array();
  for (const GraphEdge& e : graph.edges)
    edges.push_back({{"i", e.i}, {"j", e.j}, {"weight", e.weight}});
  doc["edges"] = std::move(edges);
  doc["threshold"] = graph.threshold;
  if (graph.hyper) {
    doc["hyperparameters"] = {{"alpha", graph.hyper->alpha},
                              {"sigma2", graph.hyper->sigma2},
                              {"lambda", graph.hyper->lambda},
                              {"scad_a", graph.hyper->scad_a}};
  }
  if (graph.summary) {
    doc["solver"] = {{"iterations", graph.summary->iterations},
                     {"converged", graph.summary->converged},
                     {"final_objective", graph.summary->final_objective},
                     {"final_delta_norm", graph.summary->final_delta_norm}};
  }
  write_text_file(path, doc.dump(2) + "\n");
}

namespace {

void note_unknown_keys(const json& obj, const std::set<std::string>& known,
                       const std::string& where, std::vector<std::string>* warnings) {
  if (!warnings) return;
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!known.count(it.key()))
      warnings->push_back("ignored unknown field '" + it.key() + "' in " + where);
}

}  // namespace

LearnedGraph read_graph(const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::parse, path + ": " + e.what());
  }

  try {
    if (!doc.is_object() || doc.value("format", "") != "fusegraph-graph")
      throw Error(ErrorCode::parse, path + ": not a fusegraph graph document");
    note_unknown_keys(doc, {"format", "version", "nodes", "edges", "threshold",
                            "hyperparameters", "solver"},
                      path, warnings);

    LearnedGraph graph;
    graph.nodes = doc.at("nodes").get<std::vector<std::string>>();
    check_unique_labels(graph.nodes, path);
    std::unordered_set<std::string> node_set(graph.nodes.begin(), graph.nodes.end());

    for (const json& e : doc.at("edges")) {
      note_unknown_keys(e, {"i", "j", "weight"}, path + " edge", warnings);
      GraphEdge edge{e.at("i").get<std::string>(), e.at("j").get<std::string>(),
                     e.at("weight").get<double>()};
      if (!node_set.count(edge.i) || !node_set.count(edge.j))
        throw Error(ErrorCode::parse, path + ": edge references unknown node");
      if (edge.i == edge.j) throw Error(ErrorCode::parse, path + ": self-loop edge");
      if (!(edge.weight > 0.0))
        throw Error(ErrorCode::parse, path + ": edge weight must be positive");
      graph.edges.push_back(std::move(edge));
    }
    graph.threshold = doc.value("threshold", 0.0);
    if (doc.contains("hyperparameters")) {
      const json& h = doc["hyperparameters"];
      note_unknown_keys(h, {"alpha", "sigma2", "lambda", "scad_a"}, path + " hyperparameters",
                        warnings);
      HyperParams hp;
      hp.alpha = h.at("alpha").get<double>();
      hp.sigma2 = h.at("sigma2").get<double>();
      hp.lambda = h.at("lambda").get<double>();
      hp.scad_a = h.at("scad_a").get<double>();
      graph.hyper = hp;
    }
    if (doc.contains("solver")) {
      const json& s = doc["solver"];
      note_unknown_keys(s, {"iterations", "converged", "final_objective", "final_delta_norm"},
                        path + " solver", warnings);
      SolveSummary summary;
      summary.iterations = s.at("iterations").get<int>();
      summary.converged = s.at("converged").get<bool>();
      summary.final_objective = s.at("final_objective").get<double>();
      summary.final_delta_norm = s.at("final_delta_norm").get<double>();
      graph.summary = summary;
    }
    return graph;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse, path + ": " + e.what());
  }
}

void write_edge_csv(const LearnedGraph& graph, const std::string& path) {
  std::string out = "i,j,weight\n";
  for (const GraphEdge& e : graph.edges)
    out += e.i + "," + e.j + "," + format_double(e.weight) + "\n";
  write_text_file(path, out);
}

}  // namespace fusegraph
