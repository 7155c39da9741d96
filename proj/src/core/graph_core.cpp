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

#include "core/graph_core.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace fusegraph {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::invalid_edge: return "invalid_edge";
    case ErrorCode::not_symmetric: return "not_symmetric";
    case ErrorCode::not_positive_definite: return "not_positive_definite";
    case ErrorCode::infeasible_update: return "infeasible_update";
    case ErrorCode::ingest: return "ingest";
    case ErrorCode::parse: return "parse";
    case ErrorCode::io: return "io";
    case ErrorCode::degenerate_input: return "degenerate_input";
    case ErrorCode::label_mismatch: return "label_mismatch";
    case ErrorCode::generation: return "generation";
  }
  return "unknown";
}

void WeightVector::validate() const {
  if (p < 2) throw Error(ErrorCode::invalid_argument, "weight vector: node count must be >= 2");
  const int m = fusegraph::edge_count(p);
  if (values.size() != m)
    throw Error(ErrorCode::invalid_argument,
                "weight vector: expected " + std::to_string(m) + " entries for p=" +
                    std::to_string(p) + ", got " + std::to_string(values.size()));
  for (int k = 0; k < m; ++k)
    if (!(values[k] >= 0.0))
      throw Error(ErrorCode::invalid_argument,
                  "weight vector: entry " + std::to_string(k + 1) + " is negative or NaN");
}

int edge_index(int i, int j, int p) {
  if (p < 2 || j < 1 || i <= j || i > p)
    throw Error(ErrorCode::invalid_edge,
                "edge_index: need 1 <= j < i <= p, got (i=" + std::to_string(i) +
                    ", j=" + std::to_string(j) + ", p=" + std::to_string(p) + ")");
  return i - j + (j - 1) * (2 * p - j) / 2;
}

std::pair<int, int> edge_pair(int k, int p) {
  const int m = edge_count(p);
  if (k < 1 || k > m)
    throw Error(ErrorCode::invalid_edge,
                "edge_pair: index " + std::to_string(k) + " outside [1, " + std::to_string(m) + "]");
  // Edges with second node <= j occupy the first j*p - j(j+1)/2 slots.
  int j = 1;
  int before = 0;  // edges preceding block j
  while (before + (p - j) < k) {
    before += p - j;
    ++j;
  }
  const int i = j + (k - before);
  return {i, j};
}

Matrix laplacian(const WeightVector& w) {
  w.validate();
  Matrix L = Matrix::Zero(w.p, w.p);
  for_each_edge(w.p, [&](int k, int i, int j) {
    const double wk = w.values[k];
    L(i, j) -= wk;
    L(j, i) -= wk;
    L(i, i) += wk;
    L(j, j) += wk;
  });
  return L;
}

Matrix laplacian_plus_j(const WeightVector& w) {
  Matrix A = laplacian(w);
  A.array() += 1.0 / static_cast<double>(w.p);
  return A;
}

IncidenceMatrices incidence_matrices(int p) {
  const int m = edge_count(p);
  IncidenceMatrices inc;
  inc.E = Matrix::Zero(p, m);
  for_each_edge(p, [&](int k, int i, int j) {
    inc.E(i, k) = 1.0;
    inc.E(j, k) = -1.0;
  });
  inc.G = Matrix(p, m + 1);
  inc.G.leftCols(m) = inc.E;
  inc.G.col(m).setOnes();
  return inc;
}

bool is_connected(const WeightVector& w) {
  w.validate();
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

bool is_symmetric(const Matrix& S, double rel_tol) {
  if (S.rows() != S.cols()) return false;
  const double scale = S.cwiseAbs().maxCoeff();
  const double gap = (S - S.transpose()).cwiseAbs().maxCoeff();
  return gap <= rel_tol * (1.0 + scale);
}

Vector adjoint_diag(const Matrix& S, double rel_tol) {
  if (S.rows() != S.cols() || S.rows() < 2)
    throw Error(ErrorCode::invalid_argument, "adjoint_diag: matrix must be square with p >= 2");
  if (!is_symmetric(S, rel_tol))
    throw Error(ErrorCode::not_symmetric, "adjoint_diag: matrix is not symmetric within tolerance");
  const Matrix Ssym = 0.5 * (S + S.transpose());
  const int p = static_cast<int>(Ssym.rows());
  Vector r(edge_count(p));
  for_each_edge(p, [&](int k, int i, int j) {
    r[k] = Ssym(i, i) + Ssym(j, j) - 2.0 * Ssym(i, j);
  });
  return r;
}

}  // namespace fusegraph
