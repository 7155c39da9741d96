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

#ifndef FUSEGRAPH_CORE_GRAPH_CORE_HPP
#define FUSEGRAPH_CORE_GRAPH_CORE_HPP

#include <utility>

#include "core/common.hpp"

namespace fusegraph {

// The m = p(p-1)/2 nonnegative edge weights of a combinatorial Laplacian,
// stored in the canonical edge order: (2,1), (3,1), ..., (p,1), (3,2), ...
struct WeightVector {
  int p = 0;
  Vector values;

  WeightVector() = default;
  WeightVector(int p_, Vector values_) : p(p_), values(std::move(values_)) {}

  int edge_count() const { return static_cast<int>(values.size()); }
  void validate() const;
};

// Column k of E is e_i - e_j for edge k = (i, j), i > j; G appends the
// all-ones column. Materialized only for tests and small p.
struct IncidenceMatrices {
  Matrix E;  // p x m
  Matrix G;  // p x (m+1)
};

// Canonical edge index, 1-based on both nodes and edges:
// k = i - j + (j-1)(2p - j)/2 for 1 <= j < i <= p.
int edge_index(int i, int j, int p);

// Inverse of edge_index: returns (i, j) with i > j, 1-based.
std::pair<int, int> edge_pair(int k, int p);

// Calls fn(k, i, j) for every edge in canonical order, all indices 0-based.
template <typename Fn>
void for_each_edge(int p, Fn&& fn) {
  int k = 0;
  for (int j = 0; j < p - 1; ++j)
    for (int i = j + 1; i < p; ++i) fn(k++, i, j);
}

// L(w): off-diagonal (i,j) entry -w_k, diagonal = row-wise degree.
Matrix laplacian(const WeightVector& w);

// L(w) + J with J = (1/p) 11^T; positive definite iff the positive-weight
// graph is connected.
Matrix laplacian_plus_j(const WeightVector& w);

IncidenceMatrices incidence_matrices(int p);

// diag(E^T S E): entry k is S_ii + S_jj - 2 S_ij for edge k = (i, j).
// S must be symmetric within rel_tol; it is symmetrized before use.
Vector adjoint_diag(const Matrix& S, double rel_tol = 1e-10);

// Relative symmetry check shared by every matrix-valued ingestion path.
bool is_symmetric(const Matrix& S, double rel_tol);

// Connectivity of the strictly-positive-weight graph; L(w) + J is positive
// definite exactly when this holds.
bool is_connected(const WeightVector& w);

}  // namespace fusegraph

#endif  // FUSEGRAPH_CORE_GRAPH_CORE_HPP
