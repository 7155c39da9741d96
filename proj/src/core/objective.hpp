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

#ifndef FUSEGRAPH_CORE_OBJECTIVE_HPP
#define FUSEGRAPH_CORE_OBJECTIVE_HPP

#include "core/graph_core.hpp"

namespace fusegraph {

struct HyperParams {
  double alpha = 0.5;   // fusion weight: 1 = signals only, 0 = metadata only
  double sigma2 = 1.0;  // Gaussian kernel width
  double lambda = 0.0;  // sparsity level
  double scad_a = 3.7;  // SCAD shape

  void validate() const;
};

// Sample covariance plus metadata distances for one learning problem.
// Construction symmetrizes S (after a tolerance check) and clips eigenvalues
// in [-1e-8 * lambda_max, 0) to zero; anything more negative is rejected.
struct ProblemData {
  int p = 0;
  Matrix S;  // p x p, symmetric PSD
  Vector z;  // length m, entries >= 0; zeros when no metadata is attached

  ProblemData() = default;
  ProblemData(Matrix S_, Vector z_, double sym_tol = 1e-10);

  // Covariance-only problem; z is the zero vector.
  explicit ProblemData(Matrix S_, double sym_tol = 1e-10);
};

// SCAD penalty, the piecewise form of Fan & Li (2001):
// lambda*x on [0, lambda]; quadratic blend on (lambda, a*lambda];
// constant (a+1)lambda^2/2 beyond.
double scad(double x, double lambda, double a);

// Derivative of scad away from the two breakpoints, right-continuous at 0.
double scad_grad(double x, double lambda, double a);

// -log det(L(w) + J) + tr(S L(w)); throws not_positive_definite when the
// positive-weight graph is disconnected.
double f1(const WeightVector& w, const Matrix& S);

// w^T z + sigma2 * sum_i w_i (log w_i - 1), with entries below kWeightEvalFloor
// evaluated at the floor so the x log x limit stays finite.
double f2(const WeightVector& w, const Vector& z, double sigma2);

// Sum of scad over all m entries.
double f3(const WeightVector& w, double lambda, double a);

// alpha*f1 + (1-alpha)*f2 + alpha*f3. At alpha = 1 the f2 term is skipped
// entirely; at alpha = 0 the f1 and f3 terms are skipped.
double objective(const WeightVector& w, const ProblemData& data, const HyperParams& hp);

// Gradient of the smooth part alpha*f1 + (1-alpha)*f2 at an interior point:
// entry k is alpha*(R_k - xi_k^T (L(w)+J)^{-1} xi_k) + (1-alpha)*(z_k + sigma2 log w_k).
Vector smooth_gradient(const WeightVector& w, const ProblemData& data, const HyperParams& hp);

// Evaluation floor for w log w; below this, f2 uses the floor value.
inline constexpr double kWeightEvalFloor = 1e-12;

}  // namespace fusegraph

#endif  // FUSEGRAPH_CORE_OBJECTIVE_HPP
