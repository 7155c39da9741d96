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

#include "core/objective.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>

namespace fusegraph {

void HyperParams::validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw Error(ErrorCode::invalid_argument, "alpha must lie in [0, 1]");
  if (!(sigma2 > 0.0))
    throw Error(ErrorCode::invalid_argument, "sigma2 must be positive");
  if (!(lambda >= 0.0))
    throw Error(ErrorCode::invalid_argument, "lambda must be nonnegative");
  if (!(scad_a > 2.0))
    throw Error(ErrorCode::invalid_argument, "scad_a must be greater than 2");
}

namespace {

Matrix repair_psd(Matrix S, double sym_tol) {
  if (S.rows() != S.cols() || S.rows() < 2)
    throw Error(ErrorCode::invalid_argument, "covariance must be square with p >= 2");
  if (!is_symmetric(S, sym_tol))
    throw Error(ErrorCode::not_symmetric, "covariance is not symmetric within tolerance");
  S = 0.5 * (S + S.transpose()).eval();

  Eigen::SelfAdjointEigenSolver<Matrix> es(S);
  if (es.info() != Eigen::Success)
    throw Error(ErrorCode::invalid_argument, "covariance eigendecomposition failed");
  const Vector& evals = es.eigenvalues();
  const double lambda_max = std::max(evals.maxCoeff(), 0.0);
  const double floor = -1e-8 * lambda_max;
  if (evals.minCoeff() < floor)
    throw Error(ErrorCode::invalid_argument,
                "covariance has eigenvalue " + std::to_string(evals.minCoeff()) +
                    " below the PSD repair floor " + std::to_string(floor));
  if (evals.minCoeff() >= 0.0) return S;
  Vector clipped = evals.cwiseMax(0.0);
  return es.eigenvectors() * clipped.asDiagonal() * es.eigenvectors().transpose();
}

}  // namespace

ProblemData::ProblemData(Matrix S_, Vector z_, double sym_tol)
    : p(static_cast<int>(S_.rows())), S(repair_psd(std::move(S_), sym_tol)), z(std::move(z_)) {
  const int m = edge_count(p);
  if (z.size() != m)
    throw Error(ErrorCode::invalid_argument,
                "distance vector: expected " + std::to_string(m) + " entries, got " +
                    std::to_string(z.size()));
  for (int k = 0; k < m; ++k)
    if (!(z[k] >= 0.0))
      throw Error(ErrorCode::invalid_argument,
                  "distance vector: entry " + std::to_string(k + 1) + " is negative or NaN");
}

ProblemData::ProblemData(Matrix S_, double sym_tol) {
  const int rows = static_cast<int>(S_.rows());
  *this = ProblemData(std::move(S_), Vector::Zero(edge_count(rows)), sym_tol);
}

double scad(double x, double lambda, double a) {
  if (!(x >= 0.0)) throw Error(ErrorCode::invalid_argument, "scad: argument must be >= 0");
  if (x <= lambda) return lambda * x;
  if (x <= a * lambda) return (-x * x + 2.0 * a * lambda * x - lambda * lambda) / (2.0 * (a - 1.0));
  return (a + 1.0) * lambda * lambda / 2.0;
}

double scad_grad(double x, double lambda, double a) {
  if (!(x >= 0.0)) throw Error(ErrorCode::invalid_argument, "scad_grad: argument must be >= 0");
  if (x <= lambda) return lambda;
  if (x <= a * lambda) return (a * lambda - x) / (a - 1.0);
  return 0.0;
}

double f1(const WeightVector& w, const Matrix& S) {
  const Matrix A = laplacian_plus_j(w);
  Eigen::LLT<Matrix> llt(A);
  if (llt.info() != Eigen::Success)
    throw Error(ErrorCode::not_positive_definite,
                "f1: L(w) + J is not positive definite (graph of positive weights disconnected?)",
                w.values);
  double log_det = 0.0;
  for (int i = 0; i < w.p; ++i) log_det += std::log(llt.matrixL()(i, i));
  log_det *= 2.0;

  const Vector r = adjoint_diag(S);
  return -log_det + r.dot(w.values);
}

namespace {

inline double entropic_term(double x) {
  // x (log x - 1), floored to keep the x -> 0 limit finite.
  const double v = std::max(x, kWeightEvalFloor);
  return v * (std::log(v) - 1.0);
}

}  // namespace

double f2(const WeightVector& w, const Vector& z, double sigma2) {
  w.validate();
  if (z.size() != w.values.size())
    throw Error(ErrorCode::invalid_argument, "f2: z length does not match weight vector");
  double linear = w.values.dot(z);
  double entropy = 0.0;
  for (int k = 0; k < w.values.size(); ++k) entropy += entropic_term(w.values[k]);
  return linear + sigma2 * entropy;
}

double f3(const WeightVector& w, double lambda, double a) {
  w.validate();
  double total = 0.0;
  for (int k = 0; k < w.values.size(); ++k) total += scad(w.values[k], lambda, a);
  return total;
}

double objective(const WeightVector& w, const ProblemData& data, const HyperParams& hp) {
  hp.validate();
  if (w.p != data.p)
    throw Error(ErrorCode::invalid_argument, "objective: weight vector and problem disagree on p");
  double value = 0.0;
  if (hp.alpha > 0.0)
    value += hp.alpha * (f1(w, data.S) + f3(w, hp.lambda, hp.scad_a));
  if (hp.alpha < 1.0)
    value += (1.0 - hp.alpha) * f2(w, data.z, hp.sigma2);
  return value;
}

Vector smooth_gradient(const WeightVector& w, const ProblemData& data, const HyperParams& hp) {
  hp.validate();
  w.validate();
  const int m = w.edge_count();
  Vector grad = Vector::Zero(m);
  if (hp.alpha > 0.0) {
    const Matrix A = laplacian_plus_j(w);
    Eigen::LLT<Matrix> llt(A);
    if (llt.info() != Eigen::Success)
      throw Error(ErrorCode::not_positive_definite, "smooth_gradient: L(w) + J not positive definite",
                  w.values);
    const Matrix M = llt.solve(Matrix::Identity(w.p, w.p));
    const Vector r = adjoint_diag(data.S);
    for_each_edge(w.p, [&](int k, int i, int j) {
      grad[k] += hp.alpha * (r[k] - (M(i, i) + M(j, j) - 2.0 * M(i, j)));
    });
  }
  if (hp.alpha < 1.0) {
    for (int k = 0; k < m; ++k)
      grad[k] += (1.0 - hp.alpha) * (data.z[k] + hp.sigma2 * std::log(w.values[k]));
  }
  return grad;
}

}  // namespace fusegraph
