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

#include "core/mm_solver.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <chrono>
#include <cmath>
#include <limits>

#include "core/format.hpp"

namespace fusegraph {

const char* termination_name(Termination t) {
  switch (t) {
    case Termination::converged: return "converged";
    case Termination::max_iterations: return "maxiter";
  }
  return "unknown";
}

void SolverConfig::validate() const {
  if (!(epsilon > 0.0)) throw Error(ErrorCode::invalid_argument, "epsilon must be positive");
  if (max_iterations < 1) throw Error(ErrorCode::invalid_argument, "maxiter must be >= 1");
  if (!(weight_floor > 0.0)) throw Error(ErrorCode::invalid_argument, "weight floor must be positive");
  if (!(weight_cap > weight_floor))
    throw Error(ErrorCode::invalid_argument, "weight cap must exceed the weight floor");
  for (int k = 0; k < w_init.size(); ++k)
    if (!(w_init[k] > 0.0))
      throw Error(ErrorCode::invalid_argument, "w_init entries must be strictly positive");
}

Vector compute_q_diag(const WeightVector& w0) {
  w0.validate();
  const int m = w0.edge_count();
  for (int k = 0; k < m; ++k)
    if (!(w0.values[k] > 0.0))
      throw Error(ErrorCode::invalid_argument, "compute_q_diag: reference point must be strictly positive");

  Eigen::LLT<Matrix> llt(laplacian_plus_j(w0));
  if (llt.info() != Eigen::Success)
    throw Error(ErrorCode::not_positive_definite, "compute_q_diag: L(w0) + J is not positive definite",
                w0.values);
  const Matrix M = llt.solve(Matrix::Identity(w0.p, w0.p));

  Vector q(m);
  for_each_edge(w0.p, [&](int k, int i, int j) {
    const double form = M(i, i) + M(j, j) - 2.0 * M(i, j);
    q[k] = std::max(w0.values[k] * w0.values[k] * form, 0.0);
  });
  return q;
}

std::pair<Vector, Vector> surrogate_coeffs(const Vector& w0, const Vector& R,
                                           const ProblemData& data, const HyperParams& hp) {
  hp.validate();
  const int m = edge_count(data.p);
  if (w0.size() != m || R.size() != m)
    throw Error(ErrorCode::invalid_argument, "surrogate_coeffs: vector lengths disagree with p");
  Vector a(m), C(m);
  const double alpha = hp.alpha;
  for (int k = 0; k < m; ++k) {
    if (!(w0[k] > 0.0))
      throw Error(ErrorCode::invalid_argument, "surrogate_coeffs: reference point must be positive");
    a[k] = (1.0 - alpha) * 2.0 * hp.sigma2 / w0[k];
    C[k] = alpha * (R[k] + scad_grad(w0[k], hp.lambda, hp.scad_a)) +
           (1.0 - alpha) * (data.z[k] + hp.sigma2 * (std::log(w0[k]) - 2.0));
  }
  return {std::move(a), std::move(C)};
}

namespace {

inline double cubic_value(double a, double C, double rhs, double w) {
  return ((a * w + C) * w) * w - rhs;
}

// Newton refinement; the derivative is strictly positive at the unique
// positive root, so plain steps converge once the bracket is decent.
double polish_root(double a, double C, double rhs, double w) {
  const double tol = 1e-13 * (1.0 + std::abs(rhs));
  for (int it = 0; it < 64; ++it) {
    const double value = cubic_value(a, C, rhs, w);
    if (std::abs(value) <= tol) break;
    const double deriv = (3.0 * a * w + 2.0 * C) * w;
    if (!(deriv > 0.0)) break;
    const double next = w - value / deriv;
    if (!(next > 0.0) || next == w) break;
    w = next;
  }
  return w;
}

double bisect_root(double a, double C, double rhs) {
  double lo = std::max(0.0, -C / a);  // value at lo is -rhs < 0
  double hi = std::max({1.0, 2.0 * lo, std::cbrt(rhs / a)});
  int guard = 0;
  while (cubic_value(a, C, rhs, hi) <= 0.0) {
    hi *= 2.0;
    if (++guard > 4096)
      throw Error(ErrorCode::infeasible_update, "cubic bisection failed to bracket a root");
  }
  // Shrink until the interval collapses to adjacent doubles.
  while (true) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (cubic_value(a, C, rhs, mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return hi;
}

double companion_root(double a, double C, double rhs) {
  // Monic form w^3 + (C/a) w^2 + 0 w - rhs/a.
  const double b = C / a;
  const double d = -rhs / a;
  Eigen::Matrix3d companion;
  companion << 0.0, 0.0, -d,
               1.0, 0.0, 0.0,
               0.0, 1.0, -b;
  Eigen::EigenSolver<Eigen::Matrix3d> es(companion, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) return bisect_root(a, C, rhs);

  // Exactly one root has positive real part (the other two sum to a
  // negative value and have positive product).
  double best = -1.0;
  for (int r = 0; r < 3; ++r) {
    const auto ev = es.eigenvalues()[r];
    if (ev.real() > 0.0 && std::abs(ev.imag()) <= 1e-6 * (1.0 + std::abs(ev.real())))
      best = std::max(best, ev.real());
  }
  if (!(best > 0.0)) return bisect_root(a, C, rhs);
  return polish_root(a, C, rhs, best);
}

}  // namespace

double solve_cubic(double a, double C, double rhs, CubicMethod method, double weight_cap) {
  if (!(a >= 0.0) || !(rhs >= 0.0) || !std::isfinite(C))
    throw Error(ErrorCode::invalid_argument, "solve_cubic: need a >= 0, rhs >= 0, finite C");

  double root;
  if (rhs == 0.0) {
    root = a > 0.0 ? std::max(0.0, -C / a) : 0.0;
  } else if (a == 0.0) {
    if (C <= 0.0)
      throw Error(ErrorCode::infeasible_update,
                  "cubic has no positive root (a = 0, C <= 0, rhs > 0)");
    root = std::sqrt(rhs / C);
  } else {
    root = method == CubicMethod::companion_matrix ? companion_root(a, C, rhs)
                                                   : bisect_root(a, C, rhs);
  }
  return std::min(std::max(root, 0.0), weight_cap);
}

namespace {

Vector sweep_updates(const Vector& ref, const Vector& R, const ProblemData& data,
                     const HyperParams& hp, const SolverConfig& cfg) {
  const int m = static_cast<int>(ref.size());
  Vector q;
  if (hp.alpha > 0.0)
    q = compute_q_diag(WeightVector{data.p, ref});
  else
    q = Vector::Zero(m);

  auto [a, C] = surrogate_coeffs(ref, R, data, hp);
  Vector next(m);
  for (int k = 0; k < m; ++k) {
    try {
      next[k] = solve_cubic(a[k], C[k], hp.alpha * q[k], cfg.cubic_method, cfg.weight_cap);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::infeasible_update) throw;
      const auto [i, j] = edge_pair(k + 1, data.p);
      throw Error(ErrorCode::infeasible_update,
                  "infeasible update at edge " + std::to_string(k + 1) + " = (" +
                      std::to_string(i) + "," + std::to_string(j) + "): " + e.what(),
                  ref);
    }
  }
  return next;
}

}  // namespace

WeightVector mm_step(const WeightVector& w0, const ProblemData& data, const HyperParams& hp,
                     const SolverConfig& cfg) {
  hp.validate();
  cfg.validate();
  w0.validate();
  if (w0.p != data.p)
    throw Error(ErrorCode::invalid_argument, "mm_step: weight vector and problem disagree on p");
  const Vector ref = w0.values.cwiseMax(cfg.weight_floor);
  const Vector R = adjoint_diag(data.S);
  return WeightVector{data.p, sweep_updates(ref, R, data, hp, cfg)};
}

std::pair<WeightVector, SolverTrace> run_mm(const ProblemData& data, const HyperParams& hp,
                                            const SolverConfig& cfg) {
  using clock = std::chrono::steady_clock;
  hp.validate();
  cfg.validate();
  const int m = edge_count(data.p);

  Vector w;
  if (cfg.w_init.size() == 0) {
    w = Vector::Ones(m);
  } else {
    if (cfg.w_init.size() != m)
      throw Error(ErrorCode::invalid_argument, "w_init length does not match p(p-1)/2");
    w = cfg.w_init;
  }
  const Vector R = adjoint_diag(data.S);

  SolverTrace trace;
  trace.termination = Termination::max_iterations;
  trace.records.push_back({0, objective(WeightVector{data.p, w}, data, hp), 0.0, 0.0});

  for (int iter = 1; iter <= cfg.max_iterations; ++iter) {
    const auto t0 = clock::now();
    const Vector ref = w.cwiseMax(cfg.weight_floor);
    Vector next = sweep_updates(ref, R, data, hp, cfg);
    const double delta = (next - w).norm();
    w = std::move(next);
    const double value = objective(WeightVector{data.p, w}, data, hp);
    const double millis =
        std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    trace.records.push_back({iter, value, delta, millis});
    if (delta <= cfg.epsilon) {
      trace.termination = Termination::converged;
      break;
    }
  }
  return {WeightVector{data.p, std::move(w)}, std::move(trace)};
}

double surrogate_f1(const WeightVector& w, const WeightVector& w0, const Matrix& S) {
  if (w.p != w0.p)
    throw Error(ErrorCode::invalid_argument, "surrogate_f1: mismatched node counts");
  const Vector R = adjoint_diag(S);
  const Vector q = compute_q_diag(w0);
  double value = R.dot(w.values) + 1.0;  // +1 is the constant (m+1)-th term p * Q_{m+1,m+1}
  for (int k = 0; k < w.edge_count(); ++k) value += q[k] / w.values[k];
  return value;
}

double surrogate_f2(const WeightVector& w, const WeightVector& w0, const Vector& z, double sigma2) {
  double value = w.values.dot(z);
  for (int k = 0; k < w.edge_count(); ++k) {
    const double wk = w.values[k];
    const double w0k = w0.values[k];
    value += sigma2 * (wk * wk / w0k + (std::log(w0k) - 2.0) * wk);
  }
  return value;
}

double surrogate_f3(const WeightVector& w, const WeightVector& w0, double lambda, double a) {
  double value = 0.0;
  for (int k = 0; k < w.edge_count(); ++k) {
    const double w0k = w0.values[k];
    value += scad(w0k, lambda, a) + scad_grad(w0k, lambda, a) * (w.values[k] - w0k);
  }
  return value;
}

Vector stationarity_residual(const WeightVector& w, const ProblemData& data, const HyperParams& hp) {
  hp.validate();
  const Vector R = adjoint_diag(data.S);
  const int m = w.edge_count();
  Vector q;
  if (hp.alpha > 0.0)
    q = compute_q_diag(w);
  else
    q = Vector::Zero(m);
  Vector residual(m);
  for (int k = 0; k < m; ++k) {
    const double wk = w.values[k];
    residual[k] = hp.alpha * (R[k] - q[k] / (wk * wk) + scad_grad(wk, hp.lambda, hp.scad_a)) +
                  (1.0 - hp.alpha) * (data.z[k] + hp.sigma2 * std::log(wk));
  }
  return residual;
}

std::string trace_to_csv(const SolverTrace& trace) {
  std::string out = "iteration,objective,delta_norm,millis\n";
  for (const TraceRecord& rec : trace.records) {
    out += std::to_string(rec.iteration);
    out += ',';
    out += format_double(rec.objective);
    out += ',';
    out += format_double(rec.delta_norm);
    out += ',';
    out += format_double(rec.millis);
    out += '\n';
  }
  return out;
}

}  // namespace fusegraph
