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

#ifndef FUSEGRAPH_CORE_MM_SOLVER_HPP
#define FUSEGRAPH_CORE_MM_SOLVER_HPP

#include <string>
#include <utility>
#include <vector>

#include "core/objective.hpp"

namespace fusegraph {

enum class CubicMethod { companion_matrix, bisection };

enum class Termination { converged, max_iterations };

const char* termination_name(Termination t);

struct SolverConfig {
  double epsilon = 1e-6;       // stop when ||w_next - w|| <= epsilon
  int max_iterations = 1000;
  Vector w_init;               // empty => all-ones
  double weight_floor = 1e-10; // applied to the reference iterate each sweep
  double weight_cap = 1e6;     // applied to each update
  CubicMethod cubic_method = CubicMethod::companion_matrix;

  void validate() const;
};

struct TraceRecord {
  int iteration = 0;
  double objective = 0.0;
  double delta_norm = 0.0;
  double millis = 0.0;
};

struct SolverTrace {
  std::vector<TraceRecord> records;  // records[0] is the initial point
  Termination termination = Termination::max_iterations;

  int iterations() const { return static_cast<int>(records.size()) - 1; }
  double final_objective() const { return records.back().objective; }
  double final_delta_norm() const { return records.back().delta_norm; }
};

// Per-iteration majorization quantities. R is fixed across iterations,
// q_diag is recomputed at every reference point.
struct MajorizationState {
  Vector R;       // diag(E^T S E)
  Vector q_diag;  // first m diagonal entries of Q at the current iterate
};

// First m diagonal entries of Q = diag(w~0) G^T (L(w0)+J)^{-1} G diag(w~0),
// i.e. q_k = w0_k^2 * xi_k^T M xi_k with M = (L(w0)+J)^{-1}. One SPD solve
// plus m quadratic forms; the (m+1)x(m+1) Q is never formed.
Vector compute_q_diag(const WeightVector& w0);

// Cubic coefficients of the decoupled per-edge surrogate minimization:
// a_i = (1-alpha) 2 sigma2 / w0_i,
// C_i = alpha (R_i + scad'(w0_i)) + (1-alpha)(z_i + sigma2 (log w0_i - 2)).
std::pair<Vector, Vector> surrogate_coeffs(const Vector& w0, const Vector& R,
                                           const ProblemData& data, const HyperParams& hp);

// Positive root of a w^3 + C w^2 - rhs = 0 with a >= 0, rhs >= 0, clamped to
// [0, weight_cap]. Degenerate cases: rhs = 0, a > 0 -> max(0, -C/a);
// rhs = 0, a = 0 -> 0; a = 0, C > 0 -> sqrt(rhs/C). The remaining case
// (a = 0, C <= 0, rhs > 0) has no positive root and throws.
double solve_cubic(double a, double C, double rhs, CubicMethod method,
                   double weight_cap = 1e6);

// One majorization + per-edge minimization sweep from w0.
WeightVector mm_step(const WeightVector& w0, const ProblemData& data, const HyperParams& hp,
                     const SolverConfig& cfg);

// Full Algorithm: iterate mm_step from cfg.w_init (default all-ones) until
// ||delta w|| <= epsilon or max_iterations. The trace records the objective
// at the initial point and after every sweep.
std::pair<WeightVector, SolverTrace> run_mm(const ProblemData& data, const HyperParams& hp,
                                            const SolverConfig& cfg);

// --- surrogate evaluators, used to verify tightness/domination ---

// F1(w | w0) = sum_k R_k w_k + sum_k q_k(w0)/w_k + 1; satisfies
// F1(w0 | w0) = f1(w0) + p + log det(L(w0)+J).
double surrogate_f1(const WeightVector& w, const WeightVector& w0, const Matrix& S);

// F2(w | w0) = w^T z + sigma2 sum_i (w_i^2/w0_i + (log w0_i - 2) w_i); tight at w0.
double surrogate_f2(const WeightVector& w, const WeightVector& w0, const Vector& z, double sigma2);

// F3(w | w0) = sum_i [h(w0_i) + h'(w0_i)(w_i - w0_i)]; tight at w0.
double surrogate_f3(const WeightVector& w, const WeightVector& w0, double lambda, double a);

// Residual of the per-edge stationary condition evaluated self-consistently
// at w (reference point w0 = w); near zero at an interior fixed point.
Vector stationarity_residual(const WeightVector& w, const ProblemData& data, const HyperParams& hp);

// Line-delimited trace serialization: header + one CSV row per record.
std::string trace_to_csv(const SolverTrace& trace);

}  // namespace fusegraph

#endif  // FUSEGRAPH_CORE_MM_SOLVER_HPP
