// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion. Exit code is the number of failures.
//
// Usage: fusegraph_acceptance [--cli /path/to/fusegraph] [--criterion N]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Cholesky>

#include "core/data_io.hpp"
#include "core/eval.hpp"
#include "core/mm_solver.hpp"
#include "core/rng.hpp"
#include "core/side_info.hpp"
#include "core/synth.hpp"

using namespace fusegraph;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Matrix random_psd(int p, Rng& rng) {
  Matrix X(p, 3 * p);
  for (int r = 0; r < p; ++r)
    for (int c = 0; c < 3 * p; ++c) X(r, c) = rng.normal();
  return (X * X.transpose()) / (3.0 * p);
}

Vector random_vector(int m, Rng& rng, double lo, double hi) {
  Vector v(m);
  for (int k = 0; k < m; ++k) v[k] = rng.uniform(lo, hi);
  return v;
}

// ---- criterion 1: descent on 100 seeded random instances ----
Outcome criterion_descent() {
  const auto t0 = Clock::now();
  const int sizes[] = {5, 10, 20};
  const double alphas[] = {0.0, 0.25, 0.5, 0.75, 1.0};
  const double lambdas[] = {0.0, 0.1, 0.5};
  int worst_violations = 0;
  for (int inst = 0; inst < 100; ++inst) {
    Rng rng(1000 + inst);
    const int p = sizes[inst % 3];
    HyperParams hp;
    hp.alpha = alphas[inst % 5];
    hp.sigma2 = 1.0;
    hp.lambda = lambdas[inst % 3];
    const ProblemData data(random_psd(p, rng), random_vector(edge_count(p), rng, 0.0, 3.0));
    SolverConfig cfg;
    cfg.max_iterations = 250;
    const auto [w, trace] = run_mm(data, hp, cfg);
    for (size_t r = 1; r < trace.records.size(); ++r) {
      const double prev = trace.records[r - 1].objective;
      if (trace.records[r].objective > prev + 1e-9 * (1.0 + std::abs(prev))) ++worst_violations;
    }
  }
  const double elapsed = seconds_since(t0);
  std::ostringstream detail;
  detail << "100 instances, " << worst_violations << " descent violations, " << elapsed
         << " s (budget 60 s)";
  return {worst_violations == 0 && elapsed < 60.0, detail.str()};
}

// ---- criterion 2: alpha = 0 converges to the Gaussian kernel weights ----
Outcome criterion_kernel_oracle() {
  int failures = 0;
  double worst = 0.0;
  for (int inst = 0; inst < 20; ++inst) {
    Rng rng(2000 + inst);
    const int p = inst % 2 == 0 ? 8 : 13;
    const int m = edge_count(p);
    const Vector z = random_vector(m, rng, 0.0, 4.0);
    const double sigma2 = sigma2_heuristic(z, Sigma2Method::median);
    HyperParams hp;
    hp.alpha = 0.0;
    hp.sigma2 = sigma2;
    SolverConfig cfg;
    cfg.epsilon = 1e-9;
    cfg.max_iterations = 500;
    const ProblemData data(Matrix::Identity(p, p), z);
    const auto [w, trace] = run_mm(data, hp, cfg);
    const Vector expected = (-z / sigma2).array().exp().matrix();
    const double gap = (w.values - expected).cwiseAbs().maxCoeff();
    worst = std::max(worst, gap);
    if (!(trace.iterations() <= 500) || gap > 1e-6) ++failures;
  }
  std::ostringstream detail;
  detail << "20 instances, worst sup-gap " << worst << " (tol 1e-6)";
  return {failures == 0, detail.str()};
}

// ---- criterion 3: majorizer tightness and domination ----
Outcome criterion_majorizers() {
  Rng rng(3000);
  const int p = 6, m = edge_count(p);
  const Matrix S = random_psd(p, rng);
  const Vector z = random_vector(m, rng, 0.0, 2.0);
  const double sigma2 = 1.2, lambda = 0.6, a_scad = 3.7;
  int violations = 0;
  for (int pair = 0; pair < 100; ++pair) {
    const WeightVector w{p, random_vector(m, rng, 0.05, 2.5)};
    const WeightVector w0{p, random_vector(m, rng, 0.05, 2.5)};

    // Tightness: F1(w0|w0) - f1(w0) equals the dropped constant p + log det.
    Eigen::LLT<Matrix> llt(laplacian_plus_j(w0));
    double log_det = 0.0;
    for (int i = 0; i < p; ++i) log_det += 2.0 * std::log(llt.matrixL()(i, i));
    if (std::abs(surrogate_f1(w0, w0, S) - (f1(w0, S) + p + log_det)) > 1e-9) ++violations;
    if (std::abs(surrogate_f2(w0, w0, z, sigma2) - f2(w0, z, sigma2)) > 1e-9) ++violations;
    if (std::abs(surrogate_f3(w0, w0, lambda, a_scad) - f3(w0, lambda, a_scad)) > 1e-9)
      ++violations;

    if (surrogate_f1(w, w0, S) - surrogate_f1(w0, w0, S) < f1(w, S) - f1(w0, S) - 1e-9)
      ++violations;
    if (surrogate_f2(w, w0, z, sigma2) - surrogate_f2(w0, w0, z, sigma2) <
        f2(w, z, sigma2) - f2(w0, z, sigma2) - 1e-9)
      ++violations;
    if (surrogate_f3(w, w0, lambda, a_scad) - surrogate_f3(w0, w0, lambda, a_scad) <
        f3(w, lambda, a_scad) - f3(w0, lambda, a_scad) - 1e-9)
      ++violations;
  }
  std::ostringstream detail;
  detail << "100 pairs x {F1, F2, F3}, " << violations << " violations (tol 1e-9)";
  return {violations == 0, detail.str()};
}

// ---- criterion 4: cubic solver correctness ----
Outcome criterion_cubic() {
  Rng rng(4000);
  int residual_failures = 0, agreement_failures = 0;
  double worst_residual = 0.0, worst_gap = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    // Ranges keep the cubic well-conditioned in double precision.
    double a = rng.bernoulli(0.15) ? 0.0 : rng.uniform(0.1, 5.0);
    double C = rng.uniform(-3.0, 5.0);
    double rhs = rng.bernoulli(0.1) ? 0.0 : rng.uniform(0.0, 10.0);
    if (a == 0.0 && rhs > 0.0) C = rng.uniform(0.05, 5.0);  // keep a root guaranteed

    const double w1 = solve_cubic(a, C, rhs, CubicMethod::companion_matrix);
    const double w2 = solve_cubic(a, C, rhs, CubicMethod::bisection);
    const double gap = std::abs(w1 - w2);
    worst_gap = std::max(worst_gap, gap);
    if (gap > 1e-8) ++agreement_failures;
    const double residual = std::abs(a * w1 * w1 * w1 + C * w1 * w1 - rhs);
    worst_residual = std::max(worst_residual, residual / (1.0 + std::abs(rhs)));
    if (residual > 1e-10 * (1.0 + std::abs(rhs))) ++residual_failures;
  }
  const double constructed = solve_cubic(2.0, 3.0, 5.0, CubicMethod::companion_matrix);
  const bool constructed_ok = std::abs(constructed - 1.0) <= 1e-12;
  std::ostringstream detail;
  detail << "10^4 triples: worst residual " << worst_residual << ", worst backend gap "
         << worst_gap << ", (2,3,5) -> " << constructed;
  return {residual_failures == 0 && agreement_failures == 0 && constructed_ok, detail.str()};
}

// ---- criterion 5: gradient check against central differences ----
Outcome criterion_gradient() {
  Rng rng(5000);
  int failures = 0;
  double worst = 0.0;
  for (int point = 0; point < 50; ++point) {
    const int p = 3 + static_cast<int>(rng.uniform_int(0, 5));  // p in [3, 8]
    const int m = edge_count(p);
    const ProblemData data(random_psd(p, rng), random_vector(m, rng, 0.0, 2.0));
    HyperParams hp;
    hp.alpha = rng.uniform(0.0, 1.0);
    hp.sigma2 = rng.uniform(0.5, 2.0);
    const WeightVector w{p, random_vector(m, rng, 0.1, 2.0)};
    const Vector grad = smooth_gradient(w, data, hp);

    auto smooth = [&](const Vector& values) {
      double v = 0.0;
      if (hp.alpha > 0.0) v += hp.alpha * f1({p, values}, data.S);
      if (hp.alpha < 1.0) v += (1.0 - hp.alpha) * f2({p, values}, data.z, hp.sigma2);
      return v;
    };
    const double h = 1e-6;
    for (int k = 0; k < m; ++k) {
      Vector up = w.values, down = w.values;
      up[k] += h;
      down[k] -= h;
      const double fd = (smooth(up) - smooth(down)) / (2.0 * h);
      const double rel = std::abs(grad[k] - fd) / (1.0 + std::max(std::abs(grad[k]), std::abs(fd)));
      worst = std::max(worst, rel);
      if (rel > 1e-5) ++failures;
    }
  }
  std::ostringstream detail;
  detail << "50 interior points, worst relative gap " << worst << " (tol 1e-5)";
  return {failures == 0, detail.str()};
}

// ---- criterion 6: structural identities ----
Outcome criterion_structure() {
  Rng rng(6000);
  bool ok = true;
  std::ostringstream detail;

  // Integer weights: rows sum to zero exactly.
  for (int p : {2, 5, 12}) {
    Vector w(edge_count(p));
    for (int k = 0; k < w.size(); ++k) w[k] = static_cast<double>(rng.uniform_int(0, 5));
    if ((laplacian({p, w}) * Vector::Ones(p)).cwiseAbs().maxCoeff() != 0.0) ok = false;
  }
  // Float weights: 1e-14 scale.
  for (int p : {5, 20, 30}) {
    const Vector w = random_vector(edge_count(p), rng, 0.0, 2.0);
    const double gap = (laplacian({p, w}) * Vector::Ones(p)).cwiseAbs().maxCoeff();
    if (gap > 1e-14 * (1.0 + w.sum())) ok = false;
  }
  // Factorization and adjoint identity.
  for (int p : {3, 8, 15}) {
    const int m = edge_count(p);
    const WeightVector w{p, random_vector(m, rng, 0.0, 2.0)};
    const IncidenceMatrices inc = incidence_matrices(p);
    Vector w_tilde(m + 1);
    w_tilde.head(m) = w.values;
    w_tilde[m] = 1.0 / p;
    const Matrix fact = inc.G * w_tilde.asDiagonal() * inc.G.transpose();
    if ((laplacian_plus_j(w) - fact).cwiseAbs().maxCoeff() > 1e-12) ok = false;

    const Matrix S = random_psd(p, rng);
    const double lhs = (S * laplacian(w)).trace();
    const double rhs = adjoint_diag(S).dot(w.values);
    if (std::abs(lhs - rhs) > 1e-12 * (1.0 + std::abs(lhs))) ok = false;
  }
  // Edge-index bijection up to p = 50.
  for (int p = 2; p <= 50; ++p) {
    std::set<int> seen;
    for (int j = 1; j < p; ++j)
      for (int i = j + 1; i <= p; ++i) {
        const int k = edge_index(i, j, p);
        if (k < 1 || k > edge_count(p) || !seen.insert(k).second) ok = false;
        const auto [ii, jj] = edge_pair(k, p);
        if (ii != i || jj != j) ok = false;
      }
  }
  detail << "row sums, factorization (1e-12), adjoint identity (1e-12), bijection p <= 50";
  return {ok, detail.str()};
}

// ---- criterion 7: synthetic fusion experiment ----
Outcome criterion_fusion() {
  const auto t0 = Clock::now();
  const int n_seeds = 20;
  std::vector<double> alphas;
  for (int a = 0; a <= 10; ++a) alphas.push_back(a / 10.0);

  int ge_wins = 0, gt_wins = 0;
  for (int s = 0; s < n_seeds; ++s) {
    SynthConfig cfg;
    cfg.p = 30;
    cfg.n_clusters = 3;
    cfg.cluster_sizes = {10, 10, 10};
    cfg.intra_edge_prob = 0.4;
    cfg.intra_weight_lo = 0.75;
    cfg.intra_weight_hi = 1.5;
    cfg.inter_edge_prob = 0.04;
    cfg.inter_weight_lo = 0.05;
    cfg.inter_weight_hi = 0.15;
    cfg.confusion_a = 1;
    cfg.confusion_b = 2;
    cfg.confusion_edge_prob = 0.3;
    cfg.n_samples = 200;
    cfg.embed_dim = 3;
    cfg.intra_sq_dist = 1.0;
    cfg.inter_sq_dist = 16.0;
    cfg.metadata_noise = 0.3;
    cfg.seed = 7000 + s;
    const SynthInstance inst = generate_instance(cfg);

    const Vector z = pairwise_sq_dists(inst.embeddings);
    const ProblemData data(sample_covariance(inst.signals), z);
    HyperParams base;
    base.sigma2 = sigma2_heuristic(z, Sigma2Method::median);
    base.lambda = 0.3;
    SolverConfig solver;
    solver.epsilon = 1e-5;
    solver.max_iterations = 500;
    const Partition truth = partition_from_rows(inst.cluster_rows);

    const auto rows =
        alpha_sweep(data, inst.labels, base, alphas, {}, truth, 1e-4, solver, 1);
    double end_best = std::max(rows.front().f_score, rows.back().f_score);
    double interior_best = 0.0;
    for (size_t r = 1; r + 1 < rows.size(); ++r)
      interior_best = std::max(interior_best, rows[r].f_score);
    if (interior_best >= end_best) ++ge_wins;
    if (interior_best > end_best) ++gt_wins;
  }
  const double elapsed = seconds_since(t0);
  std::ostringstream detail;
  detail << "interior >= endpoints in " << ge_wins << "/20 (need 16), strictly greater in "
         << gt_wins << "/20 (need 10), " << elapsed << " s (budget 600 s)";
  return {ge_wins >= 16 && gt_wins >= 10 && elapsed < 600.0, detail.str()};
}

// ---- criterion 8: metric oracles ----
Outcome criterion_metrics() {
  Rng rng(8000);
  bool ok = true;

  // Modularity against the brute-force double sum.
  for (int trial = 0; trial < 50; ++trial) {
    const int p = 4 + static_cast<int>(rng.uniform_int(0, 8));
    std::vector<std::string> nodes;
    for (int v = 0; v < p; ++v) nodes.push_back("n" + std::to_string(v));
    Vector w(edge_count(p));
    for (int k = 0; k < w.size(); ++k) w[k] = rng.bernoulli(0.5) ? rng.uniform(0.1, 2.0) : 0.0;
    if (w.maxCoeff() <= 0.0) w[0] = 1.0;
    Partition part;
    const int clusters = 2 + static_cast<int>(rng.uniform_int(0, 2));
    for (int v = 0; v < p; ++v)
      part.cluster_of[nodes[v]] = "c" + std::to_string(static_cast<int>(rng.uniform_int(0, clusters - 1)));

    Matrix A = Matrix::Zero(p, p);
    for_each_edge(p, [&](int k, int i, int j) { A(i, j) = A(j, i) = w[k]; });
    const double two_w = A.sum();
    const Vector deg = A.rowwise().sum();
    double q = 0.0;
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j)
        if (part.at(nodes[i]) == part.at(nodes[j])) q += A(i, j) - deg[i] * deg[j] / two_w;
    q /= two_w;
    if (std::abs(modularity({p, w}, nodes, part) - q) > 1e-12 * (1.0 + std::abs(q))) ok = false;
  }

  // F-score on exhaustive small cases (all pairs of edge subsets, p = 4).
  const int p = 4, m = edge_count(p);
  for (int est_mask = 0; est_mask < (1 << m); ++est_mask) {
    for (int truth_mask = 0; truth_mask < (1 << m); ++truth_mask) {
      EdgeSet est{p, {}}, truth{p, {}};
      int tp = 0, fp = 0, fn = 0;
      for (int k = 0; k < m; ++k) {
        const bool in_est = est_mask & (1 << k);
        const bool in_truth = truth_mask & (1 << k);
        if (in_est) est.edges.push_back(k);
        if (in_truth) truth.edges.push_back(k);
        tp += in_est && in_truth;
        fp += in_est && !in_truth;
        fn += !in_est && in_truth;
      }
      const double expected =
          (tp + fp + fn) == 0 ? 1.0 : 2.0 * tp / (2.0 * tp + fp + fn);
      if (f_score(est, truth) != expected) ok = false;
    }
  }
  return {ok, "modularity brute force (50 graphs, 1e-12); F-score exhaustive (p=4, 4096 pairs)"};
}

// ---- criterion 9: GMRF sampler ----
Outcome criterion_gmrf() {
  Rng rng(9000);
  const int p = 10, n = 10000;
  const WeightVector truth{p, random_vector(edge_count(p), rng, 0.2, 2.0)};
  Rng sample_rng(9001);
  const Matrix X = sample_gmrf(truth, n, sample_rng);

  const Matrix L = laplacian(truth);
  double energy = 0.0;
  double worst_orth = 0.0;
  for (int t = 0; t < n; ++t) {
    const Vector x = X.col(t);
    energy += x.dot(L * x);
    worst_orth = std::max(worst_orth, std::abs(x.sum()));
  }
  energy /= n;
  const double ratio = energy / (p - 1);
  std::ostringstream detail;
  detail << "E[x^T L x]/(p-1) = " << ratio << " (need [0.95, 1.05]), worst |1^T x| = "
         << worst_orth << " (tol 1e-10)";
  return {ratio >= 0.95 && ratio <= 1.05 && worst_orth <= 1e-10, detail.str()};
}

// ---- criterion 10: CLI determinism ----
std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

int run_command(const std::string& command) {
  return std::system((command + " > /dev/null 2>&1").c_str());
}

Outcome criterion_determinism(const std::string& cli) {
  if (cli.empty())
    return {false, "pass --cli /path/to/fusegraph to run the CLI determinism check"};

  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "fusegraph_acceptance_c10";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string data_dir = (dir / "instance").string();

  if (run_command(cli + " synth --p 18 --clusters 3 --n 80 --seed 99 --out-dir " + data_dir) != 0)
    return {false, "synth run failed"};

  const std::string common = cli + " sweep --signals " + data_dir + "/signals.csv" +
                             " --embeddings " + data_dir + "/embeddings.csv" + " --labels " +
                             data_dir + "/labels.csv" +
                             " --alpha-grid 0:1:0.25 --lambda 0.1 --maxiter 400";
  const std::string r0 = (dir / "r0.csv").string();
  const std::string r1 = (dir / "r1.csv").string();
  const std::string r2 = (dir / "r2.csv").string();
  if (run_command(common + " --jobs 1 --out " + r0) != 0) return {false, "sweep run 1 failed"};
  if (run_command(common + " --jobs 4 --out " + r1) != 0) return {false, "sweep run 2 failed"};
  if (run_command(common + " --jobs 4 --out " + r2) != 0) return {false, "sweep run 3 failed"};

  const std::string b0 = slurp(r0), b1 = slurp(r1), b2 = slurp(r2);
  const bool identical = !b0.empty() && b0 == b1 && b1 == b2;
  fs::remove_all(dir);
  return {identical, identical ? "three CLI sweep runs (jobs 1 and 4) byte-identical"
                               : "report CSVs differ between reruns"};
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  int only = 0;
  for (int a = 1; a < argc; ++a) {
    const std::string arg = argv[a];
    if (arg == "--cli" && a + 1 < argc) cli = argv[++a];
    if (arg == "--criterion" && a + 1 < argc) only = std::atoi(argv[++a]);
  }

  struct Criterion {
    int number;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "descent on seeded random instances", criterion_descent},
      {2, "alpha=0 kernel oracle", criterion_kernel_oracle},
      {3, "majorizer tightness and domination", criterion_majorizers},
      {4, "cubic solver correctness", criterion_cubic},
      {5, "smooth gradient vs central differences", criterion_gradient},
      {6, "structural identities", criterion_structure},
      {7, "synthetic fusion experiment", criterion_fusion},
      {8, "metric oracles", criterion_metrics},
      {9, "GMRF sampler", criterion_gmrf},
      {10, "report determinism via the CLI", [&] { return criterion_determinism(cli); }},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.number != only) continue;
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %2d: %s — %s\n", outcome.pass ? "PASS" : "FAIL", c.number, c.name,
                outcome.detail.c_str());
    std::fflush(stdout);
    if (!outcome.pass) ++failures;
  }
  return failures;
}
