#include <doctest.h>

#include <cmath>

#include <Eigen/Eigenvalues>

#include "core/objective.hpp"
#include "core/rng.hpp"

using namespace fusegraph;

namespace {

Matrix random_psd(int p, Rng& rng) {
  Matrix X(p, 2 * p);
  for (int r = 0; r < p; ++r)
    for (int c = 0; c < 2 * p; ++c) X(r, c) = rng.normal();
  return (X * X.transpose()) / (2.0 * p);
}

Vector random_interior(int m, Rng& rng) {
  Vector w(m);
  for (int k = 0; k < m; ++k) w[k] = rng.uniform(0.1, 2.0);
  return w;
}

}  // namespace

TEST_CASE("scad branch values") {
  CHECK(scad(0.0, 1.0, 3.7) == 0.0);
  CHECK(scad(0.5, 1.0, 3.7) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(scad(5.0, 1.0, 3.7) == doctest::Approx(2.35).epsilon(1e-15));
  CHECK_THROWS_AS(scad(-0.1, 1.0, 3.7), Error);
}

TEST_CASE("scad is continuous at the breakpoints") {
  const double lambda = 0.8, a = 3.7, eps = 1e-9;
  CHECK(scad(lambda - eps, lambda, a) ==
        doctest::Approx(scad(lambda + eps, lambda, a)).epsilon(1e-6));
  CHECK(scad(a * lambda - eps, lambda, a) ==
        doctest::Approx(scad(a * lambda + eps, lambda, a)).epsilon(1e-6));
}

TEST_CASE("scad is nondecreasing, concave, constant beyond a*lambda") {
  Rng rng(21);
  const double lambda = 1.3, a = 3.7;
  for (int trial = 0; trial < 200; ++trial) {
    const double x = rng.uniform(0.0, 6.0);
    const double y = rng.uniform(0.0, 6.0);
    const double lo = std::min(x, y), hi = std::max(x, y);
    CHECK(scad(lo, lambda, a) <= scad(hi, lambda, a) + 1e-15);
    const double mid = 0.5 * (x + y);
    CHECK(scad(mid, lambda, a) >=
          0.5 * scad(x, lambda, a) + 0.5 * scad(y, lambda, a) - 1e-12);
  }
  CHECK(scad(a * lambda + 1.0, lambda, a) == scad(a * lambda + 100.0, lambda, a));
  CHECK(scad(7.0, 0.0, 3.7) == 0.0);
}

TEST_CASE("scad_grad branch values and finite differences") {
  CHECK(scad_grad(0.5, 1.0, 3.7) == 1.0);
  CHECK(scad_grad(2.0, 1.0, 3.7) == doctest::Approx((3.7 - 2.0) / 2.7).epsilon(1e-15));
  CHECK(scad_grad(5.0, 1.0, 3.7) == 0.0);
  CHECK_THROWS_AS(scad_grad(-1.0, 1.0, 3.7), Error);

  Rng rng(22);
  const double lambda = 1.0, a = 3.7, h = 1e-6;
  for (int trial = 0; trial < 100; ++trial) {
    const double x = rng.uniform(0.05, 5.0);
    // Skip the two non-differentiable breakpoints.
    if (std::abs(x - lambda) < 1e-3 || std::abs(x - a * lambda) < 1e-3) continue;
    const double fd = (scad(x + h, lambda, a) - scad(x - h, lambda, a)) / (2.0 * h);
    CHECK(scad_grad(x, lambda, a) == doctest::Approx(fd).epsilon(1e-5));
  }
}

TEST_CASE("scad_grad is nonnegative and nonincreasing") {
  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const double x = rng.uniform(0.0, 5.0);
    const double y = rng.uniform(0.0, 5.0);
    const double lo = std::min(x, y), hi = std::max(x, y);
    CHECK(scad_grad(lo, 1.1, 3.7) >= scad_grad(hi, 1.1, 3.7) - 1e-15);
    CHECK(scad_grad(x, 1.1, 3.7) >= 0.0);
  }
}

TEST_CASE("f1 closed forms on tiny graphs") {
  SUBCASE("p = 2, S = I: f1(a) = 2a - log 2a") {
    for (double a : {0.25, 0.5, 1.0, 3.0}) {
      const WeightVector w{2, Vector::Constant(1, a)};
      CHECK(f1(w, Matrix::Identity(2, 2)) ==
            doctest::Approx(2.0 * a - std::log(2.0 * a)).epsilon(1e-14));
    }
    CHECK(f1({2, Vector::Constant(1, 0.5)}, Matrix::Identity(2, 2)) ==
          doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("p = 3, unit weights, S = 0: -log det(L + J) = -log 9") {
    CHECK(f1({3, Vector::Ones(3)}, Matrix::Zero(3, 3)) ==
          doctest::Approx(-std::log(9.0)).epsilon(1e-13));
  }
  SUBCASE("disconnected graph is rejected") {
    CHECK_THROWS_AS(f1({2, Vector::Zero(1)}, Matrix::Identity(2, 2)), Error);
    try {
      f1({2, Vector::Zero(1)}, Matrix::Identity(2, 2));
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::not_positive_definite);
      REQUIRE(e.iterate() != nullptr);
      CHECK(e.iterate()->size() == 1);
    }
  }
}

TEST_CASE("f2 closed forms") {
  CHECK(f2({2, Vector::Ones(1)}, Vector::Zero(1), 1.0) == doctest::Approx(-1.0));
  const double w_star = std::exp(-1.0);
  CHECK(f2({2, Vector::Constant(1, w_star)}, Vector::Ones(1), 1.0) ==
        doctest::Approx(-w_star).epsilon(1e-14));
  Vector z2(2);
  z2 << 2, 3;
  // p = 2 has m = 1; use two separate single-edge problems for the linear case.
  CHECK(f2({2, Vector::Ones(1)}, Vector::Constant(1, 5.0), 0.0) == doctest::Approx(5.0));
  // Entries at zero contribute only the floor value.
  CHECK(std::abs(f2({2, Vector::Zero(1)}, Vector::Ones(1), 1.0)) < 3e-11);
}

TEST_CASE("f2 minimum sits at the kernel weights") {
  Rng rng(24);
  const int p = 4, m = edge_count(p);
  Vector z(m);
  for (int k = 0; k < m; ++k) z[k] = rng.uniform(0.0, 3.0);
  const double sigma2 = 1.4;
  const Vector w_star = (-z / sigma2).array().exp().matrix();
  const double best = f2({p, w_star}, z, sigma2);
  for (int trial = 0; trial < 50; ++trial) {
    const Vector w = random_interior(m, rng);
    CHECK(f2({p, w}, z, sigma2) >= best - 1e-12);
  }
}

TEST_CASE("f2 is strictly convex") {
  Rng rng(25);
  const int p = 5, m = edge_count(p);
  Vector z(m);
  for (int k = 0; k < m; ++k) z[k] = rng.uniform(0.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const Vector w1 = random_interior(m, rng);
    const Vector w2 = random_interior(m, rng);
    if ((w1 - w2).norm() < 1e-9) continue;
    const double t = rng.uniform(0.1, 0.9);
    const double lhs = f2({p, t * w1 + (1.0 - t) * w2}, z, 1.0);
    const double rhs = t * f2({p, w1}, z, 1.0) + (1.0 - t) * f2({p, w2}, z, 1.0);
    CHECK(lhs < rhs);
  }
}

TEST_CASE("f3 sums scad over all edges") {
  Vector w(3);
  w << 0, 0, 0;
  CHECK(f3({3, w}, 1.0, 3.7) == 0.0);
  // p = 3 example with entries on the linear and constant branches.
  w << 0.5, 5.0, 0.0;
  CHECK(f3({3, w}, 1.0, 3.7) == doctest::Approx(2.85).epsilon(1e-14));
  CHECK(f3({3, w}, 0.0, 3.7) == 0.0);
}

TEST_CASE("objective at the alpha endpoints") {
  Rng rng(26);
  const int p = 4, m = edge_count(p);
  const Matrix S = random_psd(p, rng);
  Vector z(m);
  for (int k = 0; k < m; ++k) z[k] = rng.uniform(0.0, 2.0);
  const ProblemData data(S, z);
  const WeightVector w{p, random_interior(m, rng)};

  HyperParams hp;
  hp.sigma2 = 1.2;
  hp.lambda = 0.4;

  hp.alpha = 0.0;
  CHECK(objective(w, data, hp) == f2(w, data.z, hp.sigma2));
  hp.alpha = 1.0;
  CHECK(objective(w, data, hp) == f1(w, data.S) + f3(w, hp.lambda, hp.scad_a));
}

TEST_CASE("objective hand value at alpha = 0.5") {
  // p = 2, S = I, z = (1), sigma2 = 1, lambda = 0, w = (1).
  const ProblemData data(Matrix::Identity(2, 2), Vector::Ones(1));
  HyperParams hp;
  hp.alpha = 0.5;
  hp.sigma2 = 1.0;
  hp.lambda = 0.0;
  const double expected = 0.5 * (2.0 - std::log(2.0));
  CHECK(objective({2, Vector::Ones(1)}, data, hp) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("objective skips f1 entirely at alpha = 0") {
  // Disconnected weights would make f1 throw; at alpha = 0 they must not.
  const ProblemData data(Matrix::Identity(3, 3), Vector::Ones(3));
  HyperParams hp;
  hp.alpha = 0.0;
  Vector w(3);
  w << 1, 0, 0;
  CHECK_NOTHROW(objective({3, w}, data, hp));
  hp.alpha = 0.5;
  CHECK_THROWS_AS(objective({3, w}, data, hp), Error);
}

TEST_CASE("hyperparameter validation") {
  HyperParams hp;
  hp.alpha = 1.5;
  CHECK_THROWS_AS(hp.validate(), Error);
  hp = HyperParams{};
  hp.sigma2 = 0.0;
  CHECK_THROWS_AS(hp.validate(), Error);
  hp = HyperParams{};
  hp.lambda = -1.0;
  CHECK_THROWS_AS(hp.validate(), Error);
  hp = HyperParams{};
  hp.scad_a = 2.0;
  CHECK_THROWS_AS(hp.validate(), Error);
}

TEST_CASE("problem data repairs slightly indefinite covariances") {
  Matrix S = Matrix::Identity(3, 3);
  SUBCASE("tiny negative eigenvalue is clipped") {
    Matrix V = Matrix::Identity(3, 3);
    Vector evals(3);
    evals << 1.0, 0.5, -1e-9;
    const Matrix repaired = V * evals.asDiagonal() * V.transpose();
    ProblemData data(repaired, Vector::Zero(3));
    Eigen::SelfAdjointEigenSolver<Matrix> es(data.S);
    CHECK(es.eigenvalues().minCoeff() >= -1e-16);
  }
  SUBCASE("strongly indefinite input is rejected") {
    S(2, 2) = -0.5;
    CHECK_THROWS_AS(ProblemData(S, Vector::Zero(3)), Error);
  }
  SUBCASE("asymmetric input is rejected") {
    Matrix bad = Matrix::Identity(3, 3);
    bad(0, 1) = 0.3;
    CHECK_THROWS_AS(ProblemData(bad, Vector::Zero(3)), Error);
  }
  SUBCASE("negative distances are rejected") {
    Vector z(3);
    z << 1.0, -0.2, 0.0;
    CHECK_THROWS_AS(ProblemData(Matrix::Identity(3, 3), z), Error);
  }
}

TEST_CASE("smooth gradient matches central finite differences") {
  Rng rng(27);
  for (int trial = 0; trial < 10; ++trial) {
    const int p = 3 + static_cast<int>(rng.uniform_int(0, 4));  // p in [3, 7]
    const int m = edge_count(p);
    Vector z(m);
    for (int k = 0; k < m; ++k) z[k] = rng.uniform(0.0, 2.0);
    const ProblemData data(random_psd(p, rng), z);
    HyperParams hp;
    hp.alpha = rng.uniform(0.0, 1.0);
    hp.sigma2 = rng.uniform(0.5, 2.0);

    const WeightVector w{p, random_interior(m, rng)};
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
      CHECK(grad[k] == doctest::Approx(fd).epsilon(1e-5));
    }
  }
}

TEST_CASE("p = 2 signal-only gradient vanishes at the closed-form optimum") {
  // d/da (2a - log 2a) = 2 - 1/a = 0 at a = 0.5.
  const ProblemData data(Matrix::Identity(2, 2), Vector::Zero(1));
  HyperParams hp;
  hp.alpha = 1.0;
  const Vector grad = smooth_gradient({2, Vector::Constant(1, 0.5)}, data, hp);
  CHECK(std::abs(grad[0]) < 1e-12);
}
