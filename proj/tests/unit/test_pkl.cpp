#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

#include "tcrit/pkl.hpp"

using namespace tcrit;
using Catch::Matchers::WithinAbs;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> xs) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

/// Roots of 3x^2 - 2(sum S)x + sum_{i<j} S_i S_j, ascending.
std::array<double, 2> quadratic_roots(const Eigen::Vector3d& s) {
  const double b = -2.0 * s.sum();
  const double c = s(0) * s(1) + s(0) * s(2) + s(1) * s(2);
  const double disc = std::max(0.0, b * b - 12.0 * c);
  return {(-b - std::sqrt(disc)) / 6.0, (-b + std::sqrt(disc)) / 6.0};
}

/// Constrained spectrum via the SVD projector onto ker(C): eigenvalues of
/// P (diag(S) + shift) P with the rank(C) zeros removed.
std::vector<double> projector_oracle(const PklSystem& sys) {
  const double shift = 10.0 + sys.s.cwiseAbs().maxCoeff();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys.incidence, Eigen::ComputeFullV);
  const auto rank = svd.rank();
  const auto n = sys.incidence.cols();
  Eigen::MatrixXd q = svd.matrixV().rightCols(n - rank);
  Eigen::MatrixXd p = q * q.transpose();
  Eigen::MatrixXd m = p * (sys.s.array() + shift).matrix().asDiagonal() * p;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m);
  std::vector<double> out;
  for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i)
    if (eig.eigenvalues()(i) > shift / 2) out.push_back(eig.eigenvalues()(i) - shift);
  return out;
}

}  // namespace

TEST_CASE("incidence signs", "[pkl]") {
  auto s12 = build_system(1, 2, vec({0, 0, 0}));
  CHECK(s12.faces == std::vector<Simplex>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(s12.cofaces == std::vector<Simplex>{{0, 1, 2}});
  REQUIRE(s12.incidence.rows() == 1);
  CHECK(s12.incidence(0, 0) == 1.0);
  CHECK(s12.incidence(0, 1) == -1.0);
  CHECK(s12.incidence(0, 2) == 1.0);

  // (0) drops vertex 1 of (0,1), (1) drops vertex 0.
  auto s01 = build_system(0, 1, vec({0, 0}));
  CHECK(s01.incidence(0, 0) == -1.0);
  CHECK(s01.incidence(0, 1) == 1.0);
}

TEST_CASE("incidence rank for k=1, l=3", "[pkl]") {
  auto sys = build_system(1, 3, Eigen::VectorXd::Zero(6));
  CHECK(sys.faces.size() == 6);
  CHECK(sys.cofaces.size() == 4);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(sys.incidence);
  CHECK(lu.rank() == 3);
}

TEST_CASE("incidence is a boundary operator", "[pkl][property]") {
  // C_{k+1} * C_k = 0 for the simplex {0..l}.
  for (int l = 2; l <= 5; ++l)
    for (int k = 0; k + 2 <= l; ++k) {
      auto lower = build_system(k, l, Eigen::VectorXd::Zero(static_cast<Eigen::Index>(binomial(l + 1, k + 1))));
      auto upper = build_system(k + 1, l, Eigen::VectorXd::Zero(static_cast<Eigen::Index>(binomial(l + 1, k + 2))));
      CHECK((upper.incidence * lower.incidence).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("build_system errors", "[pkl]") {
  auto code = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::ParseError;
  };
  CHECK(code([] { build_system(2, 2, vec({1})); }) == Errc::BadDims);
  CHECK(code([] { build_system(-1, 2, vec({1})); }) == Errc::BadDims);
  CHECK(code([] { build_system(1, 2, vec({1, 2})); }) == Errc::MissingS);
}

TEST_CASE("eval_det examples", "[pkl]") {
  CHECK_THAT(std::abs(eval_det(build_system(1, 2, vec({0, 0, 0})), 1.0)), WithinAbs(3.0, 1e-12));
  auto s01 = build_system(0, 1, vec({0, 0}));
  for (double t : {-2.0, -0.5, 0.0, 0.25, 3.0}) CHECK_THAT(std::abs(eval_det(s01, t)), WithinAbs(2.0 * std::abs(t), 1e-12));
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  Eigen::VectorXd s(6);
  for (int trial = 0; trial < 10; ++trial) {
    for (auto& x : s) x = u(rng);
    CHECK(std::abs(eval_det(build_system(1, 3, s), u(rng))) <= 1e-12);
  }
}

TEST_CASE("closed form for k=1, l=2 with constant -1", "[pkl][property]") {
  // Schur complement of diag(x) in the bordered matrix: det = -sum_i C_i^2 prod_{j != i} x_j.
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::Vector3d s(u(rng), u(rng), u(rng));
    const double lambda = u(rng);
    const Eigen::Vector3d x = Eigen::Vector3d::Constant(lambda) - s;
    const double e2 = x(0) * x(1) + x(0) * x(2) + x(1) * x(2);
    CHECK_THAT(eval_det(build_system(1, 2, s), lambda), WithinAbs(-e2, 1e-12));
  }
}

TEST_CASE("det_roots examples", "[pkl]") {
  auto r1 = det_roots(build_system(1, 2, vec({1, 1, 1})));
  REQUIRE(r1.roots.size() == 2);
  CHECK_THAT(r1.roots[0], WithinAbs(1.0, 1e-6));
  CHECK_THAT(r1.roots[1], WithinAbs(1.0, 1e-6));

  auto r2 = det_roots(build_system(1, 2, vec({1, 1, -1})));
  REQUIRE(r2.roots.size() == 2);
  CHECK_THAT(r2.roots[0], WithinAbs(-1.0 / 3.0, 1e-10));
  CHECK_THAT(r2.roots[1], WithinAbs(1.0, 1e-10));

  auto r3 = det_roots(build_system(1, 2, vec({0.627320, 0.354503, -0.018177})));
  REQUIRE(r3.roots.size() == 2);
  CHECK_THAT(r3.roots[0], WithinAbs(0.134134, 1e-6));
  CHECK_THAT(r3.roots[1], WithinAbs(0.508296, 1e-6));
  CHECK_FALSE(r3.degenerate);
  CHECK_THAT(*r3.min_root, WithinAbs(r3.roots[0], 0.0));
}

TEST_CASE("constrained_roots examples", "[pkl]") {
  auto r1 = constrained_roots(build_system(1, 2, vec({1, 1, 1})));
  REQUIRE(r1.roots.size() == 2);
  CHECK_THAT(r1.roots[0], WithinAbs(1.0, 1e-12));
  CHECK_THAT(r1.roots[1], WithinAbs(1.0, 1e-12));

  auto r2 = constrained_roots(build_system(1, 2, vec({0.627320, 0.354503, -0.018177})));
  REQUIRE(r2.roots.size() == 2);
  CHECK_THAT(r2.roots[0], WithinAbs(0.134134, 1e-6));
  CHECK_THAT(r2.roots[1], WithinAbs(0.508296, 1e-6));

  auto sys = build_system(1, 3, vec({0.3, -1.2, 0.7, 1.9, -0.4, 0.05}));
  auto r3 = constrained_roots(sys);
  REQUIRE(r3.roots.size() == 3);
  auto oracle = projector_oracle(sys);
  REQUIRE(oracle.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK_THAT(r3.roots[i], WithinAbs(oracle[i], 1e-10));
  CHECK(det_roots(sys).degenerate);
}

TEST_CASE("kernel basis is orthonormal and annihilated", "[pkl][property]") {
  for (int l = 1; l <= 4; ++l)
    for (int k = 0; k < l; ++k) {
      auto sys = build_system(k, l, Eigen::VectorXd::Zero(static_cast<Eigen::Index>(binomial(l + 1, k + 1))));
      auto q = kernel_basis(sys.incidence);
      Eigen::FullPivLU<Eigen::MatrixXd> lu(sys.incidence);
      CHECK(q.cols() == sys.incidence.cols() - lu.rank());
      CHECK((sys.incidence * q).cwiseAbs().maxCoeff() <= 1e-12);
      CHECK((q.transpose() * q - Eigen::MatrixXd::Identity(q.cols(), q.cols())).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("root methods agree with the quadratic formula", "[pkl][property]") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    Eigen::Vector3d s(u(rng), u(rng), u(rng));
    auto sys = build_system(1, 2, s);
    auto d = det_roots(sys);
    auto c = constrained_roots(sys);
    auto q = quadratic_roots(s);
    REQUIRE(d.roots.size() == 2);
    REQUIRE(c.roots.size() == 2);
    for (int i = 0; i < 2; ++i) {
      CHECK_THAT(d.roots[i], WithinAbs(c.roots[i], 1e-8));
      CHECK_THAT(d.roots[i], WithinAbs(q[i], 1e-8));
      CHECK_THAT(c.roots[i], WithinAbs(q[i], 1e-8));
    }
  }
}

TEST_CASE("roots for higher l = k+1 match the projector oracle", "[pkl][property]") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int k = 0; k <= 3; ++k) {
    const int l = k + 1;
    const auto n = static_cast<Eigen::Index>(binomial(l + 1, k + 1));
    for (int trial = 0; trial < 20; ++trial) {
      Eigen::VectorXd s(n);
      for (auto& x : s) x = u(rng);
      auto sys = build_system(k, l, s);
      auto d = det_roots(sys);
      CHECK_FALSE(d.degenerate);
      auto c = constrained_roots(sys);
      auto o = projector_oracle(sys);
      REQUIRE(c.roots.size() == o.size());
      REQUIRE(d.roots.size() == o.size());
      for (std::size_t i = 0; i < o.size(); ++i) {
        CHECK_THAT(c.roots[i], WithinAbs(o[i], 1e-9));
        CHECK_THAT(d.roots[i], WithinAbs(o[i], 1e-6));
      }
    }
  }
}

TEST_CASE("shift and permutation invariance", "[pkl][property]") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    Eigen::Vector3d s(u(rng), u(rng), u(rng));
    const double shift = u(rng);
    auto base = det_roots(build_system(1, 2, s));
    auto shifted = det_roots(build_system(1, 2, (s.array() + shift).matrix()));
    for (int i = 0; i < 2; ++i) CHECK_THAT(shifted.roots[i], WithinAbs(base.roots[i] + shift, 1e-8));

    Eigen::Vector3d p(s(2), s(0), s(1));
    auto permuted = det_roots(build_system(1, 2, p));
    for (int i = 0; i < 2; ++i) CHECK_THAT(permuted.roots[i], WithinAbs(base.roots[i], 1e-8));
  }
}

TEST_CASE("degenerate systems beyond l = k+1", "[pkl]") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (auto [k, l] : {std::pair{0, 2}, std::pair{0, 3}, std::pair{1, 3}, std::pair{0, 4}, std::pair{1, 4}}) {
    Eigen::VectorXd s(static_cast<Eigen::Index>(binomial(l + 1, k + 1)));
    for (auto& x : s) x = u(rng);
    auto r = det_roots(build_system(k, l, s));
    CHECK(r.degenerate);
    CHECK(r.roots.empty());
    CHECK_FALSE(r.min_root);
  }
}

TEST_CASE("cluster-mean agreement", "[pkl]") {
  CHECK(roots_agree({1.0, 2.0}, {1.0 + 1e-8, 2.0 - 1e-8}, 1e-6));
  CHECK_FALSE(roots_agree({1.0, 2.0}, {1.0 + 1e-5, 2.0}, 1e-6));
  CHECK_FALSE(roots_agree({1.0, 2.0}, {1.0}, 1e-6));
  // A triple root split symmetrically keeps its mean.
  CHECK(roots_agree({2.5, 2.5, 2.5}, {2.5 - 1e-5, 2.5, 2.5 + 1e-5}, 1e-6));
  CHECK_FALSE(roots_agree({2.5, 2.5, 2.5}, {2.5 + 1e-5, 2.5 + 1e-5, 2.5 + 1e-5}, 1e-6));
}

TEST_CASE("repeated roots from uniform S", "[pkl]") {
  for (int k = 0; k <= 3; ++k) {
    const int l = k + 1;
    const auto n = static_cast<Eigen::Index>(binomial(l + 1, k + 1));
    auto sys = build_system(k, l, Eigen::VectorXd::Constant(n, 0.75));
    auto c = constrained_roots(sys);
    auto d = det_roots(sys);
    CHECK(c.roots.size() == static_cast<std::size_t>(n - 1));
    for (double r : c.roots) CHECK_THAT(r, WithinAbs(0.75, 1e-12));
    CHECK(roots_agree(c.roots, d.roots, 1e-6));
  }
}
