#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

#include "tcrit/error.hpp"

namespace tcrit {

template <typename Scalar>
struct SymmetricEigen {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  Vector values;   // ascending
  Matrix vectors;  // columns match `values`; empty unless requested
  int sweeps = 0;
};

struct JacobiOptions {
  int max_sweeps = 100;
  double tolerance = 1e-12;  // off-diagonal Frobenius norm relative to ||A||_F
  bool compute_vectors = true;
};

/// Cyclic Jacobi eigensolver for a dense symmetric matrix. Only the lower and
/// upper triangles' average is used, so slightly asymmetric input is fine.
/// Throws NotConverged after `max_sweeps`.
template <typename Derived>
SymmetricEigen<typename Derived::Scalar> jacobi_eigen(const Eigen::MatrixBase<Derived>& input,
                                                      const JacobiOptions& opt = {}) {
  using Scalar = typename Derived::Scalar;
  using Matrix = typename SymmetricEigen<Scalar>::Matrix;
  using std::abs;
  using std::sqrt;

  const Eigen::Index n = input.rows();
  if (input.cols() != n) throw Error(Errc::BadDims, "jacobi_eigen needs a square matrix");

  Matrix a = (input + input.transpose()) / Scalar(2);
  Matrix v;
  if (opt.compute_vectors) v = Matrix::Identity(n, n);

  const Scalar total = a.norm();
  const Scalar target = Scalar(opt.tolerance) * total;
  auto off_norm = [&] {
    Scalar s(0);
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = j + 1; i < n; ++i) s += a(i, j) * a(i, j);
    return sqrt(Scalar(2) * s);
  };

  int sweep = 0;
  for (; off_norm() > target; ++sweep) {
    if (sweep >= opt.max_sweeps)
      throw Error(Errc::NotConverged, "Jacobi did not converge in " + std::to_string(opt.max_sweeps) + " sweeps");
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = a(p, q);
        if (apq == Scalar(0)) continue;
        const Scalar theta = (a(q, q) - a(p, p)) / (Scalar(2) * apq);
        const Scalar t = (theta >= Scalar(0) ? Scalar(1) : Scalar(-1)) / (abs(theta) + sqrt(theta * theta + Scalar(1)));
        const Scalar c = Scalar(1) / sqrt(t * t + Scalar(1));
        const Scalar s = t * c;

        // A <- J^T A J with J the (p,q) plane rotation [c s; -s c].
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar akp = a(k, p);
          const Scalar akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar apk = a(p, k);
          const Scalar aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = Scalar(0);
        a(q, p) = Scalar(0);

        if (opt.compute_vectors) {
          for (Eigen::Index k = 0; k < n; ++k) {
            const Scalar vkp = v(k, p);
            const Scalar vkq = v(k, q);
            v(k, p) = c * vkp - s * vkq;
            v(k, q) = s * vkp + c * vkq;
          }
        }
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index(0));
  std::sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) { return a(i, i) < a(j, j); });

  SymmetricEigen<Scalar> out;
  out.sweeps = sweep;
  out.values.resize(n);
  if (opt.compute_vectors) out.vectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Index src = order[static_cast<std::size_t>(i)];
    out.values(i) = a(src, src);
    if (opt.compute_vectors) out.vectors.col(i) = v.col(src);
  }
  return out;
}

}  // namespace tcrit
