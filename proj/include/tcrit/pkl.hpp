#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "tcrit/complex.hpp"

namespace tcrit {

/// Bordered system for one anchor l-simplex: k-faces F of the standard
/// l-simplex {0..l}, (k+1)-faces F', and the signed incidence matrix
/// C (|F'| x |F|) with C(nu, sigma) = (-1)^i when sigma is nu with its i-th
/// vertex removed.
struct PklSystem {
  int k = 0;
  int l = 0;
  std::vector<Simplex> faces;      // F, lexicographic
  std::vector<Simplex> cofaces;    // F', lexicographic
  Eigen::MatrixXd incidence;       // C
  Eigen::VectorXd s;               // S_sigma, indexed like `faces`
};

enum class RootMethod { DeterminantInterpolation, ConstrainedEigenvalue };

std::string_view root_method_name(RootMethod m);

struct RootReport {
  RootMethod method = RootMethod::DeterminantInterpolation;
  std::vector<double> roots;  // ascending
  bool degenerate = false;    // p vanishes identically
  std::optional<double> min_root;
  /// Largest imaginary part dropped from a companion eigenvalue.
  double max_discarded_imag = 0.0;
};

/// Throws BadDims unless 0 <= k < l, MissingS unless s has C(l+1, k+1) entries.
PklSystem build_system(int k, int l, const Eigen::VectorXd& s);

/// Bordered matrix [[diag(x), C^T], [C, 0]].
Eigen::MatrixXd bordered_matrix(const PklSystem& sys, const Eigen::VectorXd& x);

/// det of the bordered matrix at x_sigma = lambda - S_sigma (partial-pivot LU).
double eval_det(const PklSystem& sys, double lambda);

/// Interpolates lambda -> eval_det on Chebyshev nodes and takes companion
/// eigenvalues. Degenerate when every sample is within `kDegenerateDet` of
/// zero; throws NotSupported for a non-degenerate l > k+1 system.
RootReport det_roots(const PklSystem& sys);

/// Eigenvalues of Q^T diag(S) Q for an orthonormal basis Q of ker(C): the
/// stationary values of sum S x^2 on the unit sphere of ker(C). Throws
/// EmptyKernel.
RootReport constrained_roots(const PklSystem& sys);

/// Compares ascending root lists cluster by cluster: roots of `reference`
/// closer than `tol` (relative) form a cluster, and the mean of the matching
/// entries of `approx` must lie within `tol` of the cluster mean. Cluster
/// means stay well conditioned when the individual roots of a repeated root
/// do not.
bool roots_agree(const std::vector<double>& reference, const std::vector<double>& approx, double tol);

/// Orthonormal basis of ker(C) from a column-pivoted QR of C^T.
Eigen::MatrixXd kernel_basis(const Eigen::MatrixXd& c);

inline constexpr double kDegenerateDet = 1e-10;
inline constexpr double kRealRootImag = 1e-8;
/// Largest relative imaginary part dropped as rounding of a repeated real root.
inline constexpr double kClusteredRootImag = 1e-3;

}  // namespace tcrit
