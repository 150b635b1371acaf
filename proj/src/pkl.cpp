#include "tcrit/pkl.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <numeric>

#include "tcrit/jacobi.hpp"

namespace tcrit {

namespace {

// Newton divided differences at `x` for values `y`; returns monomial
// coefficients in ascending order.
std::vector<double> interpolate_monomial(const std::vector<double>& x, std::vector<double> y) {
  const std::size_t n = x.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) y[i] = (y[i] - y[i - 1]) / (x[i] - x[i - j]);
  // Horner expansion of c0 + c1 (t - x0) + c2 (t - x0)(t - x1) + ...
  std::vector<double> coeffs{y[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    std::vector<double> next(coeffs.size() + 1, 0.0);
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
      next[d + 1] += coeffs[d];
      next[d] -= x[i] * coeffs[d];
    }
    next[0] += y[i];
    coeffs = std::move(next);
  }
  return coeffs;
}

}  // namespace

std::string_view root_method_name(RootMethod m) {
  return m == RootMethod::DeterminantInterpolation ? "determinant-interpolation" : "constrained-eigenvalue";
}

PklSystem build_system(int k, int l, const Eigen::VectorXd& s) {
  if (k < 0 || l <= k) throw Error(Errc::BadDims, "need 0 <= k < l, got k=" + std::to_string(k) + " l=" + std::to_string(l));
  std::vector<VertexId> verts(static_cast<std::size_t>(l + 1));
  std::iota(verts.begin(), verts.end(), 0);
  const Simplex gamma(verts);

  PklSystem sys;
  sys.k = k;
  sys.l = l;
  sys.faces = gamma.faces(k);
  sys.cofaces = gamma.faces(k + 1);
  if (static_cast<std::size_t>(s.size()) != sys.faces.size())
    throw Error(Errc::MissingS, "expected " + std::to_string(sys.faces.size()) + " S values, got " + std::to_string(s.size()));
  sys.s = s;

  std::map<Simplex, Eigen::Index> face_index;
  for (std::size_t i = 0; i < sys.faces.size(); ++i) face_index[sys.faces[i]] = static_cast<Eigen::Index>(i);

  sys.incidence = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(sys.cofaces.size()), static_cast<Eigen::Index>(sys.faces.size()));
  for (std::size_t r = 0; r < sys.cofaces.size(); ++r) {
    const Simplex& nu = sys.cofaces[r];
    for (std::size_t i = 0; i < nu.size(); ++i)
      sys.incidence(static_cast<Eigen::Index>(r), face_index.at(nu.without(i))) = (i % 2 == 0) ? 1.0 : -1.0;
  }
  return sys;
}

Eigen::MatrixXd bordered_matrix(const PklSystem& sys, const Eigen::VectorXd& x) {
  const Eigen::Index nf = sys.incidence.cols();
  const Eigen::Index nc = sys.incidence.rows();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(nf + nc, nf + nc);
  m.topLeftCorner(nf, nf) = x.asDiagonal();
  m.topRightCorner(nf, nc) = sys.incidence.transpose();
  m.bottomLeftCorner(nc, nf) = sys.incidence;
  return m;
}

double eval_det(const PklSystem& sys, double lambda) {
  const Eigen::VectorXd x = Eigen::VectorXd::Constant(sys.s.size(), lambda) - sys.s;
  return bordered_matrix(sys, x).partialPivLu().determinant();
}

RootReport det_roots(const PklSystem& sys) {
  RootReport out;
  out.method = RootMethod::DeterminantInterpolation;

  const std::size_t nodes = sys.faces.size() + 1;
  const double lo = sys.s.minCoeff() - 1.0;
  const double hi = sys.s.maxCoeff() + 1.0;
  std::vector<double> x(nodes), y(nodes);
  bool all_zero = true;
  for (std::size_t j = 0; j < nodes; ++j) {
    const double angle = std::numbers::pi * (2.0 * static_cast<double>(j) + 1.0) / (2.0 * static_cast<double>(nodes));
    x[j] = 0.5 * (lo + hi) + 0.5 * (hi - lo) * std::cos(angle);
    y[j] = eval_det(sys, x[j]);
    if (std::abs(y[j]) > kDegenerateDet) all_zero = false;
  }
  if (all_zero) {
    out.degenerate = true;
    return out;
  }
  if (sys.l > sys.k + 1)
    throw Error(Errc::NotSupported, "determinant roots are only defined for l = k+1");

  std::vector<double> coeffs = interpolate_monomial(x, y);
  double scale = 0.0;
  for (double c : coeffs) scale = std::max(scale, std::abs(c));
  while (coeffs.size() > 1 && std::abs(coeffs.back()) <= 1e-9 * scale) coeffs.pop_back();

  const auto degree = static_cast<Eigen::Index>(coeffs.size()) - 1;
  if (degree == 0) return out;

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(degree, degree);
  if (degree > 1) companion.bottomLeftCorner(degree - 1, degree - 1).setIdentity();
  for (Eigen::Index i = 0; i < degree; ++i) companion(i, degree - 1) = -coeffs[static_cast<std::size_t>(i)] / coeffs.back();

  Eigen::EigenSolver<Eigen::MatrixXd> es(companion, false);
  if (es.info() != Eigen::Success) throw Error(Errc::NotConverged, "companion eigenvalues did not converge");
  for (Eigen::Index i = 0; i < degree; ++i) {
    const std::complex<double> r = es.eigenvalues()(i);
    const double imag = std::abs(r.imag());
    if (imag > kRealRootImag) {
      // Roots are real for l = k+1; a larger imaginary part can only come
      // from a repeated root split by rounding (about eps^(1/m) for multiplicity m).
      if (imag > kClusteredRootImag * std::max(1.0, std::abs(r.real())))
        throw Error(Errc::NumericalMismatch, "companion root with imaginary part " + std::to_string(imag));
      out.max_discarded_imag = std::max(out.max_discarded_imag, imag);
    }
    out.roots.push_back(r.real());
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.min_root = out.roots.front();
  return out;
}

bool roots_agree(const std::vector<double>& reference, const std::vector<double>& approx, double tol) {
  if (reference.size() != approx.size()) return false;
  std::size_t begin = 0;
  while (begin < reference.size()) {
    std::size_t end = begin + 1;
    while (end < reference.size() &&
           reference[end] - reference[end - 1] <= tol * std::max(1.0, std::abs(reference[end])))
      ++end;
    double ref_sum = 0.0;
    double approx_sum = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
      ref_sum += reference[i];
      approx_sum += approx[i];
    }
    const double count = static_cast<double>(end - begin);
    const double mean = ref_sum / count;
    if (std::abs(approx_sum / count - mean) > tol * std::max(1.0, std::abs(mean))) return false;
    begin = end;
  }
  return true;
}

Eigen::MatrixXd kernel_basis(const Eigen::MatrixXd& c) {
  const Eigen::MatrixXd ct = c.transpose();
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(ct);
  qr.setThreshold(1e-10);
  const Eigen::Index rank = qr.rank();
  const Eigen::MatrixXd q = qr.householderQ();
  return q.rightCols(ct.rows() - rank);
}

RootReport constrained_roots(const PklSystem& sys) {
  RootReport out;
  out.method = RootMethod::ConstrainedEigenvalue;
  const Eigen::MatrixXd q = kernel_basis(sys.incidence);
  if (q.cols() == 0) throw Error(Errc::EmptyKernel, "incidence matrix has trivial kernel");
  const Eigen::MatrixXd restricted = q.transpose() * sys.s.asDiagonal() * q;
  JacobiOptions opt;
  opt.compute_vectors = false;
  const auto eig = jacobi_eigen(restricted, opt);
  out.roots.assign(eig.values.data(), eig.values.data() + eig.values.size());
  out.min_root = out.roots.front();
  return out;
}

}  // namespace tcrit
