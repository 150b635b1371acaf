#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "tcrit/criteria.hpp"
#include "tcrit/spectral.hpp"

namespace tcrit {

/// Reduced cosine of a link graph over functions orthogonal to constants in
/// the degree-weighted inner product:
///
///   sum_E m(u,v) <phi(u), phi(v)> / sum_E m(u,v) |phi(u)| |phi(v)|.
struct CosineEstimate {
  double value = -1.0;
  Eigen::MatrixXd witness;  // vertex x dim, rows follow graph.vertices()
  bool certified = false;
  int restarts_used = 0;
  int dim = 1;
};

/// Ratio for `phi` (rows = vertices). Returns nullopt when the denominator
/// is below 1e-12.
std::optional<double> cosine_ratio(const WeightedGraph& g, const Eigen::MatrixXd& phi);

/// Orthogonal projection of each column onto {x : sum_u deg_w(u) x(u) = 0}.
Eigen::MatrixXd project_mean_zero(const WeightedGraph& g, const Eigen::MatrixXd& phi);

/// Multi-start projected ascent. The value is attained by the witness, so it
/// is a lower bound on the supremum. Throws Disconnected, BadParams,
/// DegenerateDenominator.
CosineEstimate estimate_cos_r(const WeightedGraph& g, int dim, int restarts, std::uint64_t seed);

/// Exhaustive scalar search on a cube-surface grid over the mean-zero
/// subspace, refined by compass search. Throws TooLarge above 6 vertices.
CosineEstimate oracle_cos_r(const WeightedGraph& g, int grid);

/// Cosine per (k-1)-simplex.
using CosTable = std::map<Simplex, double>;

struct AMatrix {
  Simplex anchor;
  std::vector<Simplex> index;  // k-faces of anchor, lexicographic
  Eigen::MatrixXd entries;
  double min_eigenvalue = 0.0;
};

/// Unit diagonal, entry (a, b) = -cos(a n b). Throws BadDims, MissingCos.
AMatrix build_A(const SimplicialComplex& complex, const Simplex& gamma, const CosTable& cos);

enum class CosineSource { Estimate, Oracle, Table };

struct Theorem2Options {
  CosineSource source = CosineSource::Estimate;
  int dim = 1;
  int restarts = 100;
  std::uint64_t seed = 0;
  int grid = 21;
  CosTable table;  // vertex -> cos, for CosineSource::Table
};

/// cos_r of every vertex link of a 2-complex.
CosTable vertex_link_cosines(const SimplicialComplex& complex, const Theorem2Options& opt);

/// A(u,v,w) positive definite for every triangle.
CriterionReport check_theorem2_2d(const SimplicialComplex& complex, const Theorem2Options& opt);

}  // namespace tcrit
