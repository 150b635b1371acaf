#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "tcrit/complex.hpp"

namespace tcrit {

/// Eigenvalues at or below this are treated as zero.
inline constexpr double kZeroEigenvalue = 1e-9;

struct WeightedEdge {
  int a = 0;  // index into WeightedGraph::vertices
  int b = 0;
  double weight = 0.0;
};

/// Undirected weighted simple graph. Vertex weights are weighted degrees.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  /// Edges are given by vertex id. Throws BadParams on self-loops, repeated
  /// edges, non-positive weights, unknown ids or isolated vertices.
  WeightedGraph(std::vector<VertexId> vertices, const std::vector<std::pair<std::pair<VertexId, VertexId>, double>>& edges);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<WeightedEdge>& edges() const { return edges_; }
  /// Weighted degree, indexed like vertices().
  const std::vector<double>& vertex_weights() const { return vertex_weight_; }
  int index_of(VertexId v) const;
  double edge_weight(VertexId u, VertexId v) const;

  template <typename Scalar = double>
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> adjacency() const {
    const auto n = static_cast<Eigen::Index>(vertices_.size());
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> w = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
    for (const auto& e : edges_) {
      w(e.a, e.b) = Scalar(e.weight);
      w(e.b, e.a) = Scalar(e.weight);
    }
    return w;
  }

  int component_count() const;

 private:
  std::vector<VertexId> vertices_;
  std::vector<WeightedEdge> edges_;
  std::vector<double> vertex_weight_;
};

/// I - Dg^{-1/2} W Dg^{-1/2}.
template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> normalized_laplacian(const WeightedGraph& g) {
  using std::sqrt;
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> inv_sqrt(n);
  for (Eigen::Index i = 0; i < n; ++i) inv_sqrt(i) = Scalar(1) / sqrt(Scalar(g.vertex_weights()[static_cast<std::size_t>(i)]));
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> l = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Identity(n, n);
  l -= inv_sqrt.asDiagonal() * g.adjacency<Scalar>() * inv_sqrt.asDiagonal();
  return l;
}

struct SpectralSummary {
  std::vector<double> eigenvalues;  // ascending, normalized scale in [0, 2]
  std::optional<double> lambda_norm;
  int components = 0;
  int zero_multiplicity = 0;
  int link_dim_scale = 1;
  std::optional<double> lambda_scaled;  // link_dim_scale * lambda_norm
};

/// 1-skeleton of a link with edge weights m_tau. Throws LinkTooSmall for a
/// 0-dimensional link.
WeightedGraph skeleton(const Link& link);

/// Normalized spectrum scaled by `link_dim_scale` into the link Laplacian's
/// units. Throws NotConverged, or NumericalMismatch when the zero-eigenvalue
/// multiplicity disagrees with the union-find component count.
SpectralSummary spectrum(const WeightedGraph& graph, int link_dim_scale = 1);

/// Spectrum of the link of `tau`, scaled by the link dimension. Throws
/// DisconnectedLink or LinkTooSmall.
SpectralSummary link_lambda(const SimplicialComplex& complex, const Simplex& tau);

}  // namespace tcrit
