#include "tcrit/spectral.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "tcrit/jacobi.hpp"

namespace tcrit {

WeightedGraph::WeightedGraph(std::vector<VertexId> vertices,
                             const std::vector<std::pair<std::pair<VertexId, VertexId>, double>>& edges)
    : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw Error(Errc::BadParams, "repeated vertex id");
  vertex_weight_.assign(vertices_.size(), 0.0);
  std::set<std::pair<int, int>> seen;
  for (const auto& [uv, w] : edges) {
    const int a = index_of(uv.first);
    const int b = index_of(uv.second);
    if (a == b) throw Error(Errc::BadParams, "self-loop at " + std::to_string(uv.first));
    if (!(w > 0.0)) throw Error(Errc::BadParams, "edge weights must be positive");
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) throw Error(Errc::BadParams, "repeated edge");
    edges_.push_back({std::min(a, b), std::max(a, b), w});
    vertex_weight_[static_cast<std::size_t>(a)] += w;
    vertex_weight_[static_cast<std::size_t>(b)] += w;
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertex_weight_[i] <= 0.0) throw Error(Errc::BadParams, "isolated vertex " + std::to_string(vertices_[i]));
}

int WeightedGraph::index_of(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) throw Error(Errc::BadParams, "unknown vertex " + std::to_string(v));
  return static_cast<int>(it - vertices_.begin());
}

double WeightedGraph::edge_weight(VertexId u, VertexId v) const {
  const int a = std::min(index_of(u), index_of(v));
  const int b = std::max(index_of(u), index_of(v));
  for (const auto& e : edges_)
    if (e.a == a && e.b == b) return e.weight;
  return 0.0;
}

int WeightedGraph::component_count() const {
  std::vector<std::size_t> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges_) parent[find(static_cast<std::size_t>(e.a))] = find(static_cast<std::size_t>(e.b));
  int c = 0;
  for (std::size_t i = 0; i < parent.size(); ++i) c += find(i) == i ? 1 : 0;
  return c;
}

WeightedGraph skeleton(const Link& link) {
  const auto& lc = link.complex;
  if (lc.dim() < 1) throw Error(Errc::LinkTooSmall, "link of " + link.base.str() + " has no edges");
  std::vector<std::pair<std::pair<VertexId, VertexId>, double>> edges;
  for (const auto& e : lc.faces(1)) edges.push_back({{e[0], e[1]}, static_cast<double>(lc.multiplicity(e))});
  return WeightedGraph(lc.vertices(), edges);
}

SpectralSummary spectrum(const WeightedGraph& graph, int link_dim_scale) {
  if (graph.vertex_count() == 0) throw Error(Errc::BadParams, "empty graph");
  JacobiOptions opt;
  opt.compute_vectors = false;
  const auto eig = jacobi_eigen(normalized_laplacian<double>(graph), opt);

  SpectralSummary out;
  out.link_dim_scale = link_dim_scale;
  out.eigenvalues.assign(eig.values.data(), eig.values.data() + eig.values.size());
  for (double ev : out.eigenvalues) {
    if (ev <= kZeroEigenvalue) {
      ++out.zero_multiplicity;
    } else if (!out.lambda_norm) {
      out.lambda_norm = ev;
    }
  }
  out.components = graph.component_count();
  if (out.components != out.zero_multiplicity)
    throw Error(Errc::NumericalMismatch, "zero eigenvalue multiplicity " + std::to_string(out.zero_multiplicity) +
                                             " but " + std::to_string(out.components) + " components");
  if (out.lambda_norm) out.lambda_scaled = link_dim_scale * *out.lambda_norm;
  return out;
}

SpectralSummary link_lambda(const SimplicialComplex& complex, const Simplex& tau) {
  const Link lk = link(complex, tau);
  const WeightedGraph g = skeleton(lk);
  if (g.component_count() != 1) throw Error(Errc::DisconnectedLink, "link of " + tau.str() + " is disconnected");
  return spectrum(g, lk.complex.dim());
}

}  // namespace tcrit
