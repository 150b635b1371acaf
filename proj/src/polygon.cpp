#include "tcrit/polygon.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>

namespace tcrit {

double feit_higman_lambda(const PolygonParams& p) {
  if (p.m != 2 && p.m != 3 && p.m != 4 && p.m != 6 && p.m != 8)
    throw Error(Errc::BadGonality, "no generalized " + std::to_string(p.m) + "-gon (admissible: 2, 3, 4, 6, 8)");
  if (p.s < 1 || p.t < 1) throw Error(Errc::BadParams, "s and t must be >= 1");
  if (p.m == 3 && p.s != p.t) throw Error(Errc::BadParams, "a generalized 3-gon has s = t");

  const double s = p.s;
  const double t = p.t;
  const double denom = (s + 1.0) * (t + 1.0);
  switch (p.m) {
    case 2: return 1.0;
    case 3: return 1.0 - std::sqrt(s) / (s + 1.0);
    case 4: return 1.0 - std::sqrt((s + t) / denom);
    case 6: return 1.0 - std::sqrt((s + t + std::sqrt(s * t)) / denom);
    default: return 1.0 - std::sqrt((s + t + std::sqrt(2.0 * s * t)) / denom);
  }
}

WeightedGraph complete_bipartite(int a, int b) {
  if (a < 2 || b < 2) throw Error(Errc::TooSmall, "K_{a,b} needs a, b >= 2");
  std::vector<VertexId> verts;
  for (int i = 0; i < a + b; ++i) verts.push_back(i);
  std::vector<std::pair<std::pair<VertexId, VertexId>, double>> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.push_back({{i, a + j}, 1.0});
  return WeightedGraph(verts, edges);
}

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

WeightedGraph projective_plane_incidence(int q) {
  if (!is_prime(q)) throw Error(Errc::NotPrime, std::to_string(q) + " is not prime");
  if (q > 13) throw Error(Errc::TooLarge, "q <= 13 supported");

  // Canonical representatives of 1-dimensional subspaces of F_q^3: the first
  // nonzero coordinate is 1. Lines are the same vectors read as dual forms.
  std::vector<std::array<int, 3>> reps;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) reps.push_back({1, a, b});
  for (int b = 0; b < q; ++b) reps.push_back({0, 1, b});
  reps.push_back({0, 0, 1});

  const int n = static_cast<int>(reps.size());
  std::vector<VertexId> verts;
  for (int i = 0; i < 2 * n; ++i) verts.push_back(i);
  std::vector<std::pair<std::pair<VertexId, VertexId>, double>> edges;
  for (int p = 0; p < n; ++p)
    for (int l = 0; l < n; ++l) {
      const auto& x = reps[static_cast<std::size_t>(p)];
      const auto& y = reps[static_cast<std::size_t>(l)];
      if ((x[0] * y[0] + x[1] * y[1] + x[2] * y[2]) % q == 0) edges.push_back({{p, n + l}, 1.0});
    }
  return WeightedGraph(verts, edges);
}

GraphMetrics graph_metrics(const WeightedGraph& g) {
  const int n = static_cast<int>(g.vertex_count());
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& e : g.edges()) {
    adj[static_cast<std::size_t>(e.a)].push_back(e.b);
    adj[static_cast<std::size_t>(e.b)].push_back(e.a);
  }

  GraphMetrics out;
  out.bipartite = true;
  int girth = std::numeric_limits<int>::max();
  int diameter = 0;
  for (int src = 0; src < n; ++src) {
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::queue<int> bfs;
    dist[static_cast<std::size_t>(src)] = 0;
    bfs.push(src);
    while (!bfs.empty()) {
      const int u = bfs.front();
      bfs.pop();
      for (int v : adj[static_cast<std::size_t>(u)]) {
        const auto vu = static_cast<std::size_t>(v);
        const auto uu = static_cast<std::size_t>(u);
        if (dist[vu] < 0) {
          dist[vu] = dist[uu] + 1;
          parent[vu] = u;
          bfs.push(v);
        } else if (parent[uu] != v) {
          // Non-tree edge closes a cycle through src of length <= this.
          girth = std::min(girth, dist[uu] + dist[vu] + 1);
          if (dist[uu] == dist[vu]) out.bipartite = false;
        }
      }
    }
    for (int d : dist) {
      if (d < 0) {
        diameter = -1;
        break;
      }
      if (diameter >= 0) diameter = std::max(diameter, d);
    }
  }
  out.girth = girth == std::numeric_limits<int>::max() ? 0 : girth;
  out.diameter = diameter;
  return out;
}

}  // namespace tcrit
