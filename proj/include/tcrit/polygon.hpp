#pragma once

#include "tcrit/spectral.hpp"

namespace tcrit {

/// Generalized m-gon with parameters (s, t): one side of the incidence graph
/// has valency s+1, the other t+1.
struct PolygonParams {
  int m = 3;
  int s = 1;
  int t = 1;

  bool thick() const { return s >= 2 && t >= 2; }
};

/// Feit-Higman smallest positive eigenvalue of the normalized Laplacian.
/// Throws BadGonality unless m is 2, 3, 4, 6 or 8; BadParams for s or t < 1
/// or m = 3 with s != t.
double feit_higman_lambda(const PolygonParams& p);

/// K_{a,b} with unit weights; throws TooSmall unless a, b >= 2.
WeightedGraph complete_bipartite(int a, int b);

bool is_prime(int q);

/// Point-line incidence graph of PG(2, q) for prime q <= 13. Points are ids
/// 0..N-1 and lines N..2N-1 with N = q^2+q+1. Throws NotPrime or TooLarge.
WeightedGraph projective_plane_incidence(int q);

struct GraphMetrics {
  int girth = 0;     // 0 for a forest
  int diameter = 0;  // -1 when disconnected
  bool bipartite = false;
};

/// BFS from every vertex.
GraphMetrics graph_metrics(const WeightedGraph& g);

}  // namespace tcrit
