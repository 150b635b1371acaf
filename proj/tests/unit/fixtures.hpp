#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tcrit/cli.hpp"
#include "tcrit/complex.hpp"

namespace fixtures {

using tcrit::SimplicialComplex;

inline SimplicialComplex triangle() { return tcrit::build_complex({{0, 1, 2}}); }

/// Boundary of the octahedron: one vertex from each antipodal pair {0,1}, {2,3}, {4,5}.
inline SimplicialComplex octahedron() {
  std::vector<std::vector<int>> tops;
  for (int a : {0, 1})
    for (int b : {2, 3})
      for (int c : {4, 5}) tops.push_back({a, b, c});
  return tcrit::build_complex(tops);
}

inline SimplicialComplex two_triangles_edge() { return tcrit::build_complex({{0, 1, 2}, {0, 1, 3}}); }

inline SimplicialComplex bowtie() { return tcrit::build_complex({{0, 1, 2}, {0, 3, 4}}); }

inline SimplicialComplex tetrahedron_boundary() {
  return tcrit::build_complex({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

/// Seven-vertex triangulated torus.
inline SimplicialComplex torus7() {
  std::vector<std::vector<int>> tops;
  for (int i = 0; i < 7; ++i) {
    tops.push_back({i, (i + 1) % 7, (i + 3) % 7});
    tops.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return tcrit::build_complex(tops);
}

/// Boundary of the 4-simplex (a 3-sphere).
inline SimplicialComplex simplex4_boundary() {
  return tcrit::build_complex({{1, 2, 3, 4}, {0, 2, 3, 4}, {0, 1, 3, 4}, {0, 1, 2, 4}, {0, 1, 2, 3}});
}

/// Boundary of the 4-dimensional cross-polytope.
inline SimplicialComplex cross_polytope4() {
  std::vector<std::vector<int>> tops;
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<int> t;
    for (int i = 0; i < 4; ++i) t.push_back(2 * i + ((mask >> i) & 1));
    tops.push_back(t);
  }
  return tcrit::build_complex(tops);
}

inline SimplicialComplex two_tetrahedra() { return tcrit::build_complex({{0, 1, 2, 3}, {0, 1, 2, 4}}); }

inline SimplicialComplex heawood_cone() { return tcrit::builtin_workload("heawood-cone")->complex; }

/// Every complex the invariant suites sweep over.
inline std::vector<std::pair<std::string, SimplicialComplex>> all() {
  return {{"triangle", triangle()},
          {"octahedron", octahedron()},
          {"two-triangles", two_triangles_edge()},
          {"bowtie", bowtie()},
          {"tetrahedron", tetrahedron_boundary()},
          {"torus7", torus7()},
          {"simplex4", simplex4_boundary()},
          {"cross4", cross_polytope4()},
          {"two-tetrahedra", two_tetrahedra()},
          {"heawood-cone", heawood_cone()}};
}

}  // namespace fixtures
