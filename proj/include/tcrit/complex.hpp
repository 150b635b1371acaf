#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "tcrit/error.hpp"

namespace tcrit {

using VertexId = int;

/// An unordered simplex stored by its canonical representative: strictly
/// increasing vertex ids.
class Simplex {
 public:
  Simplex() = default;
  /// Sorts the input; throws InvalidSimplex on repeats, negative ids or an empty list.
  explicit Simplex(std::vector<VertexId> vertices);
  Simplex(std::initializer_list<VertexId> vertices) : Simplex(std::vector<VertexId>(vertices)) {}

  int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  VertexId operator[](std::size_t i) const { return vertices_[i]; }
  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }

  bool contains(VertexId v) const;
  /// True when every vertex of `other` is a vertex of this simplex.
  bool contains(const Simplex& other) const;

  /// Face obtained by deleting the vertex at position `i`.
  Simplex without(std::size_t i) const;
  Simplex join(const Simplex& other) const;
  Simplex minus(const Simplex& other) const;
  Simplex intersect(const Simplex& other) const;

  /// All faces of dimension `k`, lexicographic.
  std::vector<Simplex> faces(int k) const;

  std::string str() const;

  auto operator<=>(const Simplex&) const = default;
  bool operator==(const Simplex&) const = default;

 private:
  struct Trusted {};
  Simplex(Trusted, std::vector<VertexId> sorted) : vertices_(std::move(sorted)) {}
  std::vector<VertexId> vertices_;
};

/// Pure finite simplicial complex with top-simplex multiplicities m(sigma).
/// Immutable once built.
class SimplicialComplex {
 public:
  int dim() const { return n_; }

  /// k-simplices in lexicographic order; throws DimOutOfRange.
  const std::vector<Simplex>& faces(int k) const;
  const std::vector<Simplex>& top_simplices() const { return faces(n_); }
  std::vector<VertexId> vertices() const;

  bool has_face(const Simplex& s) const { return weight_.count(s) != 0; }
  /// Number of top simplices containing `s`; throws UnknownFace.
  int multiplicity(const Simplex& s) const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  friend SimplicialComplex build_complex(const std::vector<std::vector<VertexId>>&);
  int n_ = 0;
  std::vector<std::vector<Simplex>> faces_by_dim_;
  std::map<Simplex, int> weight_;
};

/// Downward closure of the given top simplices with multiplicities tabulated.
/// Throws Empty, NonPure, DuplicateTop or InvalidSimplex.
SimplicialComplex build_complex(const std::vector<std::vector<VertexId>>& maximal_simplices);

std::vector<Simplex> faces(const SimplicialComplex& complex, int k);
int multiplicity(const SimplicialComplex& complex, const Simplex& s);

struct Link {
  Simplex base;
  /// Weights satisfy m_link(eta) = m(base u eta) in the ambient complex.
  SimplicialComplex complex;
};

/// Link of `tau`; throws UnknownFace, or TopFace when dim tau = n.
Link link(const SimplicialComplex& complex, const Simplex& tau);

/// Number of connected components of the 1-skeleton.
int component_count(const SimplicialComplex& complex);

struct WeightIdentityViolation {
  int k = 0;
  int l = 0;
  Simplex face;
  long long lhs = 0;
  long long rhs = 0;
};

struct Diagnostics {
  bool pure = true;
  bool connected = true;
  std::vector<Simplex> disconnected_links;
  std::vector<WeightIdentityViolation> weight_identity_violations;

  bool ok() const {
    return pure && connected && disconnected_links.empty() && weight_identity_violations.empty();
  }
};

/// Checks purity, connectivity of the complex and of every link of dimension
/// >= 1, and C(n-k, l-k) m(sigma) = sum_{gamma > sigma, dim l} m(gamma).
Diagnostics validate(const SimplicialComplex& complex);

long long binomial(int n, int k);

}  // namespace tcrit
