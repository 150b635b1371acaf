#include "tcrit/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace tcrit {

namespace {

// Union-find over dense indices.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

  int count() {
    int c = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) c += find(i) == i ? 1 : 0;
    return c;
  }

 private:
  std::vector<std::size_t> parent_;
};

void collect_faces(const std::vector<VertexId>& v, int k, std::size_t start, std::vector<VertexId>& current,
                   std::vector<std::vector<VertexId>>& out) {
  if (static_cast<int>(current.size()) == k + 1) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = start; i < v.size(); ++i) {
    current.push_back(v[i]);
    collect_faces(v, k, i + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw Error(Errc::InvalidSimplex, "simplex needs at least one vertex");
  std::sort(vertices_.begin(), vertices_.end());
  if (vertices_.front() < 0) throw Error(Errc::InvalidSimplex, "negative vertex id");
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw Error(Errc::InvalidSimplex, "repeated vertex in " + str());
}

bool Simplex::contains(VertexId v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

bool Simplex::contains(const Simplex& other) const {
  return std::includes(vertices_.begin(), vertices_.end(), other.vertices_.begin(), other.vertices_.end());
}

Simplex Simplex::without(std::size_t i) const {
  std::vector<VertexId> v = vertices_;
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
  return Simplex(Trusted{}, std::move(v));
}

Simplex Simplex::join(const Simplex& other) const {
  std::vector<VertexId> v;
  std::set_union(vertices_.begin(), vertices_.end(), other.vertices_.begin(), other.vertices_.end(),
                 std::back_inserter(v));
  return Simplex(Trusted{}, std::move(v));
}

Simplex Simplex::minus(const Simplex& other) const {
  std::vector<VertexId> v;
  std::set_difference(vertices_.begin(), vertices_.end(), other.vertices_.begin(), other.vertices_.end(),
                      std::back_inserter(v));
  return Simplex(Trusted{}, std::move(v));
}

Simplex Simplex::intersect(const Simplex& other) const {
  std::vector<VertexId> v;
  std::set_intersection(vertices_.begin(), vertices_.end(), other.vertices_.begin(), other.vertices_.end(),
                        std::back_inserter(v));
  return Simplex(Trusted{}, std::move(v));
}

std::vector<Simplex> Simplex::faces(int k) const {
  std::vector<Simplex> out;
  if (k < 0 || k > dim()) return out;
  std::vector<std::vector<VertexId>> raw;
  std::vector<VertexId> current;
  collect_faces(vertices_, k, 0, current, raw);
  out.reserve(raw.size());
  for (auto& r : raw) out.push_back(Simplex(Trusted{}, std::move(r)));
  return out;
}

std::string Simplex::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < vertices_.size(); ++i) os << (i ? "," : "") << vertices_[i];
  os << ')';
  return os.str();
}

const std::vector<Simplex>& SimplicialComplex::faces(int k) const {
  if (k < 0 || k > n_)
    throw Error(Errc::DimOutOfRange, "k=" + std::to_string(k) + " outside 0.." + std::to_string(n_));
  return faces_by_dim_[static_cast<std::size_t>(k)];
}

std::vector<VertexId> SimplicialComplex::vertices() const {
  std::vector<VertexId> out;
  for (const auto& s : faces_by_dim_[0]) out.push_back(s[0]);
  return out;
}

int SimplicialComplex::multiplicity(const Simplex& s) const {
  auto it = weight_.find(s);
  if (it == weight_.end()) throw Error(Errc::UnknownFace, s.str() + " is not a face");
  return it->second;
}

SimplicialComplex build_complex(const std::vector<std::vector<VertexId>>& maximal_simplices) {
  if (maximal_simplices.empty()) throw Error(Errc::Empty, "no maximal simplices");
  const std::size_t card = maximal_simplices.front().size();
  std::set<Simplex> tops;
  for (const auto& raw : maximal_simplices) {
    if (raw.size() != card)
      throw Error(Errc::NonPure, "maximal simplices have mixed cardinalities " + std::to_string(card) + " and " +
                                     std::to_string(raw.size()));
    Simplex s(raw);
    if (!tops.insert(s).second) throw Error(Errc::DuplicateTop, s.str() + " listed twice");
  }

  SimplicialComplex c;
  c.n_ = static_cast<int>(card) - 1;
  c.faces_by_dim_.resize(card);
  for (const auto& top : tops)
    for (int k = 0; k <= c.n_; ++k)
      for (auto& f : top.faces(k)) ++c.weight_[std::move(f)];
  for (const auto& [s, m] : c.weight_) c.faces_by_dim_[static_cast<std::size_t>(s.dim())].push_back(s);
  return c;
}

std::vector<Simplex> faces(const SimplicialComplex& complex, int k) { return complex.faces(k); }

int multiplicity(const SimplicialComplex& complex, const Simplex& s) { return complex.multiplicity(s); }

Link link(const SimplicialComplex& complex, const Simplex& tau) {
  if (!complex.has_face(tau)) throw Error(Errc::UnknownFace, tau.str() + " is not a face");
  if (tau.dim() >= complex.dim()) throw Error(Errc::TopFace, tau.str() + " is top-dimensional; its link is empty");
  std::vector<std::vector<VertexId>> tops;
  for (const auto& top : complex.top_simplices())
    if (top.contains(tau)) tops.push_back(top.minus(tau).vertices());
  return Link{tau, build_complex(tops)};
}

int component_count(const SimplicialComplex& complex) {
  const auto verts = complex.vertices();
  DisjointSets ds(verts.size());
  auto index = [&](VertexId v) {
    return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  if (complex.dim() >= 1)
    for (const auto& e : complex.faces(1)) ds.unite(index(e[0]), index(e[1]));
  return ds.count();
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Diagnostics validate(const SimplicialComplex& complex) {
  Diagnostics d;
  const int n = complex.dim();

  for (int k = 0; k <= n; ++k)
    for (const auto& s : complex.faces(k))
      if (complex.multiplicity(s) < 1) d.pure = false;

  d.connected = component_count(complex) == 1;

  for (int k = 0; k <= n - 2; ++k)
    for (const auto& tau : complex.faces(k))
      if (component_count(link(complex, tau).complex) != 1) d.disconnected_links.push_back(tau);

  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l <= n; ++l) {
      std::map<Simplex, long long> sums;
      for (const auto& gamma : complex.faces(l))
        for (const auto& sigma : gamma.faces(k)) sums[sigma] += complex.multiplicity(gamma);
      for (const auto& sigma : complex.faces(k)) {
        const long long lhs = binomial(n - k, l - k) * complex.multiplicity(sigma);
        const long long rhs = sums[sigma];
        if (lhs != rhs) d.weight_identity_violations.push_back({k, l, sigma, lhs, rhs});
      }
    }
  return d;
}

}  // namespace tcrit
