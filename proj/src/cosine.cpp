#include "tcrit/cosine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "tcrit/jacobi.hpp"

namespace tcrit {

namespace {

constexpr double kMinDenominator = 1e-12;

struct Candidate {
  double value = -std::numeric_limits<double>::infinity();
  std::vector<double> coords;
};

// Scalar ratio on the mean-zero subspace, parametrised by the first n-1
// coordinates; the last one is fixed by sum_u w_u phi_u = 0.
class ScalarRatio {
 public:
  explicit ScalarRatio(const WeightedGraph& g) : g_(g), w_(g.vertex_weights()), phi_(g.vertex_count()) {}

  std::size_t params() const { return w_.size() - 1; }

  const std::vector<double>& expand(const std::vector<double>& c) {
    const std::size_t last = w_.size() - 1;
    double acc = 0.0;
    for (std::size_t i = 0; i < last; ++i) {
      phi_[i] = c[i];
      acc += w_[i] * c[i];
    }
    phi_[last] = -acc / w_[last];
    return phi_;
  }

  double operator()(const std::vector<double>& c) {
    expand(c);
    double num = 0.0;
    double den = 0.0;
    for (const auto& e : g_.edges()) {
      const double a = phi_[static_cast<std::size_t>(e.a)];
      const double b = phi_[static_cast<std::size_t>(e.b)];
      num += e.weight * a * b;
      den += e.weight * std::abs(a) * std::abs(b);
    }
    if (den < kMinDenominator * std::max(1.0, phi_norm2())) return -std::numeric_limits<double>::infinity();
    return num / den;
  }

 private:
  double phi_norm2() const {
    double s = 0.0;
    for (double x : phi_) s += x * x;
    return s;
  }

  const WeightedGraph& g_;
  const std::vector<double>& w_;
  std::vector<double> phi_;
};

void compass_refine(ScalarRatio& f, Candidate& cand, double step) {
  const std::size_t dims = cand.coords.size();
  std::vector<double> trial = cand.coords;
  for (int iter = 0; step > 1e-13 && iter < 2000000; ++iter) {
    bool improved = false;
    for (std::size_t i = 0; i < dims && !improved; ++i)
      for (double sign : {1.0, -1.0}) {
        trial = cand.coords;
        trial[i] += sign * step;
        const double v = f(trial);
        if (v > cand.value) {
          cand.value = v;
          cand.coords = trial;
          improved = true;
          break;
        }
      }
    if (!improved) step *= 0.5;
  }
}

Eigen::MatrixXd normalized(const Eigen::MatrixXd& m) { return m / m.norm(); }

}  // namespace

std::optional<double> cosine_ratio(const WeightedGraph& g, const Eigen::MatrixXd& phi) {
  double num = 0.0;
  double den = 0.0;
  for (const auto& e : g.edges()) {
    num += e.weight * phi.row(e.a).dot(phi.row(e.b));
    den += e.weight * phi.row(e.a).norm() * phi.row(e.b).norm();
  }
  if (den < kMinDenominator) return std::nullopt;
  return num / den;
}

Eigen::MatrixXd project_mean_zero(const WeightedGraph& g, const Eigen::MatrixXd& phi) {
  const Eigen::Map<const Eigen::VectorXd> w(g.vertex_weights().data(), static_cast<Eigen::Index>(g.vertex_count()));
  return phi - w * ((w.transpose() * phi) / w.squaredNorm());
}

CosineEstimate estimate_cos_r(const WeightedGraph& g, int dim, int restarts, std::uint64_t seed) {
  if (dim < 1 || restarts < 1) throw Error(Errc::BadParams, "dim and restarts must be >= 1");
  if (g.edge_count() == 0) throw Error(Errc::DegenerateDenominator, "graph has no edges");
  if (g.component_count() != 1) throw Error(Errc::Disconnected, "cosine needs a connected graph");

  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  const Eigen::MatrixXd w = g.adjacency<double>();
  constexpr int kMaxIterations = 10000;

  auto value_and_gradient = [&](const Eigen::MatrixXd& phi, double f) {
    const Eigen::VectorXd r = phi.rowwise().norm();
    const Eigen::MatrixXd grad_num = w * phi;
    const Eigen::VectorXd wr = w * r;
    const double den = 0.5 * r.dot(wr);
    Eigen::MatrixXd grad_den = Eigen::MatrixXd::Zero(n, dim);
    for (Eigen::Index u = 0; u < n; ++u)
      if (r(u) > 0.0) grad_den.row(u) = (wr(u) / r(u)) * phi.row(u);
    return project_mean_zero(g, (grad_num - f * grad_den) / den);
  };

  CosineEstimate best;
  best.value = -std::numeric_limits<double>::infinity();
  best.dim = dim;
  best.restarts_used = restarts;

  for (int restart = 0; restart < restarts; ++restart) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(restart)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal;

    Eigen::MatrixXd phi(n, dim);
    std::optional<double> f;
    for (int attempt = 0; attempt < 100 && !f; ++attempt) {
      for (Eigen::Index i = 0; i < phi.size(); ++i) phi(i) = normal(rng);
      phi = normalized(project_mean_zero(g, phi));
      f = cosine_ratio(g, phi);
    }
    if (!f) continue;

    double step = 1.0;
    for (int it = 0; it < kMaxIterations; ++it) {
      const Eigen::MatrixXd grad = value_and_gradient(phi, *f);
      const double grad2 = grad.squaredNorm();
      if (!(grad2 > 1e-30)) break;

      double t = std::min(1.0, 2.0 * step);
      std::optional<double> next;
      Eigen::MatrixXd cand;
      while (t > 1e-14) {
        cand = normalized(project_mean_zero(g, phi + t * grad));
        next = cosine_ratio(g, cand);
        if (next && *next >= *f + 1e-4 * t * grad2) break;
        next.reset();
        t *= 0.5;
      }
      if (!next) break;
      const double improvement = *next - *f;
      phi = cand;
      f = next;
      step = t;
      if (improvement < 1e-10 * std::max(std::abs(*f), 1e-6)) break;
    }

    if (*f > best.value) {
      best.value = *f;
      best.witness = phi;
    }
  }
  if (best.witness.size() == 0) throw Error(Errc::DegenerateDenominator, "no feasible function with positive denominator");
  // Report the value the witness actually attains.
  best.value = *cosine_ratio(g, best.witness);
  return best;
}

CosineEstimate oracle_cos_r(const WeightedGraph& g, int grid) {
  if (g.vertex_count() > 6) throw Error(Errc::TooLarge, "oracle handles at most 6 vertices");
  if (grid < 2) throw Error(Errc::BadParams, "grid must be >= 2");
  if (g.edge_count() == 0) throw Error(Errc::DegenerateDenominator, "graph has no edges");
  if (g.component_count() != 1) throw Error(Errc::Disconnected, "cosine needs a connected graph");

  ScalarRatio f(g);
  const std::size_t dims = f.params();
  const double h = 2.0 / (grid - 1);
  constexpr std::size_t kKeep = 16;

  std::vector<Candidate> top;
  std::vector<int> idx(dims, 0);
  std::vector<double> c(dims);
  for (bool more = true; more;) {
    bool surface = false;
    for (std::size_t i = 0; i < dims; ++i) {
      c[i] = -1.0 + h * idx[i];
      if (idx[i] == 0 || idx[i] == grid - 1) surface = true;
    }
    if (surface) {
      const double v = f(c);
      if (top.size() < kKeep || v > top.back().value) {
        top.push_back({v, c});
        std::sort(top.begin(), top.end(), [](const Candidate& a, const Candidate& b) { return a.value > b.value; });
        if (top.size() > kKeep) top.pop_back();
      }
    }
    more = false;
    for (std::size_t i = 0; i < dims; ++i) {
      if (++idx[i] < grid) {
        more = true;
        break;
      }
      idx[i] = 0;
    }
  }

  Candidate best;
  for (auto& cand : top) {
    if (!std::isfinite(cand.value)) continue;
    compass_refine(f, cand, h);
    if (cand.value > best.value) best = cand;
  }
  if (!std::isfinite(best.value)) throw Error(Errc::DegenerateDenominator, "no grid point with positive denominator");

  const auto& phi = f.expand(best.coords);
  CosineEstimate out;
  out.witness = Eigen::Map<const Eigen::VectorXd>(phi.data(), static_cast<Eigen::Index>(phi.size()));
  out.value = *cosine_ratio(g, out.witness);
  out.certified = true;
  out.restarts_used = 0;
  out.dim = 1;
  return out;
}

AMatrix build_A(const SimplicialComplex& complex, const Simplex& gamma, const CosTable& cos) {
  if (!complex.has_face(gamma)) throw Error(Errc::UnknownFace, gamma.str() + " is not a face");
  if (gamma.dim() < 2) throw Error(Errc::BadDims, "A(gamma) needs dim gamma >= 2");
  AMatrix a;
  a.anchor = gamma;
  a.index = gamma.faces(gamma.dim() - 1);
  const auto m = static_cast<Eigen::Index>(a.index.size());
  a.entries = Eigen::MatrixXd::Identity(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = i + 1; j < m; ++j) {
      const Simplex shared = a.index[static_cast<std::size_t>(i)].intersect(a.index[static_cast<std::size_t>(j)]);
      auto it = cos.find(shared);
      if (it == cos.end()) throw Error(Errc::MissingCos, "no cosine for " + shared.str());
      if (!(std::abs(it->second) <= 1.0)) throw Error(Errc::BadParams, "cosine for " + shared.str() + " outside [-1, 1]");
      a.entries(i, j) = a.entries(j, i) = -it->second;
    }
  JacobiOptions opt;
  opt.compute_vectors = false;
  a.min_eigenvalue = jacobi_eigen(a.entries, opt).values(0);
  return a;
}

CosTable vertex_link_cosines(const SimplicialComplex& complex, const Theorem2Options& opt) {
  if (opt.source == CosineSource::Table) return opt.table;
  CosTable out;
  for (const auto& v : complex.faces(0)) {
    const WeightedGraph g = skeleton(link(complex, v));
    if (g.component_count() != 1) throw Error(Errc::DisconnectedLink, "link of " + v.str() + " is disconnected");
    out[v] = opt.source == CosineSource::Oracle ? oracle_cos_r(g, opt.grid).value
                                                : estimate_cos_r(g, opt.dim, opt.restarts, opt.seed).value;
  }
  return out;
}

CriterionReport check_theorem2_2d(const SimplicialComplex& complex, const Theorem2Options& opt) {
  if (complex.dim() != 2)
    throw Error(Errc::WrongDimension, "thm2 needs a 2-dimensional complex, got " + std::to_string(complex.dim()));
  for (const auto& v : complex.faces(0))
    if (component_count(link(complex, v).complex) != 1)
      throw Error(Errc::DisconnectedLink, "link of " + v.str() + " is disconnected");

  const CosTable cos = vertex_link_cosines(complex, opt);
  CriterionReport r;
  r.criterion = "thm2";
  r.margin_names = {"min_eigenvalue"};
  double min_eig = std::numeric_limits<double>::infinity();
  for (const auto& tri : complex.faces(2)) {
    const AMatrix a = build_A(complex, tri, cos);
    r.per_simplex.push_back({tri, {a.min_eigenvalue}, a.min_eigenvalue > kStrictMargin});
    min_eig = std::min(min_eig, a.min_eigenvalue);
  }
  const bool all = std::all_of(r.per_simplex.begin(), r.per_simplex.end(), [](const AnchorResult& x) { return x.passed; });
  r.verdict = all ? Verdict::Pass : Verdict::Fail;
  if (all) r.epsilon = min_eig;

  switch (opt.source) {
    case CosineSource::Estimate:
      r.heuristic = true;
      r.notes.push_back(
          "heuristic: link cosines are attained lower bounds from multi-start ascent; a PASS may be false, a FAIL is reliable");
      break;
    case CosineSource::Oracle:
      r.notes.push_back("link cosines from the exhaustive scalar grid oracle (trivial group)");
      break;
    case CosineSource::Table:
      r.notes.push_back("link cosines supplied by the user");
      break;
  }
  return r;
}

}  // namespace tcrit
