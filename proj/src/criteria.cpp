#include "tcrit/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tcrit/pkl.hpp"
#include "tcrit/polygon.hpp"
#include "tcrit/spectral.hpp"

namespace tcrit {

namespace {

void require_dim(const SimplicialComplex& complex, int n, const char* criterion) {
  if (complex.dim() != n)
    throw Error(Errc::WrongDimension, std::string(criterion) + " needs a " + std::to_string(n) + "-dimensional complex, got " +
                                          std::to_string(complex.dim()));
}

void finish(CriterionReport& r, double min_margin) {
  const bool all = std::all_of(r.per_simplex.begin(), r.per_simplex.end(), [](const AnchorResult& a) { return a.passed; });
  r.verdict = all ? Verdict::Pass : Verdict::Fail;
  if (all && !r.per_simplex.empty()) r.epsilon = min_margin;
}

double gap_of(const GapTable& gaps, const Simplex& tau) {
  auto it = gaps.find(tau);
  if (it == gaps.end()) throw Error(Errc::MissingS, "no link gap for " + tau.str());
  return it->second;
}

}  // namespace

double bs_threshold(int n, int k) { return static_cast<double>(k * (n - k)) / static_cast<double>(k + 1); }

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::NotApplicable: return "NOT-APPLICABLE";
  }
  return "?";
}

GapTable link_gaps(const SimplicialComplex& complex, int k) {
  if (k < 1 || k > complex.dim() - 1)
    throw Error(Errc::BadDims, "k=" + std::to_string(k) + " outside 1.." + std::to_string(complex.dim() - 1));
  GapTable gaps;
  for (const auto& tau : complex.faces(k - 1)) {
    const SpectralSummary sp = link_lambda(complex, tau);
    gaps[tau] = *sp.lambda_scaled;
  }
  return gaps;
}

std::vector<LambdaBar> lambda_bar_all(const SimplicialComplex& complex, int k) {
  return lambda_bar_all(complex, k, link_gaps(complex, k));
}

std::vector<LambdaBar> lambda_bar_all(const SimplicialComplex& complex, int k, const GapTable& gaps) {
  if (k < 1 || k > complex.dim() - 1)
    throw Error(Errc::BadDims, "k=" + std::to_string(k) + " outside 1.." + std::to_string(complex.dim() - 1));
  const double shift = bs_threshold(complex.dim(), k);
  std::vector<LambdaBar> out;
  for (const auto& tau : complex.faces(k - 1)) {
    const double lambda = gap_of(gaps, tau);
    out.push_back({tau, lambda, lambda - shift});
  }
  return out;
}

std::vector<SValue> s_values(const SimplicialComplex& complex, int k, const std::vector<LambdaBar>& bars) {
  std::map<Simplex, double> bar;
  for (const auto& b : bars) bar[b.tau] = b.lambda_bar;
  std::vector<SValue> out;
  for (const auto& sigma : complex.faces(k)) {
    double s = 0.0;
    for (const auto& facet : sigma.faces(k - 1)) s += gap_of(bar, facet);
    out.push_back({sigma, s});
  }
  return out;
}

CriterionReport check_bs(const SimplicialComplex& complex, int k, double eps) {
  return check_bs(complex, k, eps, link_gaps(complex, k));
}

CriterionReport check_bs(const SimplicialComplex& complex, int k, double eps, const GapTable& gaps) {
  CriterionReport r;
  r.criterion = "bs";
  r.margin_names = {"lambda", "lambda_bar", "margin"};
  double min_bar = std::numeric_limits<double>::infinity();
  for (const auto& b : lambda_bar_all(complex, k, gaps)) {
    const double margin = b.lambda_bar - eps;
    r.per_simplex.push_back({b.tau, {b.lambda, b.lambda_bar, margin}, margin >= 0.0});
    min_bar = std::min(min_bar, b.lambda_bar);
  }
  finish(r, min_bar);
  return r;
}

CriterionReport check_zuk_2d(const SimplicialComplex& complex) {
  require_dim(complex, 2, "zuk");
  return check_zuk_2d(complex, link_gaps(complex, 1));
}

CriterionReport check_zuk_2d(const SimplicialComplex& complex, const GapTable& vertex_gaps) {
  require_dim(complex, 2, "zuk");
  CriterionReport r;
  r.criterion = "zuk";
  r.margin_names = {"margin"};
  double min_margin = std::numeric_limits<double>::infinity();
  for (const auto& e : complex.faces(1)) {
    const double margin = gap_of(vertex_gaps, Simplex{e[0]}) + gap_of(vertex_gaps, Simplex{e[1]}) - 1.0;
    r.per_simplex.push_back({e, {margin}, margin > kStrictMargin});
    min_margin = std::min(min_margin, margin);
  }
  finish(r, min_margin);
  return r;
}

CriterionReport check_theorem1_2d(const SimplicialComplex& complex) {
  require_dim(complex, 2, "thm1");
  return check_theorem1_2d(complex, link_gaps(complex, 1));
}

CriterionReport check_theorem1_2d(const SimplicialComplex& complex, const GapTable& vertex_gaps) {
  require_dim(complex, 2, "thm1");
  CriterionReport r;
  r.criterion = "thm1";
  r.margin_names = {"sum_margin", "product_margin"};
  double min_margin = std::numeric_limits<double>::infinity();
  for (const auto& tri : complex.faces(2)) {
    std::array<double, 3> bar{};
    for (std::size_t i = 0; i < 3; ++i) bar[i] = gap_of(vertex_gaps, Simplex{tri[i]}) - 0.5;
    const double s01 = bar[0] + bar[1];
    const double s02 = bar[0] + bar[2];
    const double s12 = bar[1] + bar[2];
    const double sum_margin = bar[0] + bar[1] + bar[2];
    const double product_margin = s01 * s02 + s01 * s12 + s02 * s12;
    r.per_simplex.push_back({tri, {sum_margin, product_margin}, sum_margin > kStrictMargin && product_margin > kStrictMargin});
    min_margin = std::min({min_margin, sum_margin, product_margin});
  }
  finish(r, min_margin);
  return r;
}

CriterionReport check_general(const SimplicialComplex& complex, int k, int l, double eps, const GeneralOptions& opt) {
  if (k < 1 || l <= k || l > complex.dim())
    throw Error(Errc::BadDims, "need 0 < k < l <= n, got k=" + std::to_string(k) + " l=" + std::to_string(l));
  return check_general(complex, k, l, eps, link_gaps(complex, k), opt);
}

CriterionReport check_general(const SimplicialComplex& complex, int k, int l, double eps, const GapTable& gaps,
                              const GeneralOptions& opt) {
  if (k < 1 || l <= k || l > complex.dim())
    throw Error(Errc::BadDims, "need 0 < k < l <= n, got k=" + std::to_string(k) + " l=" + std::to_string(l));
  CriterionReport r;
  r.criterion = "general";
  r.margin_names = {"det_min_root", "min_root"};

  std::map<Simplex, double> s_of;
  for (const auto& s : s_values(complex, k, lambda_bar_all(complex, k, gaps))) s_of[s.sigma] = s.value;

  const bool literal = l == k + 1;
  double min_root = std::numeric_limits<double>::infinity();
  bool degenerate = false;
  for (const auto& gamma : complex.faces(l)) {
    // Faces of gamma in lexicographic order match the standard simplex's faces.
    const auto sub = gamma.faces(k);
    Eigen::VectorXd s(static_cast<Eigen::Index>(sub.size()));
    for (std::size_t i = 0; i < sub.size(); ++i) s(static_cast<Eigen::Index>(i)) = s_of.at(sub[i]);
    const PklSystem sys = build_system(k, l, s);
    const RootReport constrained = constrained_roots(sys);

    // The symmetric eigenproblem decides; interpolation is the cross-check.
    const double root = *constrained.min_root;
    double det_root = root;
    if (literal) {
      const RootReport det = det_roots(sys);
      if (det.degenerate || !det.min_root) {
        degenerate = true;
        continue;
      }
      if (!roots_agree(constrained.roots, det.roots, kRootAgreement))
        throw Error(Errc::NumericalMismatch, "root methods disagree at " + gamma.str());
      det_root = *det.min_root;
    } else {
      if (!det_roots(sys).degenerate) throw Error(Errc::NumericalMismatch, "expected p_k^l to vanish at " + gamma.str());
      degenerate = true;
      if (!opt.constrained_extension) continue;
      det_root = std::numeric_limits<double>::quiet_NaN();
    }
    r.per_simplex.push_back({gamma, {det_root, root}, root >= eps});
    min_root = std::min(min_root, root);
  }

  if (degenerate && !(opt.constrained_extension && !literal)) {
    r.verdict = Verdict::NotApplicable;
    r.notes.push_back("p_" + std::to_string(k) + "^" + std::to_string(l) +
                      " vanishes identically; rerun with the constrained-eigenvalue extension to decide");
    r.per_simplex.clear();
    return r;
  }
  if (degenerate) {
    r.heuristic = true;
    r.notes.push_back("decided by constrained eigenvalues (extension): the determinant polynomial vanishes identically for l > k+1");
  }
  finish(r, min_root);
  return r;
}

ScanResult diagram_scan(const std::array<int, 3>& labels, int q_max) {
  for (int m : labels)
    if (m != 2 && m != 3 && m != 4 && m != 6 && m != 8)
      throw Error(Errc::BadLabel, "Coxeter label " + std::to_string(m) + " is not in {2,3,4,6,8}");

  ScanResult out;
  out.labels = labels;
  out.q_max = q_max;
  out.disclaimer =
      "local triangle condition only; existence of a building with these parameters (q a prime power, realizable m-gons) is not checked";

  const SimplicialComplex triangle = build_complex({{0, 1, 2}});
  // Vertex i sees the polygon labelled by the edge opposite to it.
  const std::array<int, 3> gon{labels[2], labels[1], labels[0]};
  for (int q = 2; q <= q_max; ++q) {
    ScanRow row;
    row.q = q;
    GapTable gaps;
    for (int i = 0; i < 3; ++i) {
      row.lambdas[static_cast<std::size_t>(i)] = feit_higman_lambda({gon[static_cast<std::size_t>(i)], q, q});
      gaps[Simplex{i}] = row.lambdas[static_cast<std::size_t>(i)];
    }
    const CriterionReport zuk = check_zuk_2d(triangle, gaps);
    const CriterionReport thm1 = check_theorem1_2d(triangle, gaps);
    row.zuk = zuk.passed();
    row.thm1 = thm1.passed();
    row.zuk_margin = std::numeric_limits<double>::infinity();
    for (const auto& a : zuk.per_simplex) row.zuk_margin = std::min(row.zuk_margin, a.margins[0]);
    row.thm1_sum_margin = thm1.per_simplex.front().margins[0];
    row.thm1_product_margin = thm1.per_simplex.front().margins[1];
    if (row.zuk && !out.min_q_zuk) out.min_q_zuk = q;
    if (row.thm1 && !out.min_q_thm1) out.min_q_thm1 = q;
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace tcrit
