#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tcrit/complex.hpp"

namespace tcrit {

/// Link spectral gap lambda(X_tau), in the link Laplacian's scale, keyed by tau.
using GapTable = std::map<Simplex, double>;

/// Margins must exceed this for the strict inequalities to count as passing.
inline constexpr double kStrictMargin = 1e-9;

/// Relative agreement required between the two root methods (cluster means).
inline constexpr double kRootAgreement = 1e-6;

/// k(n-k)/(k+1).
double bs_threshold(int n, int k);

struct LambdaBar {
  Simplex tau;  // dim k-1
  double lambda = 0.0;
  double lambda_bar = 0.0;
};

struct SValue {
  Simplex sigma;  // dim k
  double value = 0.0;
};

/// lambda(X_tau) for every (k-1)-simplex. Throws BadDims unless 1 <= k <= n-1,
/// DisconnectedLink naming the first offending tau.
GapTable link_gaps(const SimplicialComplex& complex, int k);

std::vector<LambdaBar> lambda_bar_all(const SimplicialComplex& complex, int k);
/// Same, with gaps taken from `gaps` (which must cover every (k-1)-simplex).
std::vector<LambdaBar> lambda_bar_all(const SimplicialComplex& complex, int k, const GapTable& gaps);

/// S_sigma = sum of lambda_bar over the facets of each k-simplex sigma.
std::vector<SValue> s_values(const SimplicialComplex& complex, int k, const std::vector<LambdaBar>& bars);

enum class Verdict { Pass, Fail, NotApplicable };

std::string verdict_name(Verdict v);

struct AnchorResult {
  Simplex anchor;
  std::vector<double> margins;
  bool passed = false;

  bool operator==(const AnchorResult&) const = default;
};

struct CriterionReport {
  std::string criterion;
  std::string subject;
  Verdict verdict = Verdict::Fail;
  std::vector<std::string> margin_names;
  std::vector<AnchorResult> per_simplex;
  std::optional<double> epsilon;  // min over anchors; set when passed
  bool heuristic = false;
  std::vector<std::string> notes;

  bool passed() const { return verdict == Verdict::Pass; }
  bool operator==(const CriterionReport&) const = default;
};

/// Every (k-1)-link satisfies lambda >= k(n-k)/(k+1) + eps.
CriterionReport check_bs(const SimplicialComplex& complex, int k, double eps);
CriterionReport check_bs(const SimplicialComplex& complex, int k, double eps, const GapTable& gaps);

/// For each edge (u,v): lambda(X_u) + lambda(X_v) > 1.
CriterionReport check_zuk_2d(const SimplicialComplex& complex);
CriterionReport check_zuk_2d(const SimplicialComplex& complex, const GapTable& vertex_gaps);

/// For each triangle (u,v,w): lambda_u + lambda_v + lambda_w > 3/2 and
/// S_uv S_uw + S_uv S_vw + S_uw S_vw > 0.
CriterionReport check_theorem1_2d(const SimplicialComplex& complex);
CriterionReport check_theorem1_2d(const SimplicialComplex& complex, const GapTable& vertex_gaps);

struct GeneralOptions {
  /// For l > k+1, decide with the constrained eigenvalues instead of
  /// reporting NotApplicable.
  bool constrained_extension = false;
};

/// For each l-simplex, every root lambda of p_k^l(lambda - S_sigma) is >= eps.
/// Margins are the interpolated determinant's smallest root (NaN when
/// p vanishes) and the smallest constrained eigenvalue, which decides.
CriterionReport check_general(const SimplicialComplex& complex, int k, int l, double eps, const GeneralOptions& opt = {});
CriterionReport check_general(const SimplicialComplex& complex, int k, int l, double eps, const GapTable& gaps,
                              const GeneralOptions& opt = {});

struct ScanRow {
  int q = 0;
  std::array<double, 3> lambdas{};  // vertex links opposite labels m23, m13, m12
  double zuk_margin = 0.0;          // min over edges
  double thm1_sum_margin = 0.0;
  double thm1_product_margin = 0.0;
  bool zuk = false;
  bool thm1 = false;
};

struct ScanResult {
  std::array<int, 3> labels{};  // m12, m13, m23
  int q_max = 0;
  std::vector<ScanRow> rows;
  std::optional<int> min_q_zuk;
  std::optional<int> min_q_thm1;
  std::string disclaimer;
};

/// Minimal thickness q in 2..q_max meeting each criterion on a triangle whose
/// vertex links are generalized m-gons with parameters (q, q). Throws BadLabel.
ScanResult diagram_scan(const std::array<int, 3>& labels, int q_max);

}  // namespace tcrit
