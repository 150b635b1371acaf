#include "tcrit/cli.hpp"

#include <cmath>
#include <filesystem>
#include <sstream>

#include <CLI11.hpp>

#include "tcrit/cosine.hpp"
#include "tcrit/polygon.hpp"
#include "tcrit/report.hpp"

namespace tcrit {

namespace {

using nlohmann::json;

int exit_for(const CriterionReport& r) {
  switch (r.verdict) {
    case Verdict::Pass: return kExitPass;
    case Verdict::Fail: return kExitFail;
    case Verdict::NotApplicable: return kExitNotApplicable;
  }
  return kExitFail;
}

Workload load_workload(const std::string& source) {
  if (!source.empty() && source.front() == '@') {
    if (auto w = builtin_workload(source.substr(1))) return *w;
    throw Error(Errc::ParseError, "unknown built-in complex " + source);
  }
  ComplexFile f = load_complex(source);
  return {f.name, std::move(f.complex), std::nullopt};
}

struct CheckArgs {
  std::string source;
  std::string criterion;
  int k = 1;
  int l = 0;
  double eps = kStrictMargin;
  bool extension = false;
  std::string cos_source = "estimate";
  int cos_dim = 1;
  int restarts = 100;
  std::uint64_t seed = 0;
  int grid = 21;
  std::string cos_table;
};

CriterionReport run_check(const Workload& w, const CheckArgs& a) {
  const auto& gaps = w.vertex_gaps;
  if (gaps && a.k != 1) throw Error(Errc::BadDims, w.name + " only carries vertex-link data (k = 1)");
  const int l = a.l > 0 ? a.l : a.k + 1;

  CriterionReport r;
  if (a.criterion == "bs") {
    r = gaps ? check_bs(w.complex, a.k, a.eps, *gaps) : check_bs(w.complex, a.k, a.eps);
  } else if (a.criterion == "zuk") {
    r = gaps ? check_zuk_2d(w.complex, *gaps) : check_zuk_2d(w.complex);
  } else if (a.criterion == "thm1") {
    r = gaps ? check_theorem1_2d(w.complex, *gaps) : check_theorem1_2d(w.complex);
  } else if (a.criterion == "general") {
    GeneralOptions opt;
    opt.constrained_extension = a.extension;
    r = gaps ? check_general(w.complex, a.k, l, a.eps, *gaps, opt) : check_general(w.complex, a.k, l, a.eps, opt);
  } else {
    Theorem2Options opt;
    opt.dim = a.cos_dim;
    opt.restarts = a.restarts;
    opt.seed = a.seed;
    opt.grid = a.grid;
    if (!a.cos_table.empty()) {
      opt.source = CosineSource::Table;
      opt.table = load_cos_table(a.cos_table);
    } else if (gaps) {
      throw Error(Errc::BadParams, w.name + " has no explicit links; pass --cos-table");
    } else {
      opt.source = a.cos_source == "oracle" ? CosineSource::Oracle : CosineSource::Estimate;
    }
    r = check_theorem2_2d(w.complex, opt);
  }
  r.subject = w.name;
  return r;
}

void print_validate(const Workload& w, const Diagnostics& d, bool as_json, std::ostream& out) {
  if (as_json) {
    json j = to_json(d);
    j["name"] = w.name;
    out << j.dump(2) << '\n';
    return;
  }
  out << "complex: " << w.name << " (dim " << w.complex.dim() << ")\n";
  out << "pure: " << (d.pure ? "yes" : "no") << '\n';
  out << "connected: " << (d.connected ? "yes" : "no") << '\n';
  for (const auto& s : d.disconnected_links) out << "disconnected link at " << s.str() << '\n';
  for (const auto& v : d.weight_identity_violations)
    out << "weight identity fails at " << v.face.str() << " (k=" << v.k << ", l=" << v.l << "): " << v.lhs
        << " != " << v.rhs << '\n';
  out << "verdict: " << (d.ok() ? "OK" : "INVALID") << '\n';
}

int run_lyons(bool as_json, std::ostream& out) {
  const Workload w = lyons_workload();
  const GapTable& gaps = *w.vertex_gaps;
  CriterionReport zuk = check_zuk_2d(w.complex, gaps);
  CriterionReport thm1 = check_theorem1_2d(w.complex, gaps);
  CriterionReport general = check_general(w.complex, 1, 2, kStrictMargin, gaps);
  for (auto* r : {&zuk, &thm1, &general}) r->subject = w.name;

  // Zuk's sum for the two non-bipartite links.
  double zuk_sum = 0.0;
  for (const auto& a : zuk.per_simplex)
    if (a.anchor == Simplex{1, 2}) zuk_sum = a.margins[0];
  const bool verdict = thm1.passed();

  if (as_json) {
    json j;
    json lambdas = json::array();
    json bars = json::array();
    for (const auto& [tau, lambda] : gaps) {
      lambdas.push_back(round9(lambda));
      bars.push_back(round9(lambda - 0.5));
    }
    j["name"] = w.name;
    j["lambdas"] = lambdas;
    j["lambda_bars"] = bars;
    j["zuk_sum"] = round9(zuk_sum);
    j["zuk"] = to_json(zuk);
    j["thm1"] = to_json(thm1);
    j["general"] = to_json(general);
    j["verdict"] = verdict ? "PASS" : "FAIL";
    out << j.dump(2) << '\n';
  } else {
    const char* kinds[] = {"bipartite link (m=2)", "generalized 3-gon, s=5", "generalized 6-gon, s=t=5"};
    out << "Lyons GAB vertex links\n";
    int i = 0;
    for (const auto& [tau, lambda] : gaps)
      out << "  " << kinds[i++] << ": lambda=" << format_number(lambda) << " lambda_bar=" << format_number(lambda - 0.5)
          << '\n';
    out << "zuk: lambda_bar_2 + lambda_bar_3 = " << format_number(zuk_sum) << "  " << verdict_name(zuk.verdict) << '\n';
    const auto& m = thm1.per_simplex.front().margins;
    out << "thm1: sum margin = " << format_number(m[0]) << ", product margin = " << format_number(m[1]) << "  "
        << verdict_name(thm1.verdict) << '\n';
    out << "general (k=1, l=2): min root = " << format_number(general.per_simplex.front().margins[1]) << "  "
        << verdict_name(general.verdict) << '\n';
    out << "verdict: " << (verdict ? "PASS" : "FAIL") << '\n';
  }
  return verdict ? kExitPass : kExitFail;
}

void print_scan(const ScanResult& s, bool as_json, std::ostream& out) {
  if (as_json) {
    out << to_json(s).dump(2) << '\n';
    return;
  }
  out << "labels m12,m13,m23 = " << s.labels[0] << ',' << s.labels[1] << ',' << s.labels[2] << '\n';
  out << "q  zuk   thm1  zuk_margin  thm1_sum  thm1_product\n";
  for (const auto& r : s.rows)
    out << r.q << "  " << (r.zuk ? "PASS" : "FAIL") << "  " << (r.thm1 ? "PASS" : "FAIL") << "  "
        << format_number(r.zuk_margin) << "  " << format_number(r.thm1_sum_margin) << "  "
        << format_number(r.thm1_product_margin) << '\n';
  out << "minimal q (thm1): " << (s.min_q_thm1 ? std::to_string(*s.min_q_thm1) : "none") << '\n';
  out << "minimal q (zuk): " << (s.min_q_zuk ? std::to_string(*s.min_q_zuk) : "none") << '\n';
  out << "note: " << s.disclaimer << '\n';
}

std::array<int, 3> parse_labels(const std::string& text) {
  std::array<int, 3> labels{};
  std::stringstream ss(text);
  std::string item;
  std::size_t i = 0;
  while (std::getline(ss, item, ',')) {
    if (i >= 3) throw Error(Errc::BadLabel, "expected three labels");
    try {
      std::size_t used = 0;
      labels[i++] = std::stoi(item, &used);
      if (used != item.size()) throw Error(Errc::BadLabel, "bad label `" + item + "`");
    } catch (const std::logic_error&) {
      throw Error(Errc::BadLabel, "bad label `" + item + "`");
    }
  }
  if (i != 3) throw Error(Errc::BadLabel, "expected three labels");
  return labels;
}

}  // namespace

Workload lyons_workload() {
  Workload w;
  w.name = "lyons";
  w.complex = build_complex({{0, 1, 2}});
  w.vertex_gaps = GapTable{
      {Simplex{0}, feit_higman_lambda({2, 5, 5})},
      {Simplex{1}, feit_higman_lambda({3, 5, 5})},
      {Simplex{2}, feit_higman_lambda({6, 5, 5})},
  };
  return w;
}

std::optional<Workload> builtin_workload(const std::string& name) {
  if (name == "octahedron") {
    std::vector<std::vector<VertexId>> tops;
    for (int a : {0, 1})
      for (int b : {2, 3})
        for (int c : {4, 5}) tops.push_back({a, b, c});
    return Workload{name, build_complex(tops), std::nullopt};
  }
  if (name == "triangle") return Workload{name, build_complex({{0, 1, 2}}), std::nullopt};
  if (name == "heawood-cone") {
    const WeightedGraph h = projective_plane_incidence(2);
    const VertexId apex = static_cast<VertexId>(h.vertex_count());
    std::vector<std::vector<VertexId>> tops;
    for (const auto& e : h.edges()) tops.push_back({h.vertices()[static_cast<std::size_t>(e.a)], h.vertices()[static_cast<std::size_t>(e.b)], apex});
    return Workload{name, build_complex(tops), std::nullopt};
  }
  if (name == "lyons") return lyons_workload();
  return std::nullopt;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::IoError: return kExitIo;
    case Errc::DisconnectedLink:
    case Errc::LinkTooSmall:
    case Errc::Disconnected:
    case Errc::EmptyKernel: return kExitNotApplicable;
    case Errc::NotConverged:
    case Errc::NumericalMismatch:
    case Errc::DegenerateDenominator: return kExitFail;
    default: return kExitUsage;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral and cosine criteria for property (T) on finite simplicial complexes", "tcrit"};
  app.require_subcommand(1);

  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  std::string validate_path;
  auto* validate_cmd = app.add_subcommand("validate", "Check purity, connectivity of links and the weight identity");
  validate_cmd->add_option("file", validate_path, "Complex file or @builtin")->required();
  add_format(validate_cmd);

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Evaluate one criterion on a complex");
  check->add_option("file", check_args.source, "Complex file or @builtin")->required();
  check->add_option("--criterion", check_args.criterion, "bs | zuk | thm1 | general | thm2")
      ->required()
      ->check(CLI::IsMember({"bs", "zuk", "thm1", "general", "thm2"}));
  check->add_option("--k", check_args.k, "Cochain degree k");
  check->add_option("--l", check_args.l, "Anchor dimension l (general; default k+1)");
  check->add_option("--eps", check_args.eps, "Required margin epsilon");
  check->add_flag("--extension", check_args.extension, "general: decide l > k+1 with constrained eigenvalues");
  check->add_option("--cos-source", check_args.cos_source, "thm2 cosines: estimate | oracle")
      ->check(CLI::IsMember({"estimate", "oracle"}));
  check->add_option("--cos-dim", check_args.cos_dim, "thm2 estimator: function dimension");
  check->add_option("--restarts", check_args.restarts, "thm2 estimator: restarts");
  check->add_option("--seed", check_args.seed, "thm2 estimator: seed");
  check->add_option("--grid", check_args.grid, "thm2 oracle: grid resolution");
  check->add_option("--cos-table", check_args.cos_table, "thm2: JSON table vertex -> cosine");
  add_format(check);

  PolygonParams poly;
  bool t_given = false;
  auto* polygon = app.add_subcommand("polygon", "Feit-Higman spectral gap of a generalized m-gon");
  polygon->add_option("--m", poly.m, "Gonality")->required();
  polygon->add_option("--s", poly.s, "Parameter s")->required();
  auto* t_opt = polygon->add_option("--t", poly.t, "Parameter t (default s)");
  add_format(polygon);

  std::string labels_text;
  int q_max = 30;
  auto* scan = app.add_subcommand("scan", "Minimal thickness q for zuk and thm1 on a rank-3 diagram");
  scan->add_option("--labels", labels_text, "M12,M13,M23")->required();
  scan->add_option("--qmax", q_max, "Largest q to try")->required();
  add_format(scan);

  auto* lyons = app.add_subcommand("lyons", "Built-in Lyons GAB example");
  add_format(lyons);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }
  const bool as_json = format == "json";
  t_given = t_opt->count() > 0;

  try {
    if (*validate_cmd) {
      const Workload w = load_workload(validate_path);
      const Diagnostics d = validate(w.complex);
      print_validate(w, d, as_json, out);
      return d.ok() ? kExitPass : kExitFail;
    }
    if (*check) {
      const Workload w = load_workload(check_args.source);
      const CriterionReport r = run_check(w, check_args);
      out << (as_json ? to_json(r).dump(2) + "\n" : format_text(r));
      return exit_for(r);
    }
    if (*polygon) {
      if (!t_given) poly.t = poly.s;
      const double lambda = feit_higman_lambda(poly);
      if (as_json) {
        json j{{"m", poly.m}, {"s", poly.s}, {"t", poly.t}, {"thick", poly.thick()}, {"lambda", round9(lambda)},
               {"lambda_bar", round9(lambda - 0.5)}};
        out << j.dump(2) << '\n';
      } else {
        out << "generalized " << poly.m << "-gon (s=" << poly.s << ", t=" << poly.t << ")\n";
        out << "lambda: " << format_number(lambda) << '\n';
        out << "lambda_bar (n=2, k=1): " << format_number(lambda - 0.5) << '\n';
      }
      return kExitPass;
    }
    if (*scan) {
      print_scan(diagram_scan(parse_labels(labels_text), q_max), as_json, out);
      return kExitPass;
    }
    if (*lyons) return run_lyons(as_json, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kExitUsage;
}

}  // namespace tcrit
