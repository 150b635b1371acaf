#include "tcrit/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace tcrit {

using nlohmann::json;

namespace {

json simplex_json(const Simplex& s) { return json(s.vertices()); }

Simplex simplex_from(const json& j) { return Simplex(j.get<std::vector<VertexId>>()); }

json number(double x) {
  if (!std::isfinite(x)) return json(nullptr);
  return json(round9(x));
}

double number_from(const json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  return j.get<double>();
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(Errc::IoError, "cannot read " + path);
  return ss.str();
}

ComplexFile parse_complex(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, e.what());
  }
  if (!doc.is_object()) throw Error(Errc::ParseError, "document must be an object");
  if (!doc.contains("name") || !doc["name"].is_string()) throw Error(Errc::ParseError, "missing string field `name`");
  if (!doc.contains("maximal_simplices") || !doc["maximal_simplices"].is_array())
    throw Error(Errc::ParseError, "missing array field `maximal_simplices`");

  std::vector<std::vector<VertexId>> tops;
  for (const auto& row : doc["maximal_simplices"]) {
    if (!row.is_array()) throw Error(Errc::ParseError, "each maximal simplex must be an array");
    std::vector<VertexId> s;
    for (const auto& v : row) {
      if (!v.is_number_integer() || v.get<long long>() < 0 ||
          v.get<long long>() > std::numeric_limits<VertexId>::max())
        throw Error(Errc::ParseError, "vertex ids must be non-negative integers");
      s.push_back(v.get<VertexId>());
    }
    tops.push_back(std::move(s));
  }
  return {doc["name"].get<std::string>(), build_complex(tops)};
}

ComplexFile load_complex(const std::string& path) { return parse_complex(read_file(path)); }

CosTable parse_cos_table(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, e.what());
  }
  if (!doc.is_object()) throw Error(Errc::ParseError, "cosine table must be an object");
  CosTable out;
  for (const auto& [key, value] : doc.items()) {
    if (!value.is_number()) throw Error(Errc::ParseError, "cosine for vertex " + key + " is not a number");
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || v < 0) throw Error(Errc::ParseError, "bad vertex id `" + key + "`");
    out[Simplex{v}] = value.get<double>();
  }
  return out;
}

CosTable load_cos_table(const std::string& path) { return parse_cos_table(read_file(path)); }

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

double round9(double x) { return std::stod(format_number(x)); }

json to_json(const CriterionReport& r) {
  json j;
  j["criterion"] = r.criterion;
  j["subject"] = r.subject;
  j["verdict"] = verdict_name(r.verdict);
  j["margin_names"] = r.margin_names;
  j["epsilon"] = r.epsilon ? number(*r.epsilon) : json(nullptr);
  j["heuristic"] = r.heuristic;
  j["notes"] = r.notes;
  json anchors = json::array();
  for (const auto& a : r.per_simplex) {
    json margins = json::array();
    for (double m : a.margins) margins.push_back(number(m));
    anchors.push_back({{"simplex", simplex_json(a.anchor)}, {"margins", margins}, {"passed", a.passed}});
  }
  j["anchors"] = anchors;
  return j;
}

CriterionReport report_from_json(const json& j) {
  try {
    CriterionReport r;
    r.criterion = j.at("criterion").get<std::string>();
    r.subject = j.at("subject").get<std::string>();
    const auto verdict = j.at("verdict").get<std::string>();
    if (verdict == "PASS") r.verdict = Verdict::Pass;
    else if (verdict == "FAIL") r.verdict = Verdict::Fail;
    else if (verdict == "NOT-APPLICABLE") r.verdict = Verdict::NotApplicable;
    else throw Error(Errc::ParseError, "unknown verdict " + verdict);
    r.margin_names = j.at("margin_names").get<std::vector<std::string>>();
    if (!j.at("epsilon").is_null()) r.epsilon = j.at("epsilon").get<double>();
    r.heuristic = j.at("heuristic").get<bool>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    for (const auto& a : j.at("anchors")) {
      AnchorResult ar;
      ar.anchor = simplex_from(a.at("simplex"));
      for (const auto& m : a.at("margins")) ar.margins.push_back(number_from(m));
      ar.passed = a.at("passed").get<bool>();
      r.per_simplex.push_back(std::move(ar));
    }
    return r;
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

std::string format_text(const CriterionReport& r) {
  std::ostringstream os;
  os << "criterion: " << r.criterion << '\n';
  if (!r.subject.empty()) os << "complex: " << r.subject << '\n';
  for (const auto& a : r.per_simplex) {
    os << "  " << a.anchor.str();
    for (std::size_t i = 0; i < a.margins.size(); ++i)
      os << "  " << (i < r.margin_names.size() ? r.margin_names[i] : "m" + std::to_string(i)) << '='
         << format_number(a.margins[i]);
    os << "  " << (a.passed ? "PASS" : "FAIL") << '\n';
  }
  for (const auto& n : r.notes) os << "note: " << n << '\n';
  if (r.epsilon) os << "epsilon: " << format_number(*r.epsilon) << '\n';
  os << "verdict: " << verdict_name(r.verdict) << '\n';
  return os.str();
}

json to_json(const Diagnostics& d) {
  json j;
  j["pure"] = d.pure;
  j["connected"] = d.connected;
  json links = json::array();
  for (const auto& s : d.disconnected_links) links.push_back(simplex_json(s));
  j["disconnected_links"] = links;
  json wi = json::array();
  for (const auto& v : d.weight_identity_violations)
    wi.push_back({{"k", v.k}, {"l", v.l}, {"face", simplex_json(v.face)}, {"lhs", v.lhs}, {"rhs", v.rhs}});
  j["weight_identity_violations"] = wi;
  j["ok"] = d.ok();
  return j;
}

json to_json(const ScanResult& s) {
  json j;
  j["labels"] = s.labels;
  j["q_max"] = s.q_max;
  j["min_q_zuk"] = s.min_q_zuk ? json(*s.min_q_zuk) : json(nullptr);
  j["min_q_thm1"] = s.min_q_thm1 ? json(*s.min_q_thm1) : json(nullptr);
  j["disclaimer"] = s.disclaimer;
  json rows = json::array();
  for (const auto& r : s.rows)
    rows.push_back({{"q", r.q},
                    {"lambdas", {number(r.lambdas[0]), number(r.lambdas[1]), number(r.lambdas[2])}},
                    {"zuk", r.zuk},
                    {"zuk_margin", number(r.zuk_margin)},
                    {"thm1", r.thm1},
                    {"thm1_sum_margin", number(r.thm1_sum_margin)},
                    {"thm1_product_margin", number(r.thm1_product_margin)}});
  j["rows"] = rows;
  return j;
}

}  // namespace tcrit
