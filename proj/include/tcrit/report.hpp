#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "tcrit/cosine.hpp"
#include "tcrit/criteria.hpp"

namespace tcrit {

struct ComplexFile {
  std::string name;
  SimplicialComplex complex;
};

/// `{"name": str, "maximal_simplices": [[int, ...], ...]}`. Throws ParseError
/// for malformed documents; structural problems surface as build_complex errors.
ComplexFile parse_complex(std::string_view text);
/// Throws IoError when the file cannot be read.
ComplexFile load_complex(const std::string& path);

/// `{"<vertex id>": cos, ...}`.
CosTable parse_cos_table(std::string_view text);
CosTable load_cos_table(const std::string& path);

std::string read_file(const std::string& path);

/// Nine significant digits.
std::string format_number(double x);
double round9(double x);

nlohmann::json to_json(const CriterionReport& r);
/// Inverse of to_json; throws ParseError.
CriterionReport report_from_json(const nlohmann::json& j);

std::string format_text(const CriterionReport& r);

nlohmann::json to_json(const Diagnostics& d);
nlohmann::json to_json(const ScanResult& s);

}  // namespace tcrit
