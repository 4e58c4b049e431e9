#pragma once

#include <string>

#include "hsl/family.hpp"
#include "hsl/geometry.hpp"

namespace hsl {

// Domain file:
//   { "curves": [ { "coeffs": [[k, re, im], ...], "hole": bool }, ... ],
//     "a": [re, im], "b": [re, im] }
// Exactly one non-hole curve is required.
MarkedDomain load_domain(const std::string& path);
MarkedDomain parse_domain(const std::string& json_text);
std::string domain_to_json(const MarkedDomain& md);

// Family file:
//   { "phi": <expr>, "curves": [ { "coeffs_t": [[k, <re expr>, <im expr>], ...],
//     "hole": bool } ], "a": <expr>, "b": <expr>, "radius": rho }
DomainFamily load_family(const std::string& path);
DomainFamily parse_family(const std::string& json_text);

// Deterministic writers (9 significant digits, fixed order).
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array(const std::string& key = "");
  JsonWriter& end_array();
  JsonWriter& field(const std::string& key, double v);
  JsonWriter& field(const std::string& key, const std::string& v);
  JsonWriter& field(const std::string& key, bool v);
  JsonWriter& field(const std::string& key, int v);
  JsonWriter& element(double v);
  std::string str() const { return out_; }

 private:
  void comma();
  std::string out_;
  std::vector<bool> needs_comma_;
};

void write_file(const std::string& path, const std::string& content);

struct CsvWriter {
  explicit CsvWriter(std::vector<std::string> columns);
  void row(const std::vector<std::string>& cells);
  std::string str() const { return out_; }

 private:
  std::string out_;
  std::size_t ncols_;
};

// Static SVG plots.
std::string svg_heatmap(const std::vector<cplx>& points, const std::vector<double>& values,
                        const std::vector<int>& status, int n, const std::string& title);
std::string svg_slits(const SlitData& data, const std::string& title);

}  // namespace hsl
