#include "hsl/io.hpp"

#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>

#include <json.hpp>

namespace hsl {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON", 0);
  return j;
}

}  // namespace

MarkedDomain parse_domain(const std::string& text) {
  json j = parse_json(text);
  if (!j.contains("curves") || !j["curves"].is_array() || j["curves"].empty())
    throw ParseError("domain file needs a non-empty 'curves' array", 0);
  std::vector<SmoothCurve> holes;
  std::unique_ptr<SmoothCurve> outer;
  for (const auto& jc : j["curves"]) {
    std::vector<FourierCoeff> coeffs;
    for (const auto& entry : jc.at("coeffs")) {
      if (!entry.is_array() || entry.size() != 3)
        throw ParseError("curve coefficient entries are [k, re, im]", 0);
      coeffs.push_back({entry[0].get<int>(),
                        cplx(entry[1].get<double>(), entry[2].get<double>())});
    }
    bool hole = jc.value("hole", false);
    auto curve = build_curve(std::move(coeffs),
                             hole ? Orientation::negative : Orientation::positive);
    if (hole) {
      holes.push_back(std::move(curve));
    } else {
      if (outer) throw ParseError("exactly one non-hole curve required", 0);
      outer = std::make_unique<SmoothCurve>(std::move(curve));
    }
  }
  if (!outer) throw ParseError("exactly one non-hole curve required", 0);
  auto pt = [&](const char* key) {
    const auto& v = j.at(key);
    if (!v.is_array() || v.size() != 2)
      throw ParseError(std::string("point '") + key + "' is [re, im]", 0);
    return cplx(v[0].get<double>(), v[1].get<double>());
  };
  return MarkedDomain::create(std::move(*outer), std::move(holes), pt("a"), pt("b"));
}

MarkedDomain load_domain(const std::string& path) { return parse_domain(slurp(path)); }

std::string domain_to_json(const MarkedDomain& md) {
  std::string out = "{\"curves\":[";
  for (int j = 0; j < md.nu(); ++j) {
    const auto& curve = md.curve(j);
    out += "{\"coeffs\":[";
    bool first = true;
    for (const auto& [k, c] : curve.coeffs()) {
      if (!first) out += ",";
      first = false;
      out += "[" + std::to_string(k) + "," + fmt_g9(c.real()) + "," +
             fmt_g9(c.imag()) + "]";
    }
    out += std::string("],\"hole\":") + (j == 0 ? "false}" : "true}");
    if (j + 1 < md.nu()) out += ",";
  }
  out += "],\"a\":[" + fmt_g9(md.a().real()) + "," + fmt_g9(md.a().imag()) +
         "],\"b\":[" + fmt_g9(md.b().real()) + "," + fmt_g9(md.b().imag()) + "]}";
  return out;
}

DomainFamily parse_family(const std::string& text) {
  json j = parse_json(text);
  DomainFamily fam;
  try {
    fam.phi = Expr::parse(j.at("phi").get<std::string>());
    fam.a = Expr::parse(j.at("a").get<std::string>());
    fam.b = Expr::parse(j.at("b").get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(std::string("family expression: ") + e.what(), e.position);
  }
  fam.radius = j.value("radius", 1.0);
  if (!j.contains("curves") || !j["curves"].is_array() || j["curves"].empty())
    throw ParseError("family file needs a non-empty 'curves' array", 0);
  for (const auto& jc : j["curves"]) {
    DomainFamily::Curve curve;
    curve.hole = jc.value("hole", false);
    for (const auto& entry : jc.at("coeffs_t")) {
      if (!entry.is_array() || entry.size() != 3)
        throw ParseError("family coefficients are [k, re-expr, im-expr]", 0);
      try {
        curve.coeffs.push_back({entry[0].get<int>(),
                                Expr::parse(entry[1].get<std::string>()),
                                Expr::parse(entry[2].get<std::string>())});
      } catch (const ParseError& e) {
        throw ParseError(std::string("family coefficient: ") + e.what(), e.position);
      }
    }
    fam.curves.push_back(std::move(curve));
  }
  return fam;
}

DomainFamily load_family(const std::string& path) { return parse_family(slurp(path)); }

// ---------------------------------------------------------------------------

void JsonWriter::comma() {
  if (!needs_comma_.empty() && needs_comma_.back()) out_ += ",";
  if (!needs_comma_.empty()) needs_comma_.back() = true;
}

JsonWriter& JsonWriter::begin_object() {
  comma();
  out_ += "{";
  needs_comma_.push_back(false);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  out_ += "}";
  needs_comma_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::begin_array(const std::string& key) {
  comma();
  if (!key.empty()) out_ += "\"" + key + "\":";
  out_ += "[";
  needs_comma_.push_back(false);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  out_ += "]";
  needs_comma_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, double v) {
  comma();
  out_ += "\"" + key + "\":" + fmt_g9(v);
  return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, const std::string& v) {
  comma();
  out_ += "\"" + key + "\":\"" + v + "\"";
  return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, bool v) {
  comma();
  out_ += "\"" + key + "\":" + (v ? "true" : "false");
  return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, int v) {
  comma();
  out_ += "\"" + key + "\":" + std::to_string(v);
  return *this;
}

JsonWriter& JsonWriter::element(double v) {
  comma();
  out_ += fmt_g9(v);
  return *this;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

CsvWriter::CsvWriter(std::vector<std::string> columns) : ncols_(columns.size()) {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out_ += ",";
    out_ += columns[i];
  }
  out_ += "\n";
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ += ",";
    out_ += cells[i];
  }
  out_ += "\n";
}

// ---------------------------------------------------------------------------

namespace {
std::string heat_color(double v) {
  // blue (low) -> white -> red (high), v in [0,1]
  double r = v < 0.5 ? 2 * v : 1.0;
  double b = v < 0.5 ? 1.0 : 2 * (1 - v);
  double g = v < 0.5 ? 2 * v : 2 * (1 - v);
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", int(255 * r), int(255 * g),
                int(255 * b));
  return buf;
}
}  // namespace

std::string svg_heatmap(const std::vector<cplx>& points, const std::vector<double>& values,
                        const std::vector<int>& status, int n, const std::string& title) {
  double vmin = 1e300, vmax = -1e300;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!status.empty() && status[i]) continue;
    vmin = std::min(vmin, values[i]);
    vmax = std::max(vmax, values[i]);
  }
  if (vmax <= vmin) vmax = vmin + 1;
  const int cell = 40, margin = 30;
  int size = n * cell + 2 * margin;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size
      << "\" height=\"" << size + 20 << "\">\n";
  svg << "<text x=\"" << margin << "\" y=\"18\" font-size=\"13\">" << title
      << " [" << fmt_g9(vmin) << ", " << fmt_g9(vmax) << "]</text>\n";
  for (int iy = 0; iy < n; ++iy)
    for (int ix = 0; ix < n; ++ix) {
      std::size_t idx = std::size_t(iy) * n + ix;
      std::string color = "#cccccc";
      if (status.empty() || !status[idx])
        color = heat_color((values[idx] - vmin) / (vmax - vmin));
      svg << "<rect x=\"" << margin + ix * cell << "\" y=\""
          << 20 + margin + (n - 1 - iy) * cell << "\" width=\"" << cell
          << "\" height=\"" << cell << "\" fill=\"" << color << "\"/>\n";
    }
  svg << "</svg>\n";
  return svg.str();
}

std::string svg_slits(const SlitData& data, const std::string& title) {
  double rmax = 1;
  for (const auto& s : data.circular) rmax = std::max(rmax, s.r);
  for (const auto& s : data.radial) rmax = std::max(rmax, s.r2);
  const double scale = 180.0 / rmax;
  const int cx = 200, cy = 220;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"440\">\n";
  svg << "<text x=\"10\" y=\"18\" font-size=\"13\">" << title << "</text>\n";
  svg << "<circle cx=\"" << cx << "\" cy=\"" << cy
      << "\" r=\"2\" fill=\"black\"/>\n";
  auto px = [&](double r, double th) {
    return std::pair<double, double>(cx + scale * r * std::cos(th),
                                     cy - scale * r * std::sin(th));
  };
  for (const auto& s : data.circular) {
    auto [x1, y1] = px(s.r, s.theta1);
    auto [x2, y2] = px(s.r, s.theta2);
    int large = (s.theta2 - s.theta1) > kPi ? 1 : 0;
    svg << "<path d=\"M " << fmt_g9(x1) << " " << fmt_g9(y1) << " A "
        << fmt_g9(scale * s.r) << " " << fmt_g9(scale * s.r) << " 0 " << large
        << " 0 " << fmt_g9(x2) << " " << fmt_g9(y2)
        << "\" stroke=\"#b22222\" fill=\"none\" stroke-width=\"2\"/>\n";
  }
  for (const auto& s : data.radial) {
    auto [x1, y1] = px(s.r1, s.theta);
    auto [x2, y2] = px(s.r2, s.theta);
    svg << "<line x1=\"" << fmt_g9(x1) << "\" y1=\"" << fmt_g9(y1) << "\" x2=\""
        << fmt_g9(x2) << "\" y2=\"" << fmt_g9(y2)
        << "\" stroke=\"#1f4e9c\" stroke-width=\"2\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace hsl
