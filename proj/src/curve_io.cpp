#include "supmod/curve_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace supmod {

namespace {

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double parse_number(const std::string& field, std::size_t line) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(field, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != field.size())
    throw std::invalid_argument("curve csv line " + std::to_string(line) + ": bad number '" +
                                field + "'");
  return v;
}

void check_curve_shape(const ModulusCurve& c) {
  for (std::size_t i = 1; i < c.params.size(); ++i)
    if (!(c.params[i] > c.params[i - 1]))
      throw std::invalid_argument("curve params must be strictly increasing");
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

std::string curve_to_csv(const ModulusCurve& curve) {
  std::string out = "param,value\n";
  for (std::size_t i = 0; i < curve.params.size(); ++i)
    out += fmt12(curve.params[i]) + "," + fmt12(curve.values[i]) + "\n";
  return out;
}

ModulusCurve curve_from_csv(std::string_view text, ModulusKind kind, std::string space_id,
                            std::string config_fingerprint) {
  ModulusCurve c;
  c.kind = kind;
  c.space_id = std::move(space_id);
  c.config_fingerprint = std::move(config_fingerprint);
  c.bias = estimate_bias(kind);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (lineno == 1) {
      if (line != "param,value") throw std::invalid_argument("curve csv: missing header");
      continue;
    }
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
      throw std::invalid_argument("curve csv line " + std::to_string(lineno) +
                                  ": expected two fields");
    c.params.push_back(parse_number(line.substr(0, comma), lineno));
    c.values.push_back(parse_number(line.substr(comma + 1), lineno));
  }
  if (lineno == 0) throw std::invalid_argument("curve csv: empty input");
  check_curve_shape(c);
  return c;
}

std::string curve_to_json(const ModulusCurve& curve) {
  nlohmann::ordered_json j;
  j["kind"] = std::string(to_string(curve.kind));
  j["space_id"] = curve.space_id;
  j["config_fingerprint"] = curve.config_fingerprint;
  auto pts = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < curve.params.size(); ++i)
    pts.push_back({curve.params[i], curve.values[i]});
  j["points"] = std::move(pts);
  return j.dump(2) + "\n";
}

ModulusCurve curve_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("curve json: ") + e.what());
  }
  ModulusCurve c;
  try {
    const auto kind = parse_modulus_kind(j.at("kind").get<std::string>());
    if (!kind) throw std::invalid_argument("curve json: unknown kind");
    c.kind = *kind;
    c.bias = estimate_bias(c.kind);
    c.space_id = j.at("space_id").get<std::string>();
    c.config_fingerprint = j.at("config_fingerprint").get<std::string>();
    for (const auto& pt : j.at("points")) {
      if (!pt.is_array() || pt.size() != 2)
        throw std::invalid_argument("curve json: points must be [param, value] pairs");
      c.params.push_back(pt[0].get<double>());
      c.values.push_back(pt[1].get<double>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("curve json: ") + e.what());
  }
  check_curve_shape(c);
  return c;
}

std::string curve_to_svg(const ModulusCurve& curve) {
  constexpr double W = 640, H = 420, L = 60, R = 20, T = 30, B = 50;
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (!curve.params.empty()) {
    x0 = std::min(0.0, curve.params.front());
    x1 = std::max(curve.params.back(), x0 + 1e-12);
    for (double v : curve.values)
      if (std::isfinite(v)) y1 = std::max(y1, v), y0 = std::min(y0, v);
  }
  auto sx = [&](double x) { return L + (x - x0) / (x1 - x0) * (W - L - R); };
  auto sy = [&](double y) { return H - B - (y - y0) / (y1 - y0) * (H - T - B); };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
    << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B
    << "\" stroke=\"black\"/>\n";
  o << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B
    << "\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double xv = x0 + (x1 - x0) * k / 4, yv = y0 + (y1 - y0) * k / 4;
    o << "<text x=\"" << sx(xv) << "\" y=\"" << H - B + 18 << "\" font-size=\"11\" "
      << "text-anchor=\"middle\">" << fmt12(xv) << "</text>\n";
    o << "<text x=\"" << L - 6 << "\" y=\"" << sy(yv) + 4 << "\" font-size=\"11\" "
      << "text-anchor=\"end\">" << fmt12(yv) << "</text>\n";
  }
  o << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 10
    << "\" font-size=\"13\" text-anchor=\"middle\">parameter</text>\n";
  o << "<text x=\"16\" y=\"" << (T + H - B) / 2 << "\" font-size=\"13\" text-anchor=\"middle\" "
    << "transform=\"rotate(-90 16 " << (T + H - B) / 2 << ")\">" << to_string(curve.kind)
    << "</text>\n";
  o << "<text x=\"" << (L + W - R) / 2 << "\" y=\"18\" font-size=\"13\" text-anchor=\"middle\">"
    << xml_escape(curve.space_id) << "</text>\n";
  o << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < curve.params.size(); ++i) {
    if (!std::isfinite(curve.values[i])) continue;
    o << sx(curve.params[i]) << "," << sy(curve.values[i]) << " ";
  }
  o << "\"/>\n</svg>\n";
  return o.str();
}

}  // namespace supmod
