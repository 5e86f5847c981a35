#include "poncelet/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace poncelet {

namespace {

Complex complex_field(const json& j, const char* key) {
  const json& v = j.at(key);
  if (!v.is_array() || v.size() != 2) throw Error(ErrorCode::invalid_argument, std::string(key) + " must be [re, im]");
  return {v[0].get<double>(), v[1].get<double>()};
}

}  // namespace

PonceletConfig config_from_json(const json& j) {
  try {
    const double a = j.at("a").get<double>(), b = j.at("b").get<double>();
    const bool focal = j.contains("f") || j.contains("g");
    const bool circular = j.contains("xc") || j.contains("yc");
    if (!focal && !circular)
      throw Error(ErrorCode::invalid_argument, "config needs either f and g or xc and yc");
    // a circular caustic center determines f and g, which are then ignored
    if (circular) return config_circular_caustic(a, b, j.at("xc").get<double>(), j.at("yc").get<double>());
    return make_config(a, b, complex_field(j, "f"), complex_field(j, "g"));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::invalid_argument, std::string("bad config: ") + e.what());
  }
}

json config_to_json(const PonceletConfig& cfg) {
  json j;
  j["a"] = cfg.a;
  j["b"] = cfg.b;
  j["f"] = {cfg.f.real(), cfg.f.imag()};
  j["g"] = {cfg.g.real(), cfg.g.imag()};
  if (cfg.circular) {
    j["xc"] = cfg.circular->center.x;
    j["yc"] = cfg.circular->center.y;
    j["r"] = cfg.circular->radius;
  }
  return j;
}

PonceletConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::invalid_argument, "cannot read config " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::invalid_argument, std::string("bad config: ") + e.what());
  }
  return config_from_json(j);
}

std::string format_double(double v) {
  v += 0.0;
  if (v == std::floor(v) && std::abs(v) < 1e15) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.0f", v);
    return buf;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json to_json(Point p) { return json::array({p.x + 0.0, p.y + 0.0}); }

json to_json(const Circle& c) { return {{"center", to_json(c.center)}, {"radius", c.radius}}; }

json to_json(const Line& l) { return {{"l", l.l}, {"m", l.m}, {"n", l.n}}; }

json to_json(const EllipseSpec& e) {
  return {{"center", to_json(e.center)},
          {"semi_major", e.semi_major},
          {"semi_minor", e.semi_minor},
          {"rotation", e.rotation}};
}

json to_json(const ConicCoeffs& c) {
  return {{"coefficients", c.k}, {"classification", to_string(classify_conic(c))}};
}

json to_json(const LocusFit& f) {
  json j;
  j["basis"] = to_string(f.basis);
  j["coefficients"] = f.coeffs;
  j["residual"] = f.residual;
  j["samples"] = f.samples;
  j["classification"] = to_string(classify_conic(f.normalized_conic()));
  if (f.basis == Basis::quartic9) j["quartic_weight"] = f.quartic_weight();
  return j;
}

std::string to_csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows) {
  std::ostringstream out;
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << format_double(r[i]);
    out << '\n';
  }
  return out.str();
}

std::string locus_csv(const LocusSamples& s) {
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < s.theta.size(); ++i) {
    const bool ok = s.defined[i];
    rows.push_back({s.theta[i], s.points[i].x, s.points[i].y, ok ? 1.0 : 0.0});
  }
  return to_csv({"theta", "x", "y", "defined"}, rows);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::invalid_argument, "cannot write " + path);
  out << text;
}

}  // namespace poncelet
