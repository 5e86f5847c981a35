#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "poncelet/conic.hpp"
#include "poncelet/family.hpp"
#include "poncelet/fit.hpp"
#include "poncelet/loci.hpp"

namespace poncelet {

using json = nlohmann::json;

// {a, b, f: [re, im], g: [re, im]} or {a, b, xc, yc}
PonceletConfig config_from_json(const json& j);
json config_to_json(const PonceletConfig& cfg);
PonceletConfig load_config(const std::string& path);

// 17 significant digits, lossless for doubles.
std::string format_double(double v);

json to_json(Point p);
json to_json(const Circle& c);
json to_json(const Line& l);
json to_json(const EllipseSpec& e);
json to_json(const ConicCoeffs& c);
json to_json(const LocusFit& f);

// Header line plus one line per row; integers print exactly.
std::string to_csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows);

std::string locus_csv(const LocusSamples& s);

void write_text(const std::string& path, const std::string& text);

}  // namespace poncelet
