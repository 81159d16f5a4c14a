// Copyright 2026 The gvks Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gvks/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"

namespace gvks::io {

namespace {

using nlohmann::json;

json parse_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is the 1-based offset of the offending character.
    const std::size_t end = std::min<std::size_t>(e.byte, text.size() + 1);
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(e.what(), line, column);
  }
}

template <typename T>
T field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ContractError(std::string("missing field '") + key + "'");
  }
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ContractError(std::string("field '") + key + "' has the wrong type");
  }
}

double round4(double v) { return std::round(v * 1e4) / 1e4; }

// Uniform in [lo, hi), independent of the standard library's distributions
// so that generated files match across toolchains.
double uniform(std::mt19937_64& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

double side(double v) { return std::clamp(round4(v), 1e-4, 1.0); }

const char* kPalette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2",
                          "#59a14f", "#edc948", "#b07aa1", "#ff9da7",
                          "#9c755f", "#bab0ac"};

std::string xml_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '&':
        out += "&amp;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

}  // namespace

KnapsackInstance parse_instance(std::string_view text) {
  const json doc = parse_text(text);
  KnapsackInstance out;
  const auto d = field<std::int64_t>(doc, "d");
  if (d < 0) throw ContractError("'d' must be >= 0");
  out.d = static_cast<std::size_t>(d);
  out.rotations_allowed = field<bool>(doc, "rotations");
  const json items = field<json>(doc, "items");
  if (!items.is_array()) throw ContractError("'items' must be an array");
  for (const json& it : items) {
    out.items.emplace_back(field<std::string>(it, "id"), field<double>(it, "w"),
                           field<double>(it, "h"), field<double>(it, "p"),
                           field<std::vector<double>>(it, "v"));
    if (out.find(out.items.back().id()) != out.items.size() - 1) {
      throw ContractError("duplicate item id '" + out.items.back().id() + "'");
    }
  }
  out.check();
  return out;
}

Packing parse_packing(std::string_view text) {
  const json doc = parse_text(text);
  Packing out;
  const json placements = field<json>(doc, "placements");
  if (!placements.is_array()) {
    throw ContractError("'placements' must be an array");
  }
  for (const json& p : placements) {
    out.placements.push_back({field<std::string>(p, "id"), field<double>(p, "x"),
                              field<double>(p, "y"), field<bool>(p, "rot")});
  }
  out.packed_profit = field<double>(doc, "profit");
  return out;
}

std::string instance_to_json(const KnapsackInstance& instance) {
  json items = json::array();
  for (const Item& it : instance.items) {
    items.push_back({{"id", it.id()},
                     {"w", it.width()},
                     {"h", it.height()},
                     {"p", it.profit()},
                     {"v", it.weights()}});
  }
  json doc = {{"d", instance.d},
              {"rotations", instance.rotations_allowed},
              {"items", std::move(items)}};
  return doc.dump(2) + "\n";
}

std::string packing_to_json(const Packing& packing) {
  json placements = json::array();
  for (const Placement& p : packing.placements) {
    placements.push_back(
        {{"id", p.item_id}, {"x", p.x}, {"y", p.y}, {"rot", p.rotated}});
  }
  json doc = {{"placements", std::move(placements)},
              {"profit", packing.packed_profit}};
  return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
}

std::string render_svg(const Packing& packing, const KnapsackInstance& instance) {
  constexpr double kScale = 1000.0;
  std::ostringstream s;
  s.precision(10);
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" "
       "height=\"1000\" viewBox=\"0 0 1000 1000\">\n"
    << "  <defs>\n"
    << "    <pattern id=\"hatch\" width=\"12\" height=\"12\" "
       "patternUnits=\"userSpaceOnUse\" patternTransform=\"rotate(45)\">\n"
    << "      <line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"12\" stroke=\"#222\" "
       "stroke-width=\"3\"/>\n"
    << "    </pattern>\n"
    << "  </defs>\n"
    << "  <rect class=\"knapsack\" x=\"0\" y=\"0\" width=\"1000\" "
       "height=\"1000\" fill=\"#fafafa\" stroke=\"#000\" stroke-width=\"2\"/>\n";

  // SVG's y axis points down.
  auto box = [&](double x, double y, double w, double h) {
    std::ostringstream b;
    b.precision(10);
    b << "x=\"" << x * kScale << "\" y=\"" << (1.0 - y - h) * kScale
      << "\" width=\"" << w * kScale << "\" height=\"" << h * kScale << "\"";
    return b.str();
  };

  for (std::size_t i = 0; i < packing.placements.size(); ++i) {
    const Placement& p = packing.placements[i];
    const std::size_t idx = instance.find(p.item_id);
    if (idx == KnapsackInstance::npos) {
      throw StructuralError("unknown item id '" + p.item_id + "'");
    }
    const Item& it = instance.items[idx];
    const double w = it.width(p.rotated);
    const double h = it.height(p.rotated);
    const char* colour = kPalette[idx % std::size(kPalette)];
    s << "  <g>\n    <rect class=\"item\" " << box(p.x, p.y, w, h)
      << " fill=\"" << colour << "\" stroke=\"#333\"/>\n";
    if (p.rotated) {
      s << "    <path class=\"hatch\" d=\"M" << p.x * kScale << ","
        << (1.0 - p.y - h) * kScale << " h" << w * kScale << " v" << h * kScale
        << " h" << -w * kScale << " z\" fill=\"url(#hatch)\"/>\n";
    }
    s << "    <title>" << xml_escape(it.id()) << "</title>\n  </g>\n";
  }
  for (const Container& c : packing.containers) {
    s << "  <rect class=\"container\" " << box(c.x, c.y, c.width, c.height)
      << " fill=\"none\" stroke=\"#c00\" stroke-width=\"3\" "
         "stroke-dasharray=\"12 6\"><title>"
      << to_string(c.kind) << "</title></rect>\n";
  }
  s << "</svg>\n";
  return s.str();
}

Profile parse_profile(std::string_view name) {
  if (name == "uniform") return Profile::kUniform;
  if (name == "skewed-wide") return Profile::kSkewedWide;
  if (name == "skewed-tall") return Profile::kSkewedTall;
  if (name == "heavy-vector") return Profile::kHeavyVector;
  throw ContractError("unknown profile '" + std::string(name) + "'");
}

std::string_view to_string(Profile profile) {
  switch (profile) {
    case Profile::kUniform:
      return "uniform";
    case Profile::kSkewedWide:
      return "skewed-wide";
    case Profile::kSkewedTall:
      return "skewed-tall";
    case Profile::kHeavyVector:
      return "heavy-vector";
  }
  return "?";
}

KnapsackInstance generate_instance(std::uint64_t seed, std::size_t n,
                                   std::size_t d, Profile profile,
                                   bool rotations) {
  std::mt19937_64 rng(seed);
  KnapsackInstance out;
  out.d = d;
  out.rotations_allowed = rotations;

  std::vector<std::vector<double>> weights(n, std::vector<double>(d));
  std::vector<double> ws(n), hs(n), ps(n);
  for (std::size_t i = 0; i < n; ++i) {
    double w = 0.0;
    double h = 0.0;
    switch (profile) {
      case Profile::kUniform:
      case Profile::kHeavyVector:
        w = uniform(rng, 0.05, 0.6);
        h = uniform(rng, 0.05, 0.6);
        break;
      case Profile::kSkewedWide:
      case Profile::kSkewedTall: {
        const double longer = uniform(rng, 0.3, 0.95);
        const double shorter = uniform(rng, 0.02, longer / 2.5);
        w = profile == Profile::kSkewedWide ? longer : shorter;
        h = profile == Profile::kSkewedWide ? shorter : longer;
        break;
      }
    }
    ws[i] = side(w);
    hs[i] = side(h);
    ps[i] = round4(uniform(rng, 0.1, 1.0));
    for (std::size_t q = 0; q < d; ++q) {
      weights[i][q] = profile == Profile::kHeavyVector ? uniform(rng, 0.1, 1.0)
                                                       : uniform(rng, 0.0, 0.4);
    }
  }
  if (profile == Profile::kHeavyVector) {
    // Every dimension sums to about 2, so roughly half the weight fits.
    for (std::size_t q = 0; q < d; ++q) {
      double sum = 0.0;
      for (std::size_t i = 0; i < n; ++i) sum += weights[i][q];
      for (std::size_t i = 0; i < n; ++i) {
        weights[i][q] = std::min(1.0, weights[i][q] * 2.0 / sum);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (double& v : weights[i]) v = std::clamp(round4(v), 0.0, 1.0);
    out.items.emplace_back("i" + std::to_string(i), ws[i], hs[i], ps[i],
                           weights[i]);
  }
  return out;
}

std::optional<double> RunReport::ratio() const {
  if (!oracle_profit) return std::nullopt;
  if (*oracle_profit <= 0.0) return 1.0;
  return std::clamp(solver_profit / *oracle_profit, 0.0, 1.0);
}

std::string RunReport::to_json(bool include_timing) const {
  json doc = {
      {"n", n},
      {"d", d},
      {"rotations", rotations},
      {"solver_profit", solver_profit},
      {"oracle_profit", oracle_profit ? json(*oracle_profit) : json(nullptr)},
      {"ratio", ratio() ? json(*ratio()) : json(nullptr)},
      {"configs_total", stats.configs_total},
      {"configs_explored", stats.configs_explored},
      {"truncated", stats.truncated},
      {"params",
       {{"eps", params.eps},
        {"eps_struct", params.eps_struct},
        {"eps_cont", params.eps_cont},
        {"eps_prime", params.eps_prime},
        {"c_max", params.c_max},
        {"sum_depth", params.sum_depth},
        {"budget", params.config_budget}}}};
  if (include_timing) doc["ms"] = ms;
  return doc.dump(2) + "\n";
}

}  // namespace gvks::io
