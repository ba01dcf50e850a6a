// Copyright 2026 The rdispatch Authors
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

#include "rdispatch/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rdispatch/errors.hpp"

namespace rdispatch {

namespace {

using nlohmann::json;

json parse_json(std::string_view text, std::string_view what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

template <class T>
T field(const json& obj, const char* key, std::string_view where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ParseError(std::string(where) + ": missing field '" + key + "'");
  }
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string(where) + ": field '" + key + "': " + e.what());
  }
}

std::vector<TariffSpec::Tier> parse_tiers(const json& obj,
                                          const std::string& where) {
  std::vector<TariffSpec::Tier> tiers;
  if (!obj.contains("tiers")) return tiers;
  const json& arr = obj.at("tiers");
  if (!arr.is_array()) throw ParseError(where + ": 'tiers' must be an array");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string w = where + ".tiers[" + std::to_string(i) + "]";
    tiers.push_back({field<double>(arr[i], "above_kw", w),
                     field<double>(arr[i], "buy_per_kwh", w)});
  }
  return tiers;
}

json tiers_to_json(const std::vector<TariffSpec::Tier>& tiers) {
  json arr = json::array();
  for (const auto& t : tiers) {
    arr.push_back({{"above_kw", t.above_kw}, {"buy_per_kwh", t.buy_per_kwh}});
  }
  return arr;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(trim(line.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <class T>
T parse_number(std::string_view s, std::size_t line_no) {
  T v{};
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw ParseError("demand csv line " + std::to_string(line_no) +
                     ": bad number '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

TurbineModel parse_model_json(std::string_view text) {
  const json j = parse_json(text, "model");
  TurbineModel m;
  m.step_seconds = field<double>(j, "step_seconds", "model");
  m.states = field<std::vector<std::string>>(j, "states", "model");
  const json& arr = j.contains("transitions") ? j.at("transitions") : json();
  if (!arr.is_array()) throw ParseError("model: 'transitions' must be an array");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string w = "model.transitions[" + std::to_string(i) + "]";
    const json& r = arr[i];
    m.transitions.push_back({field<std::string>(r, "from", w),
                             field<std::string>(r, "control", w),
                             field<std::string>(r, "to", w),
                             field<int>(r, "duration_steps", w),
                             field<double>(r, "power_kw", w),
                             field<double>(r, "heat_kw", w),
                             field<double>(r, "op_cost", w)});
  }
  return m;
}

TurbineModel read_model(const std::filesystem::path& path) {
  try {
    return parse_model_json(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string model_to_json(const TurbineModel& model) {
  json j;
  j["step_seconds"] = model.step_seconds;
  j["states"] = model.states;
  j["transitions"] = json::array();
  for (const auto& t : model.transitions) {
    j["transitions"].push_back({{"from", t.from},
                                {"control", t.control},
                                {"to", t.to},
                                {"duration_steps", t.duration_steps},
                                {"power_kw", t.power_kw},
                                {"heat_kw", t.heat_kw},
                                {"op_cost", t.op_cost}});
  }
  return j.dump(1) + "\n";
}

void write_model(const std::filesystem::path& path, const TurbineModel& model) {
  write_text_file(path, model_to_json(model));
}

TariffSpec parse_tariff_json(std::string_view text) {
  const json j = parse_json(text, "tariff");
  TariffSpec spec;
  spec.step_seconds = field<double>(j, "step_seconds", "tariff");
  spec.horizon_steps = field<std::size_t>(j, "horizon_steps", "tariff");
  if (!j.contains("power") || !j.at("power").is_array()) {
    throw ParseError("tariff: 'power' must be an array");
  }
  const json& power = j.at("power");
  for (std::size_t i = 0; i < power.size(); ++i) {
    const std::string w = "tariff.power[" + std::to_string(i) + "]";
    const json& seg = power[i];
    TariffSpec::PowerSegment s;
    s.from_step = field<std::size_t>(seg, "from_step", w);
    s.to_step = field<std::size_t>(seg, "to_step", w);
    s.buy_per_kwh = field<double>(seg, "buy_per_kwh", w);
    if (seg.contains("sell_per_kwh")) {
      const json& sell = seg.at("sell_per_kwh");
      if (sell.is_number()) {
        s.sell_per_kwh = sell.get<double>();
      } else if (!(sell.is_string() && sell.get<std::string>() == "forbidden")) {
        throw ParseError(w + ": sell_per_kwh must be a number or \"forbidden\"");
      }
    }
    s.tiers = parse_tiers(seg, w);
    spec.power.push_back(std::move(s));
  }
  if (!j.contains("heat")) throw ParseError("tariff: missing field 'heat'");
  const json& heat = j.at("heat");
  spec.heat_buy_per_kwh = field<double>(heat, "buy_per_kwh", "tariff.heat");
  spec.heat_tiers = parse_tiers(heat, "tariff.heat");
  return spec;
}

TariffSpec read_tariff_spec(const std::filesystem::path& path) {
  try {
    return parse_tariff_json(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

Tariff read_tariff(const std::filesystem::path& path) {
  return compile_tariff(read_tariff_spec(path));
}

std::string tariff_to_json(const TariffSpec& spec) {
  json j;
  j["step_seconds"] = spec.step_seconds;
  j["horizon_steps"] = spec.horizon_steps;
  j["power"] = json::array();
  for (const auto& s : spec.power) {
    json seg = {{"from_step", s.from_step},
                {"to_step", s.to_step},
                {"buy_per_kwh", s.buy_per_kwh}};
    if (s.sell_per_kwh) {
      seg["sell_per_kwh"] = *s.sell_per_kwh;
    } else {
      seg["sell_per_kwh"] = "forbidden";
    }
    if (!s.tiers.empty()) seg["tiers"] = tiers_to_json(s.tiers);
    j["power"].push_back(std::move(seg));
  }
  j["heat"] = {{"buy_per_kwh", spec.heat_buy_per_kwh}};
  if (!spec.heat_tiers.empty()) j["heat"]["tiers"] = tiers_to_json(spec.heat_tiers);
  return j.dump(1) + "\n";
}

void write_tariff(const std::filesystem::path& path, const TariffSpec& spec) {
  write_text_file(path, tariff_to_json(spec));
}

DemandProfile parse_demand_csv(std::string_view text) {
  DemandProfile p;
  std::size_t line_no = 0;
  bool header = false;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    const auto cols = split(line, ',');
    if (!header) {
      if (cols.size() != 3 || cols[0] != "t" || cols[1] != "power_kw" ||
          cols[2] != "heat_kw") {
        throw ParseError("demand csv: header must be t,power_kw,heat_kw");
      }
      header = true;
      continue;
    }
    if (cols.size() != 3) {
      throw ParseError("demand csv line " + std::to_string(line_no) +
                       ": expected 3 columns");
    }
    const auto t = parse_number<std::size_t>(cols[0], line_no);
    if (t != p.size()) {
      throw ParseError("demand csv line " + std::to_string(line_no) +
                       ": expected t=" + std::to_string(p.size()) + ", got t=" +
                       std::to_string(t) + " (missing or out-of-order row)");
    }
    p.power_kw.push_back(parse_number<double>(cols[1], line_no));
    p.heat_kw.push_back(parse_number<double>(cols[2], line_no));
  }
  if (!header) throw ParseError("demand csv: empty file");
  return p;
}

DemandProfile read_demand(const std::filesystem::path& path) {
  try {
    return parse_demand_csv(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string demand_to_csv(const DemandProfile& profile) {
  std::string out = "t,power_kw,heat_kw\n";
  for (std::size_t t = 0; t < profile.size(); ++t) {
    out += std::to_string(t);
    out += ',';
    out += format_double(profile.power_kw[t]);
    out += ',';
    out += format_double(profile.heat_kw[t]);
    out += '\n';
  }
  return out;
}

void write_demand(const std::filesystem::path& path,
                  const DemandProfile& profile) {
  write_text_file(path, demand_to_csv(profile));
}

std::vector<DemandProfile> read_history(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) {
    throw ParseError("history: " + dir.string() + " is not a directory");
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".csv") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) {
              return a.filename().string() < b.filename().string();
            });
  std::vector<DemandProfile> days;
  for (const auto& f : files) days.push_back(read_demand(f));
  return days;
}

}  // namespace rdispatch
