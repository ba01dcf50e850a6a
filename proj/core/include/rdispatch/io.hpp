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

#ifndef RDISPATCH_IO_HPP_
#define RDISPATCH_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "rdispatch/demand.hpp"
#include "rdispatch/model.hpp"
#include "rdispatch/tariff.hpp"

namespace rdispatch {

// All readers throw ParseError with the offending file or field in the
// message.

TurbineModel parse_model_json(std::string_view text);
TurbineModel read_model(const std::filesystem::path& path);
std::string model_to_json(const TurbineModel& model);
void write_model(const std::filesystem::path& path, const TurbineModel& model);

TariffSpec parse_tariff_json(std::string_view text);
TariffSpec read_tariff_spec(const std::filesystem::path& path);
// read_tariff_spec followed by compile_tariff.
Tariff read_tariff(const std::filesystem::path& path);
std::string tariff_to_json(const TariffSpec& spec);
void write_tariff(const std::filesystem::path& path, const TariffSpec& spec);

// CSV with header t,power_kw,heat_kw and rows t = 0, 1, ... in order.
DemandProfile parse_demand_csv(std::string_view text);
DemandProfile read_demand(const std::filesystem::path& path);
std::string demand_to_csv(const DemandProfile& profile);
void write_demand(const std::filesystem::path& path,
                  const DemandProfile& profile);

// Every *.csv file in `dir`, in lexicographic file-name order.
std::vector<DemandProfile> read_history(const std::filesystem::path& dir);

// Shortest representation that parses back to the same double.
std::string format_double(double v);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace rdispatch

#endif  // RDISPATCH_IO_HPP_
