// Copyright 2026 The shorrabi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "shorrabi/csv.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace shorrabi {

std::string csv_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  if (res.ec != std::errc()) throw std::runtime_error("csv_number: formatting failed");
  return std::string(buf, res.ptr);
}

void CsvTable::add_param(const std::string& key, double value) {
  params.emplace_back(key, csv_number(value));
}

void CsvTable::add_param(const std::string& key, const std::string& value) {
  params.emplace_back(key, value);
}

void CsvTable::write(std::ostream& os) const {
  os << "# schema=" << schema << '/' << version;
  for (const auto& [k, v] : params) os << ' ' << k << '=' << v;
  os << '\n';
  for (size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
  os << '\n';
  for (const auto& row : rows) {
    if (row.size() != columns.size()) throw std::logic_error("CsvTable: ragged row");
    for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << '\n';
  }
}

}  // namespace shorrabi
