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

#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace shorrabi {

/// A CSV table with a parameter-echo comment line:
///
///   # schema=<name>/<version> key=value ...
///   col1,col2,...
///   ...
///
/// Comma separated, '.' decimal point, LF line endings.
struct CsvTable {
  std::string schema;
  int version = 1;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_param(const std::string& key, double value);
  void add_param(const std::string& key, const std::string& value);
  void write(std::ostream& os) const;
};

/// Shortest round-trip decimal representation ("%.17g"-equivalent).
std::string csv_number(double x);

}  // namespace shorrabi
