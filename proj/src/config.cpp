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


#include "shorrabi/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <set>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "shorrabi/qec.hpp"
#include "shorrabi/shor_code.hpp"

namespace shorrabi {

namespace pt = boost::property_tree;

namespace {

const std::map<std::string, std::set<std::string>>& known_keys() {
  static const std::map<std::string, std::set<std::string>> keys{
      {"experiment", {"seed", "trajectories", "quadrature_points"}},
      {"hamiltonian",
       {"omega", "J", "k1", "k4", "k7", "g2", "g3", "g5", "g6", "g8", "g9", "zeta1", "zeta2",
        "zeta3", "zeta4", "zeta5", "zeta6", "zeta7", "zeta8", "zeta9"}},
      {"noise", {"epsilon", "epsilon_tau", "N"}},
      {"schedule", {"n", "periods", "mu_over_tau", "precorrection", "noise_order"}},
      {"state", {"theta", "phi"}},
      {"figure", {"mu_over_tau", "span_over_tau", "n"}},
      {"sweep", {"ns"}},
      {"couplings", {"tables", "k_tolerance", "max_denominator"}},
      {"diagnostics", {"seed", "xi_bar", "times", "zeta_unit"}},
  };
  return keys;
}

std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

double plain_number(const std::string& text, const std::string& whole) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last) {
    throw ConfigError("not a number: '" + whole + "'");
  }
  return v;
}

long long parse_integer(const std::string& text, const std::string& key) {
  const std::string t = trim(text);
  long long v = 0;
  auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (res.ec != std::errc() || res.ptr != t.data() + t.size()) {
    throw ConfigError(key + ": not an integer: '" + text + "'");
  }
  return v;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  for (char c : text) {
    if (c == ',') {
      out.push_back(trim(item));
      item.clear();
    } else {
      item.push_back(c);
    }
  }
  out.push_back(trim(item));
  return out;
}

class Section {
 public:
  Section(const pt::ptree* tree, std::string name) : tree_(tree), name_(std::move(name)) {}

  bool has(const std::string& key) const { return tree_ && tree_->count(key) > 0; }

  std::string text(const std::string& key) const { return tree_->get<std::string>(key); }

  void number(const std::string& key, double& out) const {
    if (!has(key)) return;
    try {
      out = parse_config_number(text(key));
    } catch (const ConfigError& e) {
      throw ConfigError(name_ + "." + key + ": " + e.what());
    }
  }

  template <typename Int>
  void integer(const std::string& key, Int& out) const {
    if (has(key)) out = static_cast<Int>(parse_integer(text(key), name_ + "." + key));
  }

  template <typename T, typename F>
  void list(const std::string& key, std::vector<T>& out, F convert) const {
    if (!has(key)) return;
    out.clear();
    for (const std::string& item : split_list(text(key))) {
      try {
        out.push_back(convert(item));
      } catch (const ConfigError& e) {
        throw ConfigError(name_ + "." + key + ": " + e.what());
      }
    }
    if (out.empty()) throw ConfigError(name_ + "." + key + ": empty list");
  }

 private:
  const pt::ptree* tree_;
  std::string name_;
};

}  // namespace

double parse_config_number(const std::string& raw) {
  std::string s = trim(raw);
  if (s.empty()) throw ConfigError("empty value");
  std::string numer = s;
  std::string denom;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    numer = trim(s.substr(0, slash));
    denom = trim(s.substr(slash + 1));
    if (denom.empty() || numer.empty()) throw ConfigError("not a number: '" + raw + "'");
  }
  double value = 1.0;
  if (numer == "pi") {
    value = std::numbers::pi;
  } else if (numer.size() > 3 && numer.compare(numer.size() - 3, 3, "*pi") == 0) {
    value = plain_number(trim(numer.substr(0, numer.size() - 3)), raw) * std::numbers::pi;
  } else if (numer == "-pi") {
    value = -std::numbers::pi;
  } else {
    value = plain_number(numer, raw);
  }
  if (!denom.empty()) {
    const double d = plain_number(denom, raw);
    if (d == 0.0) throw ConfigError("division by zero: '" + raw + "'");
    value /= d;
  }
  if (!std::isfinite(value)) throw ConfigError("not finite: '" + raw + "'");
  return value;
}

StateVector ExperimentConfig::initial_state() const {
  const Complex a = std::cos(theta / 2.0);
  const Complex b = std::polar(std::sin(theta / 2.0), phi);
  return shor_code().logical_state(a, b);
}

ExperimentConfig parse_config(std::istream& is, const std::filesystem::path& base_dir) {
  pt::ptree tree;
  try {
    pt::read_ini(is, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("parse error: ") + e.what());
  }
  for (const auto& [section, body] : tree) {
    if (body.empty() && !body.data().empty()) {
      throw ConfigError("key outside any section: " + section);
    }
    auto it = known_keys().find(section);
    if (it == known_keys().end()) throw ConfigError("unknown section [" + section + "]");
    for (const auto& [key, value] : body) {
      if (!it->second.count(key)) throw ConfigError("unknown key " + section + "." + key);
    }
  }
  auto section = [&](const std::string& name) {
    auto child = tree.get_child_optional(name);
    return Section(child ? &*child : nullptr, name);
  };

  ExperimentConfig cfg;
  cfg.base_dir = base_dir;

  const Section ex = section("experiment");
  ex.integer("seed", cfg.seed);
  ex.integer("trajectories", cfg.trajectories);
  ex.integer("quadrature_points", cfg.quadrature_points);
  if (cfg.trajectories < 0) throw ConfigError("experiment.trajectories must be >= 0");
  if (cfg.quadrature_points < 1) throw ConfigError("experiment.quadrature_points must be >= 1");

  const Section ham = section("hamiltonian");
  ham.number("omega", cfg.params.omega);
  ham.number("J", cfg.params.J);
  ham.number("k1", cfg.params.k[0]);
  ham.number("k4", cfg.params.k[1]);
  ham.number("k7", cfg.params.k[2]);
  for (int i = 0; i < 6; ++i) {
    ham.number("g" + std::to_string(kOuterQubits[i]), cfg.params.g[i]);
  }
  for (int i = 0; i < 9; ++i) ham.number("zeta" + std::to_string(i + 1), cfg.params.zeta[i]);
  try {
    cfg.params.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("[hamiltonian] ") + e.what());
  }

  const Section noise = section("noise");
  if (noise.has("epsilon") && noise.has("epsilon_tau")) {
    throw ConfigError("noise: give epsilon or epsilon_tau, not both");
  }
  noise.number("epsilon", cfg.noise.epsilon);
  if (noise.has("epsilon_tau")) {
    double et = 0.0;
    noise.number("epsilon_tau", et);
    cfg.noise.epsilon = et / cfg.params.tau();
  }
  noise.integer("N", cfg.noise.N);
  try {
    cfg.noise.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("[noise] ") + e.what());
  }

  const Section sch = section("schedule");
  int n = 8;
  int periods = 1;
  sch.integer("n", n);
  sch.integer("periods", periods);
  cfg.schedule = SequenceSchedule::regular(cfg.params, n, periods);
  if (sch.has("mu_over_tau")) {
    double m = 0.0;
    sch.number("mu_over_tau", m);
    cfg.schedule.mu = m * cfg.params.tau();
  }
  if (sch.has("noise_order")) {
    const std::string order = trim(sch.text("noise_order"));
    if (order == "before") {
      cfg.schedule.noise_before_qec = true;
    } else if (order == "after") {
      cfg.schedule.noise_before_qec = false;
    } else {
      throw ConfigError("schedule.noise_order must be 'before' or 'after'");
    }
  }
  if (sch.has("precorrection")) cfg.precorrection = trim(sch.text("precorrection"));
  if (cfg.precorrection == "auto") {
    try {
      cfg.schedule.precorrection = parity_precorrection_for(cfg.params.k);
    } catch (const std::invalid_argument&) {
      cfg.schedule.precorrection.reset();
    }
  } else if (cfg.precorrection != "none") {
    try {
      cfg.schedule.precorrection = PauliString::parse(cfg.precorrection, kShorQubits);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("schedule.precorrection: ") + e.what());
    }
  }
  try {
    cfg.schedule.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("[schedule] ") + e.what());
  }

  const Section st = section("state");
  st.number("theta", cfg.theta);
  st.number("phi", cfg.phi);

  const Section fig = section("figure");
  fig.number("mu_over_tau", cfg.figure.mu_over_tau);
  fig.number("span_over_tau", cfg.figure.span_over_tau);
  fig.integer("n", cfg.figure.n);
  if (!(cfg.figure.mu_over_tau > 0.0)) throw ConfigError("figure.mu_over_tau must be > 0");
  if (cfg.figure.span_over_tau < 0.0) throw ConfigError("figure.span_over_tau must be >= 0");
  if (cfg.figure.n < 1) throw ConfigError("figure.n must be >= 1");

  section("sweep").list("ns", cfg.sweep_ns, [](const std::string& s) {
    const long long v = parse_integer(s, "n");
    if (v < 8) throw ConfigError("sweep n must be >= 8");
    return static_cast<int>(v);
  });

  const Section cp = section("couplings");
  if (cp.has("tables")) {
    cfg.coupling_tables = trim(cp.text("tables"));
    if (cfg.coupling_tables.is_relative() && !base_dir.empty()) {
      cfg.coupling_tables = base_dir / cfg.coupling_tables;
    }
  }
  cp.number("k_tolerance", cfg.k_tolerance);
  cp.integer("max_denominator", cfg.max_denominator);
  if (!(cfg.k_tolerance > 0.0)) throw ConfigError("couplings.k_tolerance must be > 0");
  if (cfg.max_denominator < 1) throw ConfigError("couplings.max_denominator must be >= 1");

  const Section dg = section("diagnostics");
  dg.integer("seed", cfg.diagnostics.h_prime_seed);
  auto positive = [](const std::string& s) {
    const double v = parse_config_number(s);
    if (!(v > 0.0)) throw ConfigError("values must be > 0");
    return v;
  };
  dg.list("xi_bar", cfg.diagnostics.xi_bar, positive);
  dg.list("times", cfg.diagnostics.times, positive);
  dg.number("zeta_unit", cfg.diagnostics.zeta_unit);
  if (!(cfg.diagnostics.zeta_unit > 0.0)) throw ConfigError("diagnostics.zeta_unit must be > 0");

  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path.string());
  return parse_config(in, path.parent_path());
}

}  // namespace shorrabi
