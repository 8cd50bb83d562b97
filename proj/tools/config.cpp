// Copyright 2026 The nmlln Authors. All rights reserved.
//
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

#include "config.hpp"

#include <fstream>
#include <set>

#include "nmlln/error.hpp"

namespace nmlln::cli {

namespace {

using nlohmann::json;

std::string at(const std::string& path, const std::string& key) {
  return path + "/" + key;
}
std::string at(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

const json& require(const json& obj, const std::string& path,
                    const char* key) {
  if (!obj.contains(key)) throw ConfigError(at(path, key), "missing");
  return obj.at(key);
}

const json& require_array(const json& obj, const std::string& path,
                          const char* key) {
  const json& v = require(obj, path, key);
  if (!v.is_array()) throw ConfigError(at(path, key), "expected an array");
  return v;
}

// Rationals are "p/q" strings; JSON integers are accepted, floats are not.
Rational read_rational(const json& v, const std::string& path) {
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? Rational(v.get<std::uint64_t>())
                                  : Rational(v.get<std::int64_t>());
  }
  if (v.is_number_float()) {
    throw ConfigError(path, "floating-point value; write it as a \"p/q\" string");
  }
  if (!v.is_string()) throw ConfigError(path, "expected a rational string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const Error& e) {
    throw ConfigError(path, e.what());
  }
}

std::uint64_t read_count(const json& v, const std::string& path) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw ConfigError(path, "expected a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

std::string read_string(const json& v, const std::string& path) {
  if (!v.is_string()) throw ConfigError(path, "expected a string");
  return v.get<std::string>();
}

Scenario parse_scenario(const json& doc) {
  const json& points = require_array(doc, "", "points");
  const json& weights = require_array(doc, "", "weights");
  const json& field = require_array(doc, "", "field");
  const json& psi = require_array(doc, "", "psi");

  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < points.size(); ++i) {
    labels.push_back(read_string(points[i], at("/points", i)));
    if (!seen.insert(labels.back()).second) {
      throw ConfigError(at("/points", i), "duplicate label '" + labels.back() + "'");
    }
  }
  if (labels.empty()) throw ConfigError("/points", "no points");
  if (weights.size() != labels.size()) {
    throw ConfigError("/weights", std::to_string(weights.size()) +
                                      " weights for " +
                                      std::to_string(labels.size()) + " points");
  }
  std::vector<Rational> w;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    w.push_back(read_rational(weights[i], at("/weights", i)));
    if (w.back() == 0) throw ConfigError(at("/weights", i), "zero weight");
    if (w.back() < 0) throw ConfigError(at("/weights", i), "negative weight");
  }
  std::optional<FiniteSpace> space;
  try {
    space.emplace(labels, w);
  } catch (const Error& e) {
    throw ConfigError("/weights", e.what());
  }

  std::vector<std::vector<PointIndex>> blocks;
  std::set<PointIndex> covered;
  for (std::size_t b = 0; b < field.size(); ++b) {
    const std::string bpath = at("/field", b);
    if (!field[b].is_array() || field[b].empty()) {
      throw ConfigError(bpath, "expected a nonempty array of labels");
    }
    std::vector<PointIndex> block;
    for (std::size_t j = 0; j < field[b].size(); ++j) {
      const std::string label = read_string(field[b][j], at(bpath, j));
      auto p = space->find(label);
      if (!p) throw ConfigError(at(bpath, j), "unknown label '" + label + "'");
      if (!covered.insert(*p).second) {
        throw ConfigError(at(bpath, j), "label '" + label + "' appears twice");
      }
      block.push_back(*p);
    }
    blocks.push_back(std::move(block));
  }
  if (covered.size() != space->size()) {
    for (PointIndex p = 0; p < space->size(); ++p) {
      if (!covered.count(p)) {
        throw ConfigError("/field", "point '" + space->label(p) + "' is in no block");
      }
    }
  }

  if (psi.size() != labels.size()) {
    throw ConfigError("/psi", std::to_string(psi.size()) + " values for " +
                                  std::to_string(labels.size()) + " points");
  }
  std::vector<Rational> values;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    values.push_back(read_rational(psi[i], at("/psi", i)));
  }
  return Scenario(std::move(*space),
                  FieldPartition(labels.size(), std::move(blocks)),
                  RandomQuantity(std::move(values)));
}

PlanSpec parse_plan(const json& v, const Scenario& scenario) {
  if (!v.is_object()) throw ConfigError("/plan", "expected an object");
  PlanSpec spec;
  const std::string variant = read_string(require(v, "/plan", "variant"), "/plan/variant");
  try {
    spec.variant = parse_plan_kind(variant);
  } catch (const Error& e) {
    throw ConfigError("/plan/variant", e.what());
  }
  if (spec.variant == PlanKind::kBlockAlternating) {
    if (v.contains("schedule")) {
      try {
        spec.schedule = parse_schedule_kind(read_string(v["schedule"], "/plan/schedule"));
      } catch (const Error& e) {
        throw ConfigError("/plan/schedule", e.what());
      }
    }
    return spec;
  }
  if (v.contains("a") == v.contains("target")) {
    throw ConfigError("/plan", "give exactly one of \"a\" and \"target\"");
  }
  if (v.contains("a")) {
    spec.weight = read_rational(v["a"], "/plan/a");
    if (*spec.weight < 0 || *spec.weight > 1) {
      throw ConfigError("/plan/a", "mixture weight outside [0,1]");
    }
  } else {
    spec.target = read_rational(v["target"], "/plan/target");
    if (*spec.target < scenario.lower() || *spec.target > scenario.upper()) {
      throw ConfigError("/plan/target",
                        "target outside [E_*, E^*] = [" +
                            to_string(scenario.lower()) + ", " +
                            to_string(scenario.upper()) + "]");
    }
  }
  return spec;
}

RunSpec parse_run(const json& v) {
  RunSpec run;
  if (!v.is_object()) throw ConfigError("/run", "expected an object");
  if (v.contains("n_max")) run.n_max = read_count(v["n_max"], "/run/n_max");
  if (run.n_max < 1) throw ConfigError("/run/n_max", "must be >= 1");
  if (v.contains("trials")) run.trials = read_count(v["trials"], "/run/trials");
  if (v.contains("seed")) run.seed = read_count(v["seed"], "/run/seed");
  if (v.contains("budget")) run.budget = read_count(v["budget"], "/run/budget");
  if (v.contains("checkpoints")) {
    const json& c = v["checkpoints"];
    if (!c.is_array()) throw ConfigError("/run/checkpoints", "expected an array");
    for (std::size_t i = 0; i < c.size(); ++i) {
      const auto n = read_count(c[i], at("/run/checkpoints", i));
      if (n < 1 || n > run.n_max) {
        throw ConfigError(at("/run/checkpoints", i), "outside [1, n_max]");
      }
      run.checkpoints.push_back(n);
    }
    std::sort(run.checkpoints.begin(), run.checkpoints.end());
    run.checkpoints.erase(
        std::unique(run.checkpoints.begin(), run.checkpoints.end()),
        run.checkpoints.end());
  }
  return run;
}

WeakLawSpec parse_weaklaw(const json& v) {
  if (!v.is_object()) throw ConfigError("/weaklaw", "expected an object");
  WeakLawSpec spec;
  if (v.contains("a")) spec.a = read_rational(v["a"], "/weaklaw/a");
  if (v.contains("epsilon")) spec.epsilon = read_rational(v["epsilon"], "/weaklaw/epsilon");
  if (spec.epsilon <= 0) throw ConfigError("/weaklaw/epsilon", "must be > 0");
  if (v.contains("n_min")) spec.n_min = read_count(v["n_min"], "/weaklaw/n_min");
  if (v.contains("n_max")) spec.n_max = read_count(v["n_max"], "/weaklaw/n_max");
  if (spec.n_min < 1) throw ConfigError("/weaklaw/n_min", "must be >= 1");
  if (spec.n_max < spec.n_min) throw ConfigError("/weaklaw/n_max", "below n_min");
  return spec;
}

CertifySpec parse_certify(const json& v) {
  if (!v.is_object()) throw ConfigError("/certify", "expected an object");
  CertifySpec spec;
  const json& target = require_array(v, "/certify", "A");
  if (target.empty()) throw ConfigError("/certify/A", "A is empty");
  for (std::size_t i = 0; i < target.size(); ++i) {
    const std::string path = at("/certify/A", i);
    // A bare rational is a single point; a pair is a closed interval.
    if (target[i].is_array()) {
      if (target[i].size() != 2) throw ConfigError(path, "expected [lo, hi]");
      Interval iv{read_rational(target[i][0], at(path, 0)),
                  read_rational(target[i][1], at(path, 1))};
      if (iv.lo > iv.hi) throw ConfigError(path, "lo > hi");
      spec.target.push_back(std::move(iv));
    } else {
      const Rational x = read_rational(target[i], path);
      spec.target.push_back({x, x});
    }
  }
  if (v.contains("events")) {
    const json& ev = v["events"];
    if (!ev.is_array()) throw ConfigError("/certify/events", "expected an array");
    for (std::size_t i = 0; i < ev.size(); ++i) {
      try {
        spec.events.push_back(
            parse_event_kind(read_string(ev[i], at("/certify/events", i))));
      } catch (const Error& e) {
        throw ConfigError(at("/certify/events", i), e.what());
      }
    }
  }
  return spec;
}

}  // namespace

ScenarioConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("", "config must be a JSON object");
  Scenario scenario = parse_scenario(doc);
  ScenarioConfig config{scenario, std::nullopt, RunSpec{}, std::nullopt,
                        std::nullopt};
  if (doc.contains("plan")) config.plan = parse_plan(doc["plan"], scenario);
  if (doc.contains("run")) config.run = parse_run(doc["run"]);
  if (doc.contains("weaklaw")) config.weaklaw = parse_weaklaw(doc["weaklaw"]);
  if (doc.contains("certify")) config.certify = parse_certify(doc["certify"]);
  return config;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot open '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("malformed JSON: ") + e.what());
  }
  return parse_config(doc);
}

json dump_config(const ScenarioConfig& config) {
  const Scenario& s = config.scenario;
  json doc;
  doc["points"] = s.space().labels();
  json weights = json::array();
  for (const auto& w : s.space().weights()) weights.push_back(to_string(w));
  doc["weights"] = weights;
  json field = json::array();
  for (const auto& block : s.field().blocks()) {
    json b = json::array();
    for (PointIndex p : block) b.push_back(s.space().label(p));
    field.push_back(b);
  }
  doc["field"] = field;
  json psi = json::array();
  for (const auto& v : s.psi().values()) psi.push_back(to_string(v));
  doc["psi"] = psi;

  if (config.plan) {
    json plan;
    plan["variant"] = plan_kind_name(config.plan->variant);
    if (config.plan->variant == PlanKind::kBlockAlternating) {
      plan["schedule"] = schedule_kind_name(config.plan->schedule);
    } else if (config.plan->weight) {
      plan["a"] = to_string(*config.plan->weight);
    } else if (config.plan->target) {
      plan["target"] = to_string(*config.plan->target);
    }
    doc["plan"] = plan;
  }
  json run;
  run["n_max"] = config.run.n_max;
  run["trials"] = config.run.trials;
  run["checkpoints"] = config.run.checkpoints;
  run["seed"] = config.run.seed;
  run["budget"] = config.run.budget;
  doc["run"] = run;
  if (config.weaklaw) {
    json w;
    w["a"] = to_string(config.weaklaw->a);
    w["epsilon"] = to_string(config.weaklaw->epsilon);
    w["n_min"] = config.weaklaw->n_min;
    w["n_max"] = config.weaklaw->n_max;
    doc["weaklaw"] = w;
  }
  if (config.certify) {
    json c;
    json target = json::array();
    for (const auto& iv : config.certify->target) {
      target.push_back({to_string(iv.lo), to_string(iv.hi)});
    }
    c["A"] = target;
    json events = json::array();
    for (EventKind k : config.certify->events) events.push_back(event_kind_name(k));
    c["events"] = events;
    doc["certify"] = c;
  }
  return doc;
}

CoordinatePlan build_plan(const ScenarioConfig& config) {
  if (!config.plan) throw ConfigError("/plan", "missing");
  const Scenario& s = config.scenario;
  const PlanSpec& spec = *config.plan;
  if (spec.variant == PlanKind::kBlockAlternating) {
    return CoordinatePlan::block_alternating(
        s, make_schedule(spec.schedule, s.psi()));
  }
  const Rational a =
      spec.weight ? *spec.weight
                  : target_mixture_weight(*spec.target, s.lower(), s.upper());
  if (spec.variant == PlanKind::kRegimeMixture) {
    return CoordinatePlan::regime_mixture(s, a);
  }
  return CoordinatePlan::constant_mixture(s, a);
}

}  // namespace nmlln::cli
