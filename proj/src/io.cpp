// Copyright 2026 The stingy Authors.
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

#include "stingy/io.hpp"

#include <cstdint>
#include <cstdio>

#include "stingy/greedy.hpp"

namespace stingy {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const json& require_field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) {
    throw ParseError(ParseErrorKind::kSchema,
                     std::string("missing field '") + name + "'");
  }
  return *it;
}

int require_int(const json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw ParseError(ParseErrorKind::kSchema, std::string(what) + " must be an integer");
  }
  return j.get<int>();
}

Rational value_from_json(const json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) {
      return Rational(j.get<std::int64_t>());
    }
    if (j.is_string()) {
      return parse_rational(j.get<std::string>());
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(ParseErrorKind::kValue, where + ": " + e.what());
  }
  throw ParseError(ParseErrorKind::kValue,
                   where + ": rationals are integers or \"p/q\" strings");
}

std::vector<int> element_list(const json& j, const std::string& where) {
  if (!j.is_array()) {
    throw ParseError(ParseErrorKind::kSchema, where + " must be an array of labels");
  }
  std::vector<int> out;
  for (const json& e : j) {
    out.push_back(require_int(e, (where + " entry").c_str()));
  }
  return out;
}

json policy_opt(const std::optional<bool>& value) {
  if (!value) return nullptr;
  return *value;
}

ordered_json subset_json(Mask subset) {
  ordered_json arr = ordered_json::array();
  for (int e : subset_elements(subset)) arr.push_back(e);
  return arr;
}

}  // namespace

RawInstance parse_raw_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(ParseErrorKind::kSyntax, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ParseError(ParseErrorKind::kSchema, "instance file must be a JSON object");
  }

  const int n = require_int(require_field(doc, "n"), "'n'");
  if (n < 1 || n > kMaxElements) {
    throw ParseError(ParseErrorKind::kSchema,
                     "'n' must be in 1.." + std::to_string(kMaxElements) + ", got " +
                         std::to_string(n));
  }
  GroundSet ground(n);

  const json& fvals = require_field(doc, "f");
  const std::size_t expected = std::size_t{1} << n;
  if (!fvals.is_array() || fvals.size() != expected) {
    throw ParseError(ParseErrorKind::kSchema,
                     "'f' must list exactly 2^n = " + std::to_string(expected) +
                         " values, got " +
                         std::to_string(fvals.is_array() ? fvals.size() : 0));
  }
  std::vector<Rational> values;
  values.reserve(expected);
  for (std::size_t i = 0; i < expected; ++i) {
    values.push_back(value_from_json(fvals[i], "f[" + std::to_string(i) + "]"));
  }
  SetFunction f(ground, std::move(values));

  const json& dep = require_field(doc, "dependence");
  if (!dep.is_object()) {
    throw ParseError(ParseErrorKind::kSchema, "'dependence' must be an object");
  }

  if (auto sets = dep.find("sets"); sets != dep.end()) {
    if (!sets->is_array()) {
      throw ParseError(ParseErrorKind::kSchema, "'dependence.sets' must be an array");
    }
    std::vector<Mask> members;
    for (std::size_t i = 0; i < sets->size(); ++i) {
      const std::string where = "dependence.sets[" + std::to_string(i) + "]";
      try {
        members.push_back(subset_from_elements(element_list((*sets)[i], where), ground));
      } catch (const std::exception& e) {
        throw ParseError(ParseErrorKind::kSchema, where + ": " + e.what());
      }
    }
    return RawInstance{std::move(f), std::move(members)};
  }
  if (auto uniform = dep.find("uniform"); uniform != dep.end()) {
    const int rank = require_int(require_field(*uniform, "rank"), "'uniform.rank'");
    return RawInstance{std::move(f), MatroidSpec{ground, UniformMatroid{rank}}};
  }
  if (auto partition = dep.find("partition"); partition != dep.end()) {
    const json& blocks_json = require_field(*partition, "blocks");
    if (!blocks_json.is_array()) {
      throw ParseError(ParseErrorKind::kSchema, "'partition.blocks' must be an array");
    }
    std::vector<std::vector<int>> blocks;
    for (std::size_t i = 0; i < blocks_json.size(); ++i) {
      blocks.push_back(
          element_list(blocks_json[i], "partition.blocks[" + std::to_string(i) + "]"));
    }
    const json& caps_json = require_field(*partition, "capacities");
    if (!caps_json.is_array()) {
      throw ParseError(ParseErrorKind::kSchema, "'partition.capacities' must be an array");
    }
    std::vector<int> capacities;
    for (const json& cap : caps_json) {
      capacities.push_back(require_int(cap, "'partition.capacities' entry"));
    }
    return RawInstance{
        std::move(f),
        MatroidSpec{ground, PartitionMatroid{std::move(blocks), std::move(capacities)}}};
  }
  throw ParseError(ParseErrorKind::kSchema,
                   "'dependence' needs one of 'sets', 'uniform', 'partition'");
}

InstanceValidation validate_raw_instance(const RawInstance& raw) {
  InstanceValidation validation;
  validation.function = validate_function(raw.f);

  if (const auto* members = std::get_if<std::vector<Mask>>(&raw.dependence)) {
    auto result = validate_comatroid(raw.f.ground(), *members);
    if (auto* failure = std::get_if<ComatroidFailure>(&result)) {
      validation.family_failure = *failure;
    } else {
      validation.comatroid = std::get<Comatroid>(std::move(result));
    }
    return validation;
  }

  const auto& spec = std::get<MatroidSpec>(raw.dependence);
  try {
    validation.comatroid = from_matroid_dual(spec);
  } catch (const std::invalid_argument& e) {
    validation.spec_error = e.what();
  }
  return validation;
}

std::vector<std::string> InstanceValidation::diagnostics() const {
  std::vector<std::string> out;
  if (!function.nonincreasing) {
    std::string line = "function is not nonincreasing";
    if (function.monotonicity_witness) {
      line += ": f(" + subset_to_string(function.monotonicity_witness->first) +
              ") < f(" + subset_to_string(function.monotonicity_witness->second) + ")";
    }
    out.push_back(line);
  }
  if (!function.supermodular) {
    std::string line = "function is not supermodular";
    if (function.supermodularity_witness) {
      const auto& w = *function.supermodularity_witness;
      line += ": adding " + std::to_string(w.element) + " to " +
              subset_to_string(w.smaller) + " gains more than to " +
              subset_to_string(w.larger);
    }
    out.push_back(line);
  }
  if (!function.normalized) {
    std::string line = "function is not normalized";
    if (function.normalization_witness) {
      line += ": offending value at " + subset_to_string(*function.normalization_witness);
    }
    out.push_back(line);
  }
  if (family_failure) {
    out.push_back("dependence family: " + family_failure->describe());
  }
  if (spec_error) {
    out.push_back("matroid spec: " + *spec_error);
  }
  return out;
}

std::pair<SetFunction, Comatroid> parse_instance(const std::string& text) {
  RawInstance raw = parse_raw_instance(text);
  InstanceValidation validation = validate_raw_instance(raw);
  if (!validation.ok()) {
    throw ParseError(ParseErrorKind::kValidation, validation.diagnostics().front());
  }
  return {std::move(raw.f), std::move(*validation.comatroid)};
}

ordered_json instance_json(const SetFunction& f, const Comatroid& c) {
  ordered_json doc;
  doc["format"] = "stingy-instance";
  doc["version"] = 1;
  doc["n"] = f.n();
  ordered_json values = ordered_json::array();
  for (const Rational& v : f.values()) values.push_back(format_rational(v));
  doc["f"] = std::move(values);
  ordered_json sets = ordered_json::array();
  for (Mask m : c.family().members()) sets.push_back(subset_json(m));
  doc["dependence"] = ordered_json{{"sets", std::move(sets)}};
  return doc;
}

std::string emit_instance(const SetFunction& f, const Comatroid& c) {
  return instance_json(f, c).dump(2) + "\n";
}

std::string instance_digest(const SetFunction& f, const Comatroid& c) {
  const std::string canonical = emit_instance(f, c);
  std::uint64_t hash = 0xCBF29CE484222325ull;
  for (unsigned char byte : canonical) {
    hash ^= byte;
    hash *= 0x00000100000001B3ull;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(hash));
  return buffer;
}

ordered_json trace_json(const SetFunction& f, const GreedyTrace& trace) {
  ordered_json steps = ordered_json::array();
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const GreedyStep& s = trace.steps[i];
    ordered_json step;
    step["step"] = i + 1;
    step["before"] = subset_json(s.before);
    step["candidates"] = s.candidates;
    step["chosen"] = s.chosen;
    step["increment"] = format_rational(s.increment);
    steps.push_back(std::move(step));
  }
  ordered_json doc;
  doc["steps"] = std::move(steps);
  doc["final_set"] = subset_json(trace.final_set);
  doc["final_value"] = format_rational(f.value(trace.final_set));
  return doc;
}

ordered_json opt_json(const OptResult& opt) {
  ordered_json doc;
  doc["opt_set"] = subset_json(opt.opt_set);
  doc["opt_value"] = format_rational(opt.opt_value);
  ordered_json all = ordered_json::array();
  for (Mask m : opt.all_optima) all.push_back(subset_json(m));
  doc["all_optima"] = std::move(all);
  return doc;
}

ordered_json report_json(const BoundReport& report) {
  ordered_json doc;
  doc["policy"] = to_string(report.policy);
  doc["q"] = report.q;
  if (report.steep) {
    doc["s"] = format_rational(report.steep->s);
    doc["t"] = format_ext(report.steep->t);
    doc["steepest_element"] = report.steep->argmax_element;
  } else {
    doc["s"] = nullptr;
    doc["t"] = nullptr;
    doc["steepest_element"] = nullptr;
  }
  doc["bound"] = report.bound ? ordered_json(format_ext(*report.bound)) : nullptr;
  doc["gr_set"] = subset_json(report.gr_set);
  doc["gr_value"] = format_rational(report.gr_value);
  doc["opt_set"] = subset_json(report.opt_set);
  doc["opt_value"] = format_rational(report.opt_value);
  doc["ratio"] = report.ratio ? ordered_json(format_rational(*report.ratio)) : nullptr;
  doc["bound_violated"] = policy_opt(report.bound_violated);
  return doc;
}

ordered_json step_audit_json(const StepAudit& audit) {
  ordered_json doc;
  doc["step"] = audit.step;
  doc["before"] = subset_json(audit.before);
  doc["chosen"] = audit.chosen;
  doc["opt_set"] = subset_json(audit.opt_set);
  doc["lhs"] = format_rational(audit.lhs);
  doc["excess"] = ordered_json{{"rhs", format_rational(audit.rhs_excess)},
                               {"holds", audit.excess_holds}};
  doc["remaining"] = ordered_json{{"rhs", format_rational(audit.rhs_remaining)},
                                  {"holds", audit.remaining_holds},
                                  {"witnesses", audit.witnesses}};
  return doc;
}

ordered_json audit_json(const InstanceAudit& audit) {
  ordered_json doc;
  doc["traces"] = audit.trace_count;
  doc["opt"] = opt_json(audit.opt);

  auto violations = [](std::uint64_t checks, std::uint64_t count,
                       const std::vector<StepViolation>& stored) {
    ordered_json section;
    section["checks"] = checks;
    section["violations"] = count;
    ordered_json failures = ordered_json::array();
    for (const StepViolation& v : stored) {
      ordered_json entry = step_audit_json(v.audit);
      entry["trace"] = v.trace_index;
      failures.push_back(std::move(entry));
    }
    section["failures"] = std::move(failures);
    return section;
  };
  doc["excess_inequality"] =
      violations(audit.excess_checks, audit.excess_violations, audit.excess_failures);
  doc["remaining_inequality"] = violations(audit.remaining_checks,
                                           audit.remaining_violations,
                                           audit.remaining_failures);

  ordered_json reports = ordered_json::array();
  for (const BoundReport& report : audit.reports) reports.push_back(report_json(report));
  doc["reports"] = std::move(reports);
  return doc;
}

ordered_json finding_json(const Finding& finding) {
  ordered_json doc;
  doc["index"] = finding.index;
  doc["kind"] = finding.kind;
  doc["n"] = finding.n;
  doc["instance_seed"] = finding.instance_seed;
  doc["instance"] = instance_json(finding.f, finding.c);
  doc["excess_violations"] = finding.excess_violations;
  ordered_json policies = ordered_json::array();
  for (TiePolicy p : finding.violated_policies) policies.push_back(to_string(p));
  doc["violated_policies"] = std::move(policies);
  ordered_json reports = ordered_json::array();
  for (const BoundReport& report : finding.reports) reports.push_back(report_json(report));
  doc["reports"] = std::move(reports);
  return doc;
}

ordered_json findings_json(const SearchConfig& config, const std::vector<Finding>& findings) {
  ordered_json doc;
  doc["format"] = "stingy-findings";
  doc["version"] = 1;
  doc["kind"] = to_string(config.kind);
  doc["n_min"] = config.n_min;
  doc["n_max"] = config.n_max;
  doc["count"] = config.count;
  doc["seed"] = config.seed;
  doc["include_reference"] = config.include_reference;
  ordered_json list = ordered_json::array();
  for (const Finding& finding : findings) list.push_back(finding_json(finding));
  doc["findings"] = std::move(list);
  return doc;
}

}  // namespace stingy
