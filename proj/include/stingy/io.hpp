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

#ifndef STINGY_IO_HPP_
#define STINGY_IO_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "stingy/audit.hpp"
#include "stingy/comatroid.hpp"
#include "stingy/setfn.hpp"

namespace stingy {

// Instance files are JSON with exact rationals as strings:
//   {
//     "format": "stingy-instance", "version": 1, "n": 4,
//     "f": ["6", "4", ...],                  // 2^n values, indexed by mask
//     "dependence": {"sets": [[1,2], ...]}   // or {"uniform": {"rank": k}}
//   }                                        // or {"partition": {"blocks": ..,
//                                            //     "capacities": ..}}
// Emission is canonical: explicit ascending member lists, stable field
// order, so identical instances serialize to identical bytes.

enum class ParseErrorKind { kIo, kSyntax, kSchema, kValue, kValidation };

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ParseErrorKind kind() const { return kind_; }

 private:
  ParseErrorKind kind_;
};

struct RawInstance {
  SetFunction f;
  std::variant<std::vector<Mask>, MatroidSpec> dependence;
};

// Structural parse only: syntax, field shapes, value grammar, label ranges.
RawInstance parse_raw_instance(const std::string& text);

struct InstanceValidation {
  FunctionVerdict function;
  std::optional<ComatroidFailure> family_failure;
  std::optional<std::string> spec_error;  // malformed matroid spec
  std::optional<Comatroid> comatroid;     // engaged when the family is valid

  bool ok() const { return function.ok() && comatroid.has_value(); }
  // Human-readable lines, one per failed check.
  std::vector<std::string> diagnostics() const;
};

InstanceValidation validate_raw_instance(const RawInstance& raw);

// Parse + validate. Throws ParseError, with kind kValidation carrying the
// first validator diagnostic.
std::pair<SetFunction, Comatroid> parse_instance(const std::string& text);

nlohmann::ordered_json instance_json(const SetFunction& f, const Comatroid& c);
std::string emit_instance(const SetFunction& f, const Comatroid& c);

// FNV-1a over the canonical serialization, as a 16-hex-digit string.
std::string instance_digest(const SetFunction& f, const Comatroid& c);

nlohmann::ordered_json trace_json(const SetFunction& f, const GreedyTrace& trace);
nlohmann::ordered_json opt_json(const OptResult& opt);
nlohmann::ordered_json report_json(const BoundReport& report);
nlohmann::ordered_json step_audit_json(const StepAudit& audit);
nlohmann::ordered_json audit_json(const InstanceAudit& audit);
nlohmann::ordered_json finding_json(const Finding& finding);
nlohmann::ordered_json findings_json(const SearchConfig& config,
                                     const std::vector<Finding>& findings);

}  // namespace stingy

#endif  // STINGY_IO_HPP_
