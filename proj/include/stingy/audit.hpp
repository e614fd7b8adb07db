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

#ifndef STINGY_AUDIT_HPP_
#define STINGY_AUDIT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stingy/comatroid.hpp"
#include "stingy/gen.hpp"
#include "stingy/greedy.hpp"
#include "stingy/setfn.hpp"

namespace stingy {

struct OptResult {
  Mask opt_set = 0;              // lexicographically smallest optimum
  Rational opt_value;            // min of f over the circuits
  std::vector<Mask> all_optima;  // every circuit attaining it, lex order
};

// Exact minimum of f over the circuit family.
OptResult brute_force_opt(const SetFunction& f, const Comatroid& c);

// Steepness bound vs. realized greedy/optimal ratio for one tie policy.
// Fields are disengaged where the quantity is undefined: no steepness when
// nothing satisfies f({x}) < f(empty), no bound additionally when q = 0,
// no ratio when f(OPT) = 0, and the verdict requires both.
struct BoundReport {
  TiePolicy policy = TiePolicy::kLexMin;
  int q = 0;
  std::optional<SteepnessReport> steep;
  std::optional<ExtRational> bound;
  Mask gr_set = 0;
  Rational gr_value;
  Mask opt_set = 0;
  Rational opt_value;
  std::optional<Rational> ratio;
  std::optional<bool> bound_violated;  // ratio > bound, when both defined
};

BoundReport ratio_report(const SetFunction& f, const Comatroid& c, TiePolicy policy,
                         const GreedyOptions& options = {});

// Both per-step inequalities lower-bound the same left side
//   lhs = sum over b in X_{i-1}\OPT of d_b(X_{i-1})
// by a multiple of the chosen marginal d_{x_i}(X_{i-1}):
//   excess factor     |X_{i-1}\OPT|   -- can fail
//   remaining factor  q - (i-1)       -- holds on every valid instance
struct ExcessCheck {
  Rational lhs;
  Rational rhs;
  bool holds = false;
};

struct RemainingCheck {
  Rational lhs;
  Rational rhs;
  bool holds = false;
  // q-(i-1) distinct elements of X_{i-1}\OPT whose prefix removals all stay
  // in D; they certify rhs <= lhs.
  std::vector<int> witnesses;
};

// step is 1-based; opt_set must be a circuit. Throw std::out_of_range /
// std::invalid_argument respectively.
ExcessCheck check_excess_inequality(const SetFunction& f, const Comatroid& c,
                                    const GreedyTrace& trace, int step, Mask opt_set);
RemainingCheck check_remaining_inequality(const SetFunction& f, const Comatroid& c,
                                          const GreedyTrace& trace, int step,
                                          Mask opt_set);

struct StepAudit {
  int step = 0;  // 1-based
  Mask before = 0;
  int chosen = 0;
  Mask opt_set = 0;
  Rational lhs;
  Rational rhs_excess;
  bool excess_holds = false;
  Rational rhs_remaining;
  bool remaining_holds = false;
  std::vector<int> witnesses;
};

StepAudit audit_step(const SetFunction& f, const Comatroid& c, const GreedyTrace& trace,
                     int step, Mask opt_set);

struct AuditOptions {
  std::uint64_t trace_cap = kDefaultTraceCap;
  // Detailed violation records kept per inequality; counts are always exact.
  std::size_t max_stored_violations = 4096;
};

struct StepViolation {
  std::size_t trace_index = 0;
  StepAudit audit;
};

// Every (trajectory, step, optimal circuit) triple checked against both
// inequalities, plus a BoundReport for each concrete tie policy.
struct InstanceAudit {
  std::size_t trace_count = 0;
  OptResult opt;
  std::uint64_t excess_checks = 0;
  std::uint64_t excess_violations = 0;
  std::uint64_t remaining_checks = 0;
  std::uint64_t remaining_violations = 0;
  std::vector<StepViolation> excess_failures;     // capped
  std::vector<StepViolation> remaining_failures;  // capped
  std::vector<BoundReport> reports;               // lex-min, lex-max, best, worst

  std::vector<TiePolicy> violated_policies() const;
  bool any_bound_violation() const { return !violated_policies().empty(); }
  bool has_findings() const { return excess_violations > 0 || any_bound_violation(); }
};

InstanceAudit audit_instance(const SetFunction& f, const Comatroid& c,
                             const AuditOptions& options = {});

struct SearchConfig {
  InstanceKind kind = InstanceKind::kMixed;
  int n_min = 4;
  int n_max = 8;
  std::uint64_t count = 0;  // random instances to draw
  std::uint64_t seed = 0;
  bool include_reference = false;  // prepend the bundled reference instance at index 0
  int jobs = 1;
  AuditOptions audit;
};

struct Finding {
  std::uint64_t index = 0;
  std::string kind;                  // e.g. "coverage/partition-dual" or "reference"
  int n = 0;
  std::uint64_t instance_seed = 0;   // 0 for the reference instance
  SetFunction f;
  Comatroid c;
  std::uint64_t excess_violations = 0;
  std::vector<TiePolicy> violated_policies;
  std::vector<BoundReport> reports;  // all four policies
};

// Deterministic given the config seed: instance i is a pure function of
// (seed, i), so the findings list is byte-identical for any job count.
// Returns instances where the excess inequality fails somewhere or the
// steepness bound is violated under some policy, ascending by index.
std::vector<Finding> search_counterexamples(const SearchConfig& config);

}  // namespace stingy

#endif  // STINGY_AUDIT_HPP_
