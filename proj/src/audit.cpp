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

#include "stingy/audit.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <utility>

#include "stingy/rng.hpp"

namespace stingy {

OptResult brute_force_opt(const SetFunction& f, const Comatroid& c) {
  if (f.ground() != c.ground()) {
    throw std::invalid_argument("set function and comatroid ground sets differ");
  }
  OptResult result;
  bool first = true;
  for (Mask circuit : c.circuits()) {
    const Rational& value = f.value(circuit);
    if (first || value < result.opt_value) {
      result.opt_value = value;
      result.all_optima.assign(1, circuit);
      first = false;
    } else if (value == result.opt_value) {
      result.all_optima.push_back(circuit);
    }
  }
  std::sort(result.all_optima.begin(), result.all_optima.end(), subset_lex_less);
  result.opt_set = result.all_optima.front();
  return result;
}

namespace {

BoundReport build_report(const SetFunction& f, const Comatroid& c, TiePolicy policy,
                         const GreedyTrace& trace, const OptResult& opt) {
  BoundReport report;
  report.policy = policy;
  report.q = c.n() - c.girth();
  try {
    report.steep = steepness(f);
  } catch (const NoSteepElementError&) {
    report.steep.reset();
  }
  if (report.steep && report.q >= 1) {
    report.bound = steepness_bound(report.steep->s, report.q);
  }
  report.gr_set = trace.final_set;
  report.gr_value = f.value(trace.final_set);
  report.opt_set = opt.opt_set;
  report.opt_value = opt.opt_value;
  if (opt.opt_value > 0) {
    report.ratio = report.gr_value / opt.opt_value;
  }
  if (report.ratio && report.bound) {
    report.bound_violated = ExtRational(*report.ratio) > *report.bound;
  }
  return report;
}

const GreedyStep& step_at(const GreedyTrace& trace, int step) {
  if (step < 1 || static_cast<std::size_t>(step) > trace.steps.size()) {
    throw std::out_of_range("step " + std::to_string(step) + " outside 1.." +
                            std::to_string(trace.steps.size()));
  }
  return trace.steps[static_cast<std::size_t>(step) - 1];
}

void require_circuit(const Comatroid& c, Mask opt_set) {
  if (!c.is_circuit(opt_set)) {
    throw std::invalid_argument(subset_to_string(opt_set) + " is not a circuit");
  }
}

Rational excess_sum(const SetFunction& f, Mask before, Mask opt_set) {
  Rational sum = 0;
  for (int b : subset_elements(before & ~opt_set)) {
    sum += marginal(f, before, b);
  }
  return sum;
}

}  // namespace

ExcessCheck check_excess_inequality(const SetFunction& f, const Comatroid& c,
                                    const GreedyTrace& trace, int step, Mask opt_set) {
  const GreedyStep& s = step_at(trace, step);
  require_circuit(c, opt_set);
  ExcessCheck check;
  check.lhs = excess_sum(f, s.before, opt_set);
  check.rhs = Rational(subset_size(s.before & ~opt_set)) * s.increment;
  check.holds = check.lhs >= check.rhs;
  return check;
}

RemainingCheck check_remaining_inequality(const SetFunction& f, const Comatroid& c,
                                          const GreedyTrace& trace, int step,
                                          Mask opt_set) {
  const GreedyStep& s = step_at(trace, step);
  require_circuit(c, opt_set);
  RemainingCheck check;
  check.lhs = excess_sum(f, s.before, opt_set);
  const int remaining = static_cast<int>(trace.steps.size()) - (step - 1);
  check.rhs = Rational(remaining) * s.increment;
  check.holds = check.lhs >= check.rhs;
  // |X_{i-1}| - |OPT| = q - (i-1) since all circuits have girth cardinality.
  check.witnesses = exchange_witnesses(c, s.before, opt_set);
  return check;
}

StepAudit audit_step(const SetFunction& f, const Comatroid& c, const GreedyTrace& trace,
                     int step, Mask opt_set) {
  const GreedyStep& s = step_at(trace, step);
  require_circuit(c, opt_set);
  StepAudit audit;
  audit.step = step;
  audit.before = s.before;
  audit.chosen = s.chosen;
  audit.opt_set = opt_set;
  audit.lhs = excess_sum(f, s.before, opt_set);
  audit.rhs_excess = Rational(subset_size(s.before & ~opt_set)) * s.increment;
  audit.excess_holds = audit.lhs >= audit.rhs_excess;
  const int remaining = static_cast<int>(trace.steps.size()) - (step - 1);
  audit.rhs_remaining = Rational(remaining) * s.increment;
  audit.remaining_holds = audit.lhs >= audit.rhs_remaining;
  audit.witnesses = exchange_witnesses(c, s.before, opt_set);
  return audit;
}

BoundReport ratio_report(const SetFunction& f, const Comatroid& c, TiePolicy policy,
                         const GreedyOptions& options) {
  GreedyTrace trace = greedy_descent(f, c, policy, options);
  OptResult opt = brute_force_opt(f, c);
  return build_report(f, c, policy, trace, opt);
}

std::vector<TiePolicy> InstanceAudit::violated_policies() const {
  std::vector<TiePolicy> out;
  for (const BoundReport& report : reports) {
    if (report.bound_violated.value_or(false)) out.push_back(report.policy);
  }
  return out;
}

InstanceAudit audit_instance(const SetFunction& f, const Comatroid& c,
                             const AuditOptions& options) {
  GreedyOptions greedy_options;
  greedy_options.trace_cap = options.trace_cap;
  std::vector<GreedyTrace> traces = enumerate_traces(f, c, greedy_options);

  InstanceAudit audit;
  audit.trace_count = traces.size();
  audit.opt = brute_force_opt(f, c);

  // Step audits depend only on (X_{i-1}, x_i, OPT); trajectories share
  // prefixes heavily, so memoize across them. before and opt fit in 24
  // bits each, the chosen label in 5.
  std::unordered_map<std::uint64_t, StepAudit> memo;
  auto audit_for = [&](const GreedyTrace& trace, int step, Mask opt_set) -> const StepAudit& {
    const GreedyStep& s = trace.steps[static_cast<std::size_t>(step) - 1];
    const std::uint64_t key = (static_cast<std::uint64_t>(s.before) << 29) |
                              (static_cast<std::uint64_t>(s.chosen) << 24) |
                              static_cast<std::uint64_t>(opt_set);
    auto it = memo.find(key);
    if (it == memo.end()) {
      it = memo.emplace(key, audit_step(f, c, trace, step, opt_set)).first;
    }
    return it->second;
  };

  for (std::size_t ti = 0; ti < traces.size(); ++ti) {
    const GreedyTrace& trace = traces[ti];
    for (int step = 1; step <= static_cast<int>(trace.steps.size()); ++step) {
      for (Mask opt_set : audit.opt.all_optima) {
        const StepAudit& sa = audit_for(trace, step, opt_set);
        ++audit.excess_checks;
        if (!sa.excess_holds) {
          ++audit.excess_violations;
          if (audit.excess_failures.size() < options.max_stored_violations) {
            audit.excess_failures.push_back(StepViolation{ti, sa});
          }
        }
        ++audit.remaining_checks;
        if (!sa.remaining_holds) {
          ++audit.remaining_violations;
          if (audit.remaining_failures.size() < options.max_stored_violations) {
            audit.remaining_failures.push_back(StepViolation{ti, sa});
          }
        }
      }
    }
  }

  // The four concrete policies map onto the sorted trace list directly:
  // lex-min is the first sequence, lex-max the last, best/worst the first
  // sequence attaining the extreme endpoint value.
  auto pick_extreme = [&](bool best) -> const GreedyTrace& {
    const GreedyTrace* pick = &traces.front();
    for (const GreedyTrace& t : traces) {
      const bool better = best ? f.value(t.final_set) < f.value(pick->final_set)
                               : f.value(t.final_set) > f.value(pick->final_set);
      if (better) pick = &t;
    }
    return *pick;
  };
  audit.reports.push_back(build_report(f, c, TiePolicy::kLexMin, traces.front(), audit.opt));
  audit.reports.push_back(build_report(f, c, TiePolicy::kLexMax, traces.back(), audit.opt));
  audit.reports.push_back(build_report(f, c, TiePolicy::kBest, pick_extreme(true), audit.opt));
  audit.reports.push_back(build_report(f, c, TiePolicy::kWorst, pick_extreme(false), audit.opt));
  return audit;
}

namespace {

std::optional<Finding> audit_one(const SearchConfig& config, std::uint64_t index) {
  const bool is_reference = config.include_reference && index == 0;
  std::optional<std::pair<SetFunction, Comatroid>> instance;
  std::string kind;
  int n = 0;
  std::uint64_t instance_seed = 0;

  if (is_reference) {
    instance = reference_instance();
    kind = "reference";
    n = 4;
  } else {
    const std::uint64_t draw = index - (config.include_reference ? 1 : 0);
    instance_seed = derive_seed(config.seed, draw);
    SplitMix64 rng(instance_seed);
    n = config.n_min +
        static_cast<int>(rng.below(static_cast<std::uint64_t>(config.n_max - config.n_min + 1)));
    RandomInstance random = random_instance(config.kind, n, rng.next());
    kind = random.function_kind + "/" + random.matroid_kind;
    instance.emplace(std::move(random.f), std::move(random.c));
  }

  InstanceAudit audit = audit_instance(instance->first, instance->second, config.audit);
  if (!audit.has_findings()) return std::nullopt;

  Finding finding{index,
                  std::move(kind),
                  n,
                  instance_seed,
                  std::move(instance->first),
                  std::move(instance->second),
                  audit.excess_violations,
                  audit.violated_policies(),
                  std::move(audit.reports)};
  return finding;
}

}  // namespace

std::vector<Finding> search_counterexamples(const SearchConfig& config) {
  if (config.n_min < 2 || config.n_max > 8 || config.n_min > config.n_max) {
    throw std::invalid_argument("search needs 2 <= n_min <= n_max <= 8");
  }
  if (config.jobs < 1) {
    throw std::invalid_argument("jobs must be >= 1");
  }

  const std::uint64_t total = config.count + (config.include_reference ? 1 : 0);
  std::vector<std::optional<Finding>> results(total);

  if (config.jobs == 1 || total <= 1) {
    for (std::uint64_t i = 0; i < total; ++i) results[i] = audit_one(config, i);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
      for (;;) {
        const std::uint64_t i = next.fetch_add(1);
        if (i >= total) return;
        try {
          results[i] = audit_one(config, i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> threads;
    const std::uint64_t thread_count =
        std::min<std::uint64_t>(static_cast<std::uint64_t>(config.jobs), total);
    threads.reserve(thread_count);
    for (std::uint64_t i = 0; i < thread_count; ++i) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  std::vector<Finding> findings;
  for (std::optional<Finding>& r : results) {
    if (r) findings.push_back(std::move(*r));
  }
  return findings;
}

}  // namespace stingy
