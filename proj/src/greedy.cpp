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

#include "stingy/greedy.hpp"

#include <functional>
#include <utility>

namespace stingy {

const char* to_string(TiePolicy policy) {
  switch (policy) {
    case TiePolicy::kLexMin:
      return "lex-min";
    case TiePolicy::kLexMax:
      return "lex-max";
    case TiePolicy::kBest:
      return "best";
    case TiePolicy::kWorst:
      return "worst";
    case TiePolicy::kAll:
      return "all";
  }
  return "unknown";
}

std::optional<TiePolicy> tie_policy_from_string(std::string_view name) {
  if (name == "lex-min") return TiePolicy::kLexMin;
  if (name == "lex-max") return TiePolicy::kLexMax;
  if (name == "best") return TiePolicy::kBest;
  if (name == "worst") return TiePolicy::kWorst;
  if (name == "all") return TiePolicy::kAll;
  return std::nullopt;
}

namespace {

struct StepChoice {
  std::vector<int> candidates;
  std::vector<int> minimizers;
  Rational min_increment;
};

StepChoice step_choice(const SetFunction& f, const Comatroid& c, Mask current) {
  StepChoice choice;
  choice.candidates = removable(c, current);
  for (int e : choice.candidates) {
    Rational d = marginal(f, current, e);
    if (choice.minimizers.empty() || d < choice.min_increment) {
      choice.min_increment = std::move(d);
      choice.minimizers.assign(1, e);
    } else if (d == choice.min_increment) {
      choice.minimizers.push_back(e);
    }
  }
  return choice;
}

void check_inputs(const SetFunction& f, const Comatroid& c, const GreedyOptions& options) {
  if (f.ground() != c.ground()) {
    throw std::invalid_argument("set function and comatroid ground sets differ");
  }
  if (options.require_valid_function && !validate_function(f).ok()) {
    throw std::invalid_argument(
        "set function is not nonincreasing supermodular normalized");
  }
}

}  // namespace

std::vector<GreedyTrace> enumerate_traces(const SetFunction& f, const Comatroid& c,
                                          const GreedyOptions& options) {
  check_inputs(f, c, options);
  const int q = c.n() - c.girth();

  std::vector<GreedyTrace> out;
  GreedyTrace partial;
  // Branching over ascending minimizers makes the DFS emit traces already
  // sorted by removal sequence.
  std::function<void(Mask, int)> descend = [&](Mask current, int depth) {
    if (depth == q) {
      if (out.size() >= options.trace_cap) throw TraceCapExceeded(options.trace_cap);
      partial.final_set = current;
      out.push_back(partial);
      return;
    }
    StepChoice choice = step_choice(f, c, current);
    for (int e : choice.minimizers) {
      partial.steps.push_back(
          GreedyStep{current, e, choice.min_increment, choice.candidates});
      descend(current & ~element_bit(e), depth + 1);
      partial.steps.pop_back();
    }
  };
  descend(f.ground().full_mask(), 0);
  return out;
}

GreedyTrace greedy_descent(const SetFunction& f, const Comatroid& c, TiePolicy policy,
                           const GreedyOptions& options) {
  check_inputs(f, c, options);

  if (policy == TiePolicy::kAll) {
    throw std::invalid_argument("policy 'all' does not select a single trace; "
                                "use enumerate_traces");
  }

  if (policy == TiePolicy::kBest || policy == TiePolicy::kWorst) {
    std::vector<GreedyTrace> traces = enumerate_traces(f, c, options);
    const GreedyTrace* pick = &traces.front();
    for (const GreedyTrace& t : traces) {
      const Rational& candidate = f.value(t.final_set);
      const Rational& incumbent = f.value(pick->final_set);
      const bool better = policy == TiePolicy::kBest ? candidate < incumbent
                                                     : candidate > incumbent;
      if (better) pick = &t;  // first hit wins: traces are in sequence order
    }
    return *pick;
  }

  const int q = c.n() - c.girth();
  GreedyTrace trace;
  Mask current = f.ground().full_mask();
  for (int i = 0; i < q; ++i) {
    StepChoice choice = step_choice(f, c, current);
    const int chosen = policy == TiePolicy::kLexMin ? choice.minimizers.front()
                                                    : choice.minimizers.back();
    trace.steps.push_back(
        GreedyStep{current, chosen, std::move(choice.min_increment),
                   std::move(choice.candidates)});
    current &= ~element_bit(chosen);
  }
  trace.final_set = current;
  return trace;
}

}  // namespace stingy
