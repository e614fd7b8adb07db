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

#ifndef STINGY_GREEDY_HPP_
#define STINGY_GREEDY_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "stingy/comatroid.hpp"
#include "stingy/setfn.hpp"

namespace stingy {

// Greedy descent is nondeterministic under marginal ties. The policy pins
// the resolution:
//   kLexMin / kLexMax  pick the smallest / largest label among minimizers
//   kBest / kWorst     pick, over all complete tie resolutions, a
//                      trajectory with minimum / maximum final value
//                      (ties broken by lexicographically smallest
//                      removal sequence)
//   kAll               only meaningful for enumerate_traces()
enum class TiePolicy { kLexMin, kLexMax, kBest, kWorst, kAll };

const char* to_string(TiePolicy policy);
std::optional<TiePolicy> tie_policy_from_string(std::string_view name);

struct GreedyStep {
  Mask before = 0;              // X_{i-1}
  int chosen = 0;               // x_i
  Rational increment;           // d_{x_i}(X_{i-1})
  std::vector<int> candidates;  // all elements with feasible removal, ascending
};

struct GreedyTrace {
  std::vector<GreedyStep> steps;  // length q = n - girth
  Mask final_set = 0;             // GR, always a circuit

  std::vector<int> sequence() const {
    std::vector<int> seq;
    seq.reserve(steps.size());
    for (const GreedyStep& s : steps) seq.push_back(s.chosen);
    return seq;
  }
};

struct TraceCapExceeded : std::runtime_error {
  explicit TraceCapExceeded(std::uint64_t cap)
      : std::runtime_error("tie enumeration exceeded the trace cap of " +
                           std::to_string(cap)),
        cap(cap) {}
  std::uint64_t cap;
};

inline constexpr std::uint64_t kDefaultTraceCap = 1'000'000;

struct GreedyOptions {
  // Reject functions that fail validate_function() up front.
  bool require_valid_function = false;
  // Cap on full tie enumeration (enumerate_traces and best/worst policies).
  std::uint64_t trace_cap = kDefaultTraceCap;
};

// One full descent U = X_0 > X_1 > ... > X_q under the given policy.
// Throws std::invalid_argument on ground-set mismatch, on policy kAll, or
// when validation is requested and fails.
GreedyTrace greedy_descent(const SetFunction& f, const Comatroid& c,
                           TiePolicy policy, const GreedyOptions& options = {});

// Every complete trajectory reachable by resolving each step's ties in
// every possible way, sorted by removal sequence. Throws TraceCapExceeded
// beyond options.trace_cap.
std::vector<GreedyTrace> enumerate_traces(const SetFunction& f, const Comatroid& c,
                                          const GreedyOptions& options = {});

}  // namespace stingy

#endif  // STINGY_GREEDY_HPP_
