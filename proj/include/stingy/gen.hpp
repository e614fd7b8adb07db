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

#ifndef STINGY_GEN_HPP_
#define STINGY_GEN_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stingy/comatroid.hpp"
#include "stingy/setfn.hpp"

namespace stingy {

// The bundled 4-element reference instance: a nonincreasing supermodular
// function with steepness 1/2 on a girth-2 comatroid where greedy descent
// can end a factor 3/2 from the optimum, above the steepness bound 5/4.
std::pair<SetFunction, Comatroid> reference_instance();
SetFunction reference_function();
std::vector<Mask> reference_members();

// Single-defect mutations of the reference instance for negative tests.
enum class ReferenceMutation {
  kBreakMonotonicity,   // f({1}) := 7 > f(empty)
  kBreakNormalization,  // f(U) := 1
  kBreakUpwardClosure,  // drop {1,2,3} from the family
  kBreakExchange,       // drop {1,4},{2,3},{3,4} from the family
};

SetFunction mutated_reference_function(ReferenceMutation mutation);
std::vector<Mask> mutated_reference_members(ReferenceMutation mutation);

// f(X) = g(U) - g(X) for weighted coverage g, which is supermodular,
// nonincreasing and 0 at U by construction.
struct CoverageSpec {
  int universe_size = 0;
  std::vector<std::vector<int>> covers;  // one 0-based item list per element
  std::vector<Rational> weights;         // one nonnegative weight per item
};

SetFunction coverage_instance(const CoverageSpec& spec);

// f(X) = sum_j min_{i in X} c(i,j) for nonempty X, with clients collocated
// at the sites (zero diagonal) so that f(U) = 0. The empty set is completed
// as f(empty) = sum_j max_i c(i,j), the smallest constant that keeps f
// nonincreasing at the top.
struct PMedianSpec {
  std::vector<std::vector<Rational>> costs;  // square, nonnegative, zero diagonal
};

SetFunction pmedian_instance(const PMedianSpec& spec);

// Modular f(X) = sum over x outside X of w_x, for nonnegative weights.
SetFunction modular_function(const std::vector<Rational>& weights);

enum class InstanceKind { kCoverage, kPMedian, kModular, kMixed };

const char* to_string(InstanceKind kind);
std::optional<InstanceKind> instance_kind_from_string(std::string_view name);

struct RandomInstance {
  SetFunction f;
  Comatroid c;
  std::string function_kind;  // "coverage", "pmedian", "modular"
  std::string matroid_kind;   // "uniform-dual", "partition-dual"
};

// Deterministic in (kind, n, seed). The function comes from the requested
// family (kMixed draws one per instance); the comatroid is the dual of a
// random uniform or partition matroid of rank < n. Outputs always pass
// both validators; a validator failure here is a construction bug and
// throws std::logic_error. Requires 2 <= n <= 8.
RandomInstance random_instance(InstanceKind kind, int n, std::uint64_t seed);

}  // namespace stingy

#endif  // STINGY_GEN_HPP_
