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

#ifndef STINGY_SETFN_HPP_
#define STINGY_SETFN_HPP_

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "stingy/rational.hpp"
#include "stingy/subset.hpp"

namespace stingy {

// A set function f : 2^U -> Q stored as an exact value table indexed by
// subset mask. Immutable after construction; all queries are pure.
//
// Construction only enforces the table shape. Whether f is nonincreasing,
// supermodular and normalized is a property reported by
// validate_function(), so that broken functions can be represented and
// diagnosed.
class SetFunction {
 public:
  SetFunction(GroundSet ground, std::vector<Rational> values);

  const GroundSet& ground() const { return ground_; }
  int n() const { return ground_.size(); }

  // Stored value f(X); throws std::out_of_range for masks beyond 2^n - 1.
  const Rational& value(Mask subset) const;

  const std::vector<Rational>& values() const { return values_; }

  friend bool operator==(const SetFunction& a, const SetFunction& b) {
    return a.ground_ == b.ground_ && a.values_ == b.values_;
  }

 private:
  GroundSet ground_;
  std::vector<Rational> values_;
};

// Marginal increment of removing x from X: d_x(X) = f(X \ {x}) - f(X).
// Throws std::invalid_argument when x is not an element of X.
Rational marginal(const SetFunction& f, Mask subset, int element);

struct FunctionVerdict {
  bool nonincreasing = false;
  bool supermodular = false;
  bool normalized = false;

  // A pair (A, B) with A a one-element-removal of B and f(A) < f(B).
  std::optional<std::pair<Mask, Mask>> monotonicity_witness;

  // Sets X subset-of Y and x outside Y with
  // f(X u {x}) - f(X) > f(Y u {x}) - f(Y).
  struct SupermodularityWitness {
    Mask smaller = 0;
    Mask larger = 0;
    int element = 0;
  };
  std::optional<SupermodularityWitness> supermodularity_witness;

  // Mask of a negative entry, or the full mask when f(U) != 0.
  std::optional<Mask> normalization_witness;

  bool ok() const { return nonincreasing && supermodular && normalized; }
};

// Exhaustive validation of the three structural properties. Failures are
// verdicts with concrete witnesses, never exceptions.
FunctionVerdict validate_function(const SetFunction& f);

// Thrown by steepness() when no element satisfies f({x}) < f(empty).
struct NoSteepElementError : std::runtime_error {
  NoSteepElementError()
      : std::runtime_error("steepness undefined: no element x has f({x}) < f(empty)") {}
};

struct SteepnessReport {
  Rational s;           // in [0,1] for valid functions
  ExtRational t;        // s/(1-s), infinite iff s = 1
  int argmax_element;   // smallest label attaining the max
};

// Steepness of f:
//   s = max over {x : f({x}) < f(empty)} of
//       [(f(empty)-f({x})) - (f(U\{x})-f(U))] / (f(empty)-f({x})).
// Throws NoSteepElementError when the max ranges over nothing, and
// std::domain_error when the computed s falls outside [0,1] (which means
// f is not a nonincreasing supermodular function).
SteepnessReport steepness(const SetFunction& f);

// The steepness ratio bound (1/t)((1 + t/q)^q - 1) with t = s/(1-s),
// evaluated exactly. Returns 1 at s = 0 (the analytic limit as t -> 0)
// and infinity at s = 1. Throws std::invalid_argument for q < 1 and
// std::domain_error for s outside [0,1].
ExtRational steepness_bound(const Rational& s, int q);

}  // namespace stingy

#endif  // STINGY_SETFN_HPP_
