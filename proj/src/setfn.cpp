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

#include "stingy/setfn.hpp"

#include <string>

namespace stingy {

SetFunction::SetFunction(GroundSet ground, std::vector<Rational> values)
    : ground_(ground), values_(std::move(values)) {
  const std::size_t expected = std::size_t{1} << ground_.size();
  if (values_.size() != expected) {
    throw std::invalid_argument("value table must have 2^n = " +
                                std::to_string(expected) + " entries, got " +
                                std::to_string(values_.size()));
  }
}

const Rational& SetFunction::value(Mask subset) const {
  if (subset > ground_.full_mask()) {
    throw std::out_of_range("subset mask " + std::to_string(subset) +
                            " out of range for n = " + std::to_string(n()));
  }
  return values_[subset];
}

Rational marginal(const SetFunction& f, Mask subset, int element) {
  if (!f.ground().contains_label(element) || !subset_contains(subset, element)) {
    throw std::invalid_argument("element " + std::to_string(element) +
                                " is not in " + subset_to_string(subset));
  }
  return f.value(subset & ~element_bit(element)) - f.value(subset);
}

FunctionVerdict validate_function(const SetFunction& f) {
  FunctionVerdict verdict;
  const int n = f.n();
  const Mask full = f.ground().full_mask();

  verdict.normalized = true;
  for (Mask m = 0; m <= full; ++m) {
    if (f.value(m) < 0) {
      verdict.normalized = false;
      verdict.normalization_witness = m;
      break;
    }
  }
  if (verdict.normalized && f.value(full) != 0) {
    verdict.normalized = false;
    verdict.normalization_witness = full;
  }

  // Nonincreasing iff every single-element removal marginal is >= 0.
  verdict.nonincreasing = true;
  for (Mask m = 1; m <= full && verdict.nonincreasing; ++m) {
    for (int e = 1; e <= n; ++e) {
      if (!subset_contains(m, e)) continue;
      if (f.value(m & ~element_bit(e)) < f.value(m)) {
        verdict.nonincreasing = false;
        verdict.monotonicity_witness = {m & ~element_bit(e), m};
        break;
      }
    }
  }

  // Supermodularity via the adjacent-pair condition: for all S and distinct
  // x, y outside S, f(S+x) - f(S) <= f(S+x+y) - f(S+y). This is equivalent
  // to the quantified form over all X subset-of Y (chain the one-element
  // steps from X up to Y); the test suite cross-checks the equivalence
  // against the full enumeration.
  verdict.supermodular = true;
  for (Mask s = 0; s <= full && verdict.supermodular; ++s) {
    for (int x = 1; x <= n && verdict.supermodular; ++x) {
      if (subset_contains(s, x)) continue;
      const Mask sx = s | element_bit(x);
      for (int y = 1; y <= n; ++y) {
        if (y == x || subset_contains(s, y)) continue;
        const Mask sy = s | element_bit(y);
        if (f.value(sx) - f.value(s) > f.value(sx | sy) - f.value(sy)) {
          verdict.supermodular = false;
          verdict.supermodularity_witness = {s, sy, x};
          break;
        }
      }
    }
  }

  return verdict;
}

SteepnessReport steepness(const SetFunction& f) {
  const int n = f.n();
  const Mask full = f.ground().full_mask();
  const Rational& at_empty = f.value(0);
  const Rational& at_full = f.value(full);

  std::optional<Rational> best;
  int best_element = 0;
  for (int e = 1; e <= n; ++e) {
    const Rational& single = f.value(element_bit(e));
    if (!(single < at_empty)) continue;
    const Rational last = at_empty - single;                      // d_e({e})
    const Rational first = f.value(full & ~element_bit(e)) - at_full;  // d_e(U)
    Rational candidate = (last - first) / last;
    if (!best || candidate > *best) {
      best = std::move(candidate);
      best_element = e;
    }
  }
  if (!best) throw NoSteepElementError{};
  if (*best < 0 || *best > 1) {
    throw std::domain_error(
        "steepness " + format_rational(*best) +
        " outside [0,1]: function is not nonincreasing supermodular");
  }

  SteepnessReport report;
  report.s = *best;
  report.t = (*best == 1) ? ExtRational::infinity()
                          : ExtRational(*best / (1 - *best));
  report.argmax_element = best_element;
  return report;
}

ExtRational steepness_bound(const Rational& s, int q) {
  if (q < 1) {
    throw std::invalid_argument("steepness bound needs q >= 1, got " + std::to_string(q));
  }
  if (s < 0 || s > 1) {
    throw std::domain_error("steepness must lie in [0,1], got " + format_rational(s));
  }
  if (s == 0) return Rational(1);  // limit of (1/t)((1+t/q)^q - 1) as t -> 0
  if (s == 1) return ExtRational::infinity();
  const Rational t = s / (1 - s);
  const Rational grown = pow_rational(Rational(1 + t / q), static_cast<unsigned>(q));
  return Rational((grown - 1) / t);
}

}  // namespace stingy
