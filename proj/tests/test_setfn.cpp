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

#include <vector>

#include "doctest.h"
#include "stingy/gen.hpp"
#include "stingy/rng.hpp"
#include "test_util.hpp"

using namespace stingy;
using test::mask_of;

namespace {

SetFunction zero_function(int n) {
  return SetFunction(GroundSet(n), std::vector<Rational>(std::size_t{1} << n, Rational(0)));
}

SetFunction random_table(int n, SplitMix64& rng) {
  std::vector<Rational> values;
  for (std::size_t i = 0; i < (std::size_t{1} << n); ++i) {
    values.emplace_back(static_cast<int>(rng.below(12)));
  }
  return SetFunction(GroundSet(n), std::move(values));
}

}  // namespace

TEST_CASE("value lookup") {
  const SetFunction f = reference_function();
  CHECK(f.value(mask_of({1, 2, 3})) == Rational(1));
  CHECK(f.value(f.ground().full_mask()) == Rational(0));
  CHECK(f.value(0) == Rational(6));

  CHECK(zero_function(3).value(mask_of({1, 3})) == Rational(0));

  CHECK_THROWS_AS(f.value(16), std::out_of_range);
  CHECK_THROWS_AS(SetFunction(GroundSet(4), std::vector<Rational>(15)),
                  std::invalid_argument);
}

TEST_CASE("removal marginals") {
  const SetFunction f = reference_function();
  CHECK(marginal(f, mask_of({1, 2, 3}), 1) == Rational(2));
  CHECK(marginal(f, mask_of({1, 2, 3}), 2) == Rational(1));
  CHECK(marginal(f, f.ground().full_mask(), 4) == Rational(1));

  CHECK_THROWS_AS(marginal(f, mask_of({1, 2}), 3), std::invalid_argument);
  CHECK_THROWS_AS(marginal(f, mask_of({1, 2}), 9), std::invalid_argument);
}

TEST_CASE("validation verdicts") {
  SUBCASE("reference function passes everything") {
    const FunctionVerdict verdict = validate_function(reference_function());
    CHECK(verdict.nonincreasing);
    CHECK(verdict.supermodular);
    CHECK(verdict.normalized);
    CHECK(verdict.ok());
  }

  SUBCASE("monotonicity break is caught with its witness") {
    const FunctionVerdict verdict =
        validate_function(mutated_reference_function(ReferenceMutation::kBreakMonotonicity));
    CHECK_FALSE(verdict.nonincreasing);
    REQUIRE(verdict.monotonicity_witness.has_value());
    CHECK(verdict.monotonicity_witness->first == 0);           // empty set
    CHECK(verdict.monotonicity_witness->second == mask_of({1}));
  }

  SUBCASE("normalization break is caught") {
    const FunctionVerdict verdict =
        validate_function(mutated_reference_function(ReferenceMutation::kBreakNormalization));
    CHECK_FALSE(verdict.normalized);
    CHECK(verdict.normalization_witness == Mask{0xF});
    CHECK(verdict.nonincreasing);  // f(U)=1 still below the rest
  }

  SUBCASE("negative values break normalization") {
    std::vector<Rational> values(8, Rational(0));
    values[mask_of({2})] = Rational(-1);
    const FunctionVerdict verdict = validate_function(SetFunction(GroundSet(3), values));
    CHECK_FALSE(verdict.normalized);
    CHECK(verdict.normalization_witness == mask_of({2}));
  }
}

TEST_CASE("validator supermodularity check agrees with the full enumeration") {
  // Adjacent-pair condition vs. all pairs X subset-of Y: equivalent, and the
  // random tables exercise both verdicts.
  SplitMix64 rng(20260810);
  int supermodular_seen = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(3));
    const SetFunction f = random_table(n, rng);
    const bool brute = test::brute_supermodular(f);
    CHECK(validate_function(f).supermodular == brute);
    if (brute) ++supermodular_seen;
  }
  CHECK(validate_function(reference_function()).supermodular ==
        test::brute_supermodular(reference_function()));

  // Structured generators must land on the supermodular side.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const RandomInstance inst = random_instance(InstanceKind::kMixed, 5, seed);
    CHECK(test::brute_supermodular(inst.f));
  }
  CHECK(supermodular_seen < 60);  // random tables do hit the negative side
}

TEST_CASE("nonincreasing iff all removal marginals nonnegative") {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(3));
    const SetFunction f = random_table(n, rng);
    bool all_nonneg = true;
    for (Mask m = 1; m <= f.ground().full_mask() && all_nonneg; ++m) {
      for (int e : subset_elements(m)) {
        if (marginal(f, m, e) < 0) {
          all_nonneg = false;
          break;
        }
      }
    }
    CHECK(validate_function(f).nonincreasing == all_nonneg);
  }
}

TEST_CASE("removal increments shrink on larger sets for valid functions") {
  auto check_removal_form = [](const SetFunction& f) {
    const Mask full = f.ground().full_mask();
    for (Mask b = 1; b <= full; ++b) {
      Mask a = b;
      for (;;) {  // all submasks a of b
        if (a != 0) {
          for (int e : subset_elements(a)) {
            CHECK(marginal(f, a, e) >= marginal(f, b, e));
          }
        }
        if (a == 0) break;
        a = (a - 1) & b;
      }
    }
  };
  check_removal_form(reference_function());
  for (std::uint64_t seed = 100; seed < 106; ++seed) {
    check_removal_form(random_instance(InstanceKind::kMixed, 6, seed).f);
  }
}

TEST_CASE("steepness") {
  SUBCASE("reference function") {
    const SteepnessReport report = steepness(reference_function());
    CHECK(report.s == Rational(1, 2));
    CHECK(report.t == ExtRational(Rational(1)));
    CHECK(report.argmax_element == 1);  // elements 1,3,4 tie at 1/2
  }

  SUBCASE("modular functions are flat") {
    const SetFunction f = modular_function({Rational(2), Rational(5), Rational(1)});
    const SteepnessReport report = steepness(f);
    CHECK(report.s == Rational(0));
    CHECK(report.t == ExtRational(Rational(0)));
  }

  SUBCASE("no steep element") {
    CHECK_THROWS_AS(steepness(zero_function(3)), NoSteepElementError);
  }

  SUBCASE("scale invariance") {
    const SetFunction f = reference_function();
    for (const Rational& c : {Rational(2), Rational(1, 3), Rational(7, 5)}) {
      std::vector<Rational> scaled;
      for (const Rational& v : f.values()) scaled.push_back(Rational(v * c));
      const SteepnessReport report = steepness(SetFunction(f.ground(), scaled));
      CHECK(report.s == Rational(1, 2));
      CHECK(report.argmax_element == 1);
    }
  }
}

TEST_CASE("steepness ratio bound") {
  CHECK(steepness_bound(Rational(1, 2), 2) == ExtRational(Rational(5, 4)));
  CHECK(steepness_bound(Rational(0), 1) == ExtRational(Rational(1)));
  CHECK(steepness_bound(Rational(0), 7) == ExtRational(Rational(1)));
  CHECK(steepness_bound(Rational(1, 2), 3) == ExtRational(Rational(37, 27)));
  CHECK(steepness_bound(Rational(1), 4).is_infinite());

  CHECK_THROWS_AS(steepness_bound(Rational(1, 2), 0), std::invalid_argument);
  CHECK_THROWS_AS(steepness_bound(Rational(3, 2), 2), std::domain_error);
  CHECK_THROWS_AS(steepness_bound(Rational(-1, 2), 2), std::domain_error);

  SUBCASE("at least 1 and nondecreasing in s") {
    for (int q = 1; q <= 6; ++q) {
      ExtRational previous = Rational(0);
      for (int k = 0; k <= 20; ++k) {
        const ExtRational bound = steepness_bound(Rational(k, 20), q);
        CHECK(bound >= ExtRational(Rational(1)));
        CHECK(bound >= previous);
        previous = bound;
      }
    }
  }
}
