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

#include "stingy/comatroid.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"
#include "stingy/gen.hpp"
#include "stingy/rng.hpp"
#include "test_util.hpp"

using namespace stingy;
using test::mask_of;

namespace {

std::vector<Mask> all_subsets_of_size_at_least(int n, int k) {
  std::vector<Mask> members;
  const Mask full = GroundSet(n).full_mask();
  for (Mask m = 0; m <= full; ++m) {
    if (subset_size(m) >= k) members.push_back(m);
  }
  return members;
}

const ComatroidFailure& expect_failure(
    const std::variant<Comatroid, ComatroidFailure>& result) {
  REQUIRE(std::holds_alternative<ComatroidFailure>(result));
  return std::get<ComatroidFailure>(result);
}

}  // namespace

TEST_CASE("validation accepts the reference family") {
  const auto result = validate_comatroid(GroundSet(4), reference_members());
  REQUIRE(std::holds_alternative<Comatroid>(result));
  const Comatroid& c = std::get<Comatroid>(result);
  CHECK(c.girth() == 2);
  CHECK(c.circuits() == std::vector<Mask>{mask_of({1, 2}), mask_of({2, 3}),
                                          mask_of({1, 4}), mask_of({3, 4})});
}

TEST_CASE("validation failure categories and witnesses") {
  SUBCASE("ground set missing") {
    const auto failure = expect_failure(
        validate_comatroid(GroundSet(3), {mask_of({1}), mask_of({1, 2})}));
    CHECK(failure.defect == ComatroidDefect::kMissingGroundSet);
  }

  SUBCASE("empty set present") {
    const auto failure = expect_failure(
        validate_comatroid(GroundSet(2), {0, mask_of({1}), mask_of({2}), mask_of({1, 2})}));
    CHECK(failure.defect == ComatroidDefect::kContainsEmptySet);
  }

  SUBCASE("upward closure") {
    const auto failure = expect_failure(
        validate_comatroid(GroundSet(4), {mask_of({1, 2, 3, 4}), mask_of({1, 2})}));
    CHECK(failure.defect == ComatroidDefect::kUpwardClosure);
    CHECK(failure.witness == std::pair{mask_of({1, 2}), mask_of({1, 2, 3})});
  }

  SUBCASE("exchange") {
    const auto failure = expect_failure(validate_comatroid(
        GroundSet(4), mutated_reference_members(ReferenceMutation::kBreakExchange)));
    CHECK(failure.defect == ComatroidDefect::kExchange);
    // {1,3,4} cannot shed an element against {1,2}: neither {1,3} nor {1,4}
    // remains in the family.
    CHECK(failure.witness == std::pair{mask_of({1, 3, 4}), mask_of({1, 2})});
  }
}

TEST_CASE("circuit extraction") {
  SUBCASE("all nonempty subsets give the singletons") {
    const Comatroid c = make_comatroid(GroundSet(3), all_subsets_of_size_at_least(3, 1));
    CHECK(c.circuits() == std::vector<Mask>{mask_of({1}), mask_of({2}), mask_of({3})});
    CHECK(c.girth() == 1);
  }

  SUBCASE("sets of size at least two give the pairs") {
    const Comatroid c = make_comatroid(GroundSet(4), all_subsets_of_size_at_least(4, 2));
    CHECK(c.circuits().size() == 6);
    CHECK(c.girth() == 2);
    for (Mask circuit : c.circuits()) CHECK(subset_size(circuit) == 2);
  }

  SUBCASE("agrees with the subset-enumeration oracle") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
      const int n = 3 + static_cast<int>(rng.below(4));
      const RandomInstance inst = random_instance(InstanceKind::kModular, n, rng.next());
      CHECK(inst.c.circuits() == test::brute_circuits(inst.c.family()));
    }
  }
}

TEST_CASE("removable elements") {
  const Comatroid c = reference_instance().second;
  CHECK(removable(c, mask_of({1, 2, 3})) == std::vector<int>{1, 3});
  CHECK(removable(c, mask_of({1, 2, 3, 4})) == std::vector<int>{1, 2, 3, 4});
  CHECK(removable(c, mask_of({1, 2})).empty());  // circuits are stuck
  CHECK_THROWS_AS(removable(c, mask_of({1, 3})), std::invalid_argument);
}

TEST_CASE("exchange witnesses") {
  const Comatroid c = reference_instance().second;

  SUBCASE("one element short") {
    // Only element 1 works: {2,3} is a member while {1,3} is not.
    CHECK(exchange_witnesses(c, mask_of({1, 2, 3}), mask_of({3, 4})) ==
          std::vector<int>{1});
  }

  SUBCASE("two elements short") {
    CHECK(exchange_witnesses(c, mask_of({1, 2, 3, 4}), mask_of({3, 4})) ==
          std::vector<int>{1, 2});
  }

  SUBCASE("equal sets need nothing") {
    CHECK(exchange_witnesses(c, mask_of({1, 2}), mask_of({1, 2})).empty());
  }

  SUBCASE("precondition failures") {
    CHECK_THROWS_AS(exchange_witnesses(c, mask_of({1, 2}), mask_of({1, 2, 3})),
                    std::invalid_argument);
    CHECK_THROWS_AS(exchange_witnesses(c, mask_of({1, 3}), mask_of({1, 2})),
                    std::invalid_argument);
  }

  SUBCASE("contract holds for every member pair") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
      const RandomInstance inst = random_instance(InstanceKind::kModular, 5, rng.next());
      for (Mask a : inst.c.family().members()) {
        for (Mask b : inst.c.family().members()) {
          if (subset_size(b) > subset_size(a)) continue;
          const std::vector<int> witnesses = exchange_witnesses(inst.c, a, b);
          CHECK(witnesses.size() ==
                static_cast<std::size_t>(subset_size(a) - subset_size(b)));
          Mask current = a;
          std::set<int> seen;
          for (int e : witnesses) {
            CHECK(subset_contains(a & ~b, e));
            CHECK(seen.insert(e).second);  // distinct
            current &= ~element_bit(e);
            CHECK(inst.c.contains(current));  // every prefix removal stays in D
          }
        }
      }
    }
  }
}

TEST_CASE("matroid dual construction") {
  SUBCASE("the reference family is a partition dual") {
    const Comatroid dual = from_matroid_dual(
        MatroidSpec{GroundSet(4), PartitionMatroid{{{1, 3}, {2, 4}}, {1, 1}}});
    const Comatroid reference = reference_instance().second;
    CHECK(dual.family().members() == reference.family().members());
    CHECK(dual.circuits() == reference.circuits());
    CHECK(dual.girth() == 2);
  }

  SUBCASE("rank zero keeps only the ground set") {
    const Comatroid c = from_matroid_dual(MatroidSpec{GroundSet(3), UniformMatroid{0}});
    CHECK(c.family().members() == std::vector<Mask>{0x7});
    CHECK(c.circuits() == std::vector<Mask>{0x7});
    CHECK(c.girth() == 3);
  }

  SUBCASE("uniform rank two on four elements") {
    const Comatroid c = from_matroid_dual(MatroidSpec{GroundSet(4), UniformMatroid{2}});
    CHECK(c.family().members() == all_subsets_of_size_at_least(4, 2));
    CHECK(c.girth() == 2);
    CHECK(c.circuits().size() == 6);
  }

  SUBCASE("full-rank matroids are rejected") {
    CHECK_THROWS_AS(from_matroid_dual(MatroidSpec{GroundSet(3), UniformMatroid{3}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        from_matroid_dual(MatroidSpec{GroundSet(2), PartitionMatroid{{{1}, {2}}, {1, 1}}}),
        std::invalid_argument);
  }

  SUBCASE("malformed specs are rejected") {
    CHECK_THROWS_AS(from_matroid_dual(MatroidSpec{GroundSet(3), UniformMatroid{-1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        from_matroid_dual(MatroidSpec{GroundSet(3), PartitionMatroid{{{1, 2}}, {1}}}),
        std::invalid_argument);  // element 3 uncovered
    CHECK_THROWS_AS(
        from_matroid_dual(
            MatroidSpec{GroundSet(3), PartitionMatroid{{{1, 2}, {2, 3}}, {1, 1}}}),
        std::invalid_argument);  // element 2 twice
    CHECK_THROWS_AS(
        from_matroid_dual(
            MatroidSpec{GroundSet(3), PartitionMatroid{{{1, 2, 3}}, {-1}}}),
        std::invalid_argument);
  }

  SUBCASE("duals validate for every uniform rank") {
    for (int n = 2; n <= 8; ++n) {
      for (int rank = 0; rank < n; ++rank) {
        const Comatroid c = from_matroid_dual(MatroidSpec{GroundSet(n), UniformMatroid{rank}});
        CHECK(c.girth() == n - rank);
      }
    }
  }
}

TEST_CASE("structural properties on the random corpus") {
  SplitMix64 rng(20261);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(6));
    const RandomInstance inst = random_instance(InstanceKind::kMixed, n, rng.next());
    const Comatroid& c = inst.c;

    // Circuits are an equicardinal antichain and every member contains one.
    for (Mask circuit : c.circuits()) CHECK(subset_size(circuit) == c.girth());
    for (Mask a : c.circuits()) {
      for (Mask b : c.circuits()) {
        if (a != b) CHECK((a & b) != a);
      }
    }
    for (Mask member : c.family().members()) {
      bool contains_circuit = false;
      for (Mask circuit : c.circuits()) {
        if ((member & circuit) == circuit) {
          contains_circuit = true;
          break;
        }
      }
      CHECK(contains_circuit);
    }

    // Any member above the girth can shed something.
    for (Mask member : c.family().members()) {
      if (subset_size(member) > c.girth()) CHECK_FALSE(removable(c, member).empty());
    }

    // Complement duality: the complements form a matroid's independent sets.
    CHECK(test::complement_family_is_matroid(c.family()));
  }
}
