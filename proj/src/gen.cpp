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

#include "stingy/gen.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "stingy/rng.hpp"

namespace stingy {

namespace {

// f values of the reference instance, indexed by mask (element i <-> bit i-1).
const int kReferenceValues[16] = {6, 4, 5, 3, 4, 2, 3, 1, 4, 2, 3, 1, 2, 1, 1, 0};

std::vector<Rational> reference_values() {
  std::vector<Rational> values;
  values.reserve(16);
  for (int v : kReferenceValues) values.emplace_back(v);
  return values;
}

}  // namespace

SetFunction reference_function() { return SetFunction(GroundSet(4), reference_values()); }

std::vector<Mask> reference_members() {
  // U, the four 3-subsets, and {1,2},{2,3},{1,4},{3,4}.
  return {0x3, 0x6, 0x7, 0x9, 0xB, 0xC, 0xD, 0xE, 0xF};
}

std::pair<SetFunction, Comatroid> reference_instance() {
  return {reference_function(), make_comatroid(GroundSet(4), reference_members())};
}

SetFunction mutated_reference_function(ReferenceMutation mutation) {
  std::vector<Rational> values = reference_values();
  switch (mutation) {
    case ReferenceMutation::kBreakMonotonicity:
      values[element_bit(1)] = 7;  // f({1}) > f(empty)
      return SetFunction(GroundSet(4), std::move(values));
    case ReferenceMutation::kBreakNormalization:
      values[0xF] = 1;  // f(U) != 0
      return SetFunction(GroundSet(4), std::move(values));
    default:
      throw std::invalid_argument("mutation does not target the set function");
  }
}

std::vector<Mask> mutated_reference_members(ReferenceMutation mutation) {
  std::vector<Mask> members = reference_members();
  switch (mutation) {
    case ReferenceMutation::kBreakUpwardClosure:
      // {1,2} stays while its superset {1,2,3} disappears.
      std::erase(members, Mask{0x7});
      return members;
    case ReferenceMutation::kBreakExchange: {
      // Keep U, the 3-subsets and {1,2} only: {1,3,4} can shed nothing
      // against {1,2}.
      std::erase(members, Mask{0x6});
      std::erase(members, Mask{0x9});
      std::erase(members, Mask{0xC});
      return members;
    }
    default:
      throw std::invalid_argument("mutation does not target the dependence family");
  }
}

SetFunction coverage_instance(const CoverageSpec& spec) {
  const int n = static_cast<int>(spec.covers.size());
  GroundSet ground(n);
  if (spec.universe_size < 0) {
    throw std::invalid_argument("universe size must be nonnegative");
  }
  if (spec.weights.size() != static_cast<std::size_t>(spec.universe_size)) {
    throw std::invalid_argument("need exactly one weight per universe item");
  }
  for (const Rational& w : spec.weights) {
    if (w < 0) throw std::invalid_argument("item weights must be nonnegative");
  }

  // item_mask[j] = the elements covering item j.
  std::vector<Mask> item_mask(spec.universe_size, 0);
  for (int e = 1; e <= n; ++e) {
    for (int item : spec.covers[e - 1]) {
      if (item < 0 || item >= spec.universe_size) {
        throw std::invalid_argument("covered item index " + std::to_string(item) +
                                    " outside 0.." + std::to_string(spec.universe_size - 1));
      }
      item_mask[item] |= element_bit(e);
    }
  }
  for (int j = 0; j < spec.universe_size; ++j) {
    if (item_mask[j] == 0 && spec.weights[j] > 0) {
      throw std::invalid_argument("item " + std::to_string(j) +
                                  " has positive weight but no element covers it");
    }
  }

  const Mask full = ground.full_mask();
  std::vector<Rational> values(std::size_t{1} << n);
  Rational total = 0;
  for (int j = 0; j < spec.universe_size; ++j) total += spec.weights[j];
  for (Mask m = 0; m <= full; ++m) {
    Rational covered = 0;
    for (int j = 0; j < spec.universe_size; ++j) {
      if (item_mask[j] & m) covered += spec.weights[j];
    }
    values[m] = total - covered;  // g(U) - g(X) with every positive item covered
  }
  return SetFunction(ground, std::move(values));
}

SetFunction pmedian_instance(const PMedianSpec& spec) {
  const int n = static_cast<int>(spec.costs.size());
  GroundSet ground(n);
  for (int i = 0; i < n; ++i) {
    if (spec.costs[i].size() != static_cast<std::size_t>(n)) {
      throw std::invalid_argument("cost matrix must be square");
    }
    if (spec.costs[i][i] != 0) {
      throw std::invalid_argument("cost diagonal must be zero (client " +
                                  std::to_string(i + 1) + " sits at site " +
                                  std::to_string(i + 1) + ")");
    }
    for (int j = 0; j < n; ++j) {
      if (spec.costs[i][j] < 0) {
        throw std::invalid_argument("costs must be nonnegative");
      }
    }
  }

  const Mask full = ground.full_mask();
  std::vector<Rational> values(std::size_t{1} << n);
  for (Mask m = 0; m <= full; ++m) {
    Rational sum = 0;
    for (int j = 0; j < n; ++j) {
      std::optional<Rational> best;
      for (int i = 0; i < n; ++i) {
        if (m != 0 && !subset_contains(m, i + 1)) continue;
        const Rational& cost = spec.costs[i][j];
        if (m == 0) {
          // Empty-set completion: the worst site per client.
          if (!best || cost > *best) best = cost;
        } else if (!best || cost < *best) {
          best = cost;
        }
      }
      sum += *best;
    }
    values[m] = std::move(sum);
  }
  return SetFunction(ground, std::move(values));
}

SetFunction modular_function(const std::vector<Rational>& weights) {
  const int n = static_cast<int>(weights.size());
  GroundSet ground(n);
  for (const Rational& w : weights) {
    if (w < 0) throw std::invalid_argument("weights must be nonnegative");
  }
  const Mask full = ground.full_mask();
  std::vector<Rational> values(std::size_t{1} << n);
  for (Mask m = 0; m <= full; ++m) {
    Rational sum = 0;
    for (int e = 1; e <= n; ++e) {
      if (!subset_contains(m, e)) sum += weights[e - 1];
    }
    values[m] = std::move(sum);
  }
  return SetFunction(ground, std::move(values));
}

const char* to_string(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::kCoverage:
      return "coverage";
    case InstanceKind::kPMedian:
      return "pmedian";
    case InstanceKind::kModular:
      return "modular";
    case InstanceKind::kMixed:
      return "mixed";
  }
  return "unknown";
}

std::optional<InstanceKind> instance_kind_from_string(std::string_view name) {
  if (name == "coverage") return InstanceKind::kCoverage;
  if (name == "pmedian") return InstanceKind::kPMedian;
  if (name == "modular") return InstanceKind::kModular;
  if (name == "mixed") return InstanceKind::kMixed;
  return std::nullopt;
}

namespace {

Comatroid random_comatroid(int n, SplitMix64& rng, std::string& kind_label) {
  const GroundSet ground(n);
  if (rng.coin()) {
    kind_label = "uniform-dual";
    const int rank = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    return from_matroid_dual(MatroidSpec{ground, UniformMatroid{rank}});
  }

  kind_label = "partition-dual";
  const int block_count = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
  std::vector<std::vector<int>> blocks(block_count);
  for (int e = 1; e <= n; ++e) {
    blocks[rng.below(static_cast<std::uint64_t>(block_count))].push_back(e);
  }
  std::erase_if(blocks, [](const std::vector<int>& b) { return b.empty(); });

  std::vector<int> capacities;
  int rank = 0;
  for (const auto& block : blocks) {
    const int cap = static_cast<int>(rng.below(block.size() + 1));
    capacities.push_back(cap);
    rank += cap;
  }
  if (rank >= n) {
    // All capacities are full; shave the first so the dual excludes the
    // empty set.
    capacities.front() -= 1;
  }
  return from_matroid_dual(
      MatroidSpec{ground, PartitionMatroid{std::move(blocks), std::move(capacities)}});
}

SetFunction random_function(InstanceKind kind, int n, SplitMix64& rng,
                            std::string& kind_label) {
  InstanceKind effective = kind;
  if (kind == InstanceKind::kMixed) {
    switch (rng.below(3)) {
      case 0:
        effective = InstanceKind::kCoverage;
        break;
      case 1:
        effective = InstanceKind::kPMedian;
        break;
      default:
        effective = InstanceKind::kModular;
        break;
    }
  }
  kind_label = to_string(effective);

  switch (effective) {
    case InstanceKind::kCoverage: {
      CoverageSpec spec;
      spec.universe_size = 1 + static_cast<int>(rng.below(10));
      spec.covers.resize(n);
      std::vector<bool> covered(spec.universe_size, false);
      for (int e = 0; e < n; ++e) {
        for (int j = 0; j < spec.universe_size; ++j) {
          if (rng.coin()) {
            spec.covers[e].push_back(j);
            covered[j] = true;
          }
        }
      }
      for (int j = 0; j < spec.universe_size; ++j) {
        spec.weights.emplace_back(covered[j] ? static_cast<int>(rng.below(10)) : 0);
      }
      return coverage_instance(spec);
    }
    case InstanceKind::kPMedian: {
      PMedianSpec spec;
      spec.costs.assign(n, std::vector<Rational>(n, Rational(0)));
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (i != j) spec.costs[i][j] = static_cast<int>(rng.below(10));
        }
      }
      return pmedian_instance(spec);
    }
    case InstanceKind::kModular: {
      std::vector<Rational> weights;
      bool any_positive = false;
      for (int e = 0; e < n; ++e) {
        const int w = static_cast<int>(rng.below(10));
        any_positive = any_positive || w > 0;
        weights.emplace_back(w);
      }
      if (!any_positive) weights.front() = 1;  // keep steepness defined
      return modular_function(weights);
    }
    case InstanceKind::kMixed:
      break;
  }
  throw std::logic_error("unreachable instance kind");
}

}  // namespace

RandomInstance random_instance(InstanceKind kind, int n, std::uint64_t seed) {
  if (n < 2 || n > 8) {
    throw std::invalid_argument("random instances use 2 <= n <= 8, got " +
                                std::to_string(n));
  }
  SplitMix64 rng(seed);
  std::string matroid_kind;
  Comatroid c = random_comatroid(n, rng, matroid_kind);
  std::string function_kind;
  SetFunction f = random_function(kind, n, rng, function_kind);

  if (!validate_function(f).ok()) {
    throw std::logic_error("generator bug: random " + function_kind +
                           " function failed validation");
  }
  return RandomInstance{std::move(f), std::move(c), std::move(function_kind),
                        std::move(matroid_kind)};
}

}  // namespace stingy
