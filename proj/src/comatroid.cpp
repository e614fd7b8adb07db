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
#include <numeric>

namespace stingy {

DependenceFamily::DependenceFamily(GroundSet ground, const std::vector<Mask>& members)
    : ground_(ground), bitmap_(std::size_t{1} << ground.size(), false) {
  const Mask full = ground_.full_mask();
  for (Mask m : members) {
    if (m > full) {
      throw std::out_of_range("member mask " + std::to_string(m) +
                              " out of range for n = " + std::to_string(n()));
    }
    bitmap_[m] = true;
  }
  for (Mask m = 0; m <= full; ++m) {
    if (bitmap_[m]) members_.push_back(m);
  }
}

bool DependenceFamily::contains(Mask subset) const {
  if (subset > ground_.full_mask()) {
    throw std::out_of_range("subset mask " + std::to_string(subset) +
                            " out of range for n = " + std::to_string(n()));
  }
  return bitmap_[subset];
}

const char* to_string(ComatroidDefect defect) {
  switch (defect) {
    case ComatroidDefect::kMissingGroundSet:
      return "missing-ground-set";
    case ComatroidDefect::kContainsEmptySet:
      return "contains-empty-set";
    case ComatroidDefect::kUpwardClosure:
      return "upward-closure";
    case ComatroidDefect::kExchange:
      return "exchange";
  }
  return "unknown";
}

std::string ComatroidFailure::describe() const {
  std::string out = to_string(defect);
  switch (defect) {
    case ComatroidDefect::kMissingGroundSet:
      out += ": the ground set is not a member";
      break;
    case ComatroidDefect::kContainsEmptySet:
      out += ": the empty set is a member";
      break;
    case ComatroidDefect::kUpwardClosure:
      out += ": " + subset_to_string(witness->first) + " is a member but its superset " +
             subset_to_string(witness->second) + " is not";
      break;
    case ComatroidDefect::kExchange:
      out += ": no element of A\\B = " +
             subset_to_string(witness->first & ~witness->second) +
             " can leave A = " + subset_to_string(witness->first) +
             " (against B = " + subset_to_string(witness->second) + ")";
      break;
  }
  return out;
}

bool Comatroid::is_circuit(Mask subset) const {
  return std::find(circuits_.begin(), circuits_.end(), subset) != circuits_.end();
}

std::variant<Comatroid, ComatroidFailure> validate_comatroid(
    const GroundSet& ground, const std::vector<Mask>& members) {
  DependenceFamily family(ground, members);
  const Mask full = ground.full_mask();
  const int n = ground.size();

  if (!family.contains(full)) {
    return ComatroidFailure{ComatroidDefect::kMissingGroundSet, std::nullopt};
  }
  if (family.contains(0)) {
    return ComatroidFailure{ComatroidDefect::kContainsEmptySet, std::nullopt};
  }

  for (Mask m : family.members()) {
    for (int e = 1; e <= n; ++e) {
      if (subset_contains(m, e)) continue;
      const Mask up = m | element_bit(e);
      if (!family.contains(up)) {
        return ComatroidFailure{ComatroidDefect::kUpwardClosure, std::pair{m, up}};
      }
    }
  }

  for (Mask a : family.members()) {
    for (Mask b : family.members()) {
      if (subset_size(b) >= subset_size(a)) continue;
      bool found = false;
      for (Mask rest = a & ~b; rest != 0; rest &= rest - 1) {
        const Mask bit = rest & -rest;
        if (family.contains(a & ~bit)) {
          found = true;
          break;
        }
      }
      if (!found) {
        return ComatroidFailure{ComatroidDefect::kExchange, std::pair{a, b}};
      }
    }
  }

  // Upward closure holds here, so a member is minimal iff no single-element
  // removal stays a member.
  std::vector<Mask> circuits;
  for (Mask m : family.members()) {
    bool minimal = true;
    for (Mask rest = m; rest != 0; rest &= rest - 1) {
      const Mask bit = rest & -rest;
      if (family.contains(m & ~bit)) {
        minimal = false;
        break;
      }
    }
    if (minimal) circuits.push_back(m);
  }
  std::sort(circuits.begin(), circuits.end(), [](Mask a, Mask b) {
    const int ca = subset_size(a);
    const int cb = subset_size(b);
    return ca != cb ? ca < cb : a < b;
  });
  const int girth = subset_size(circuits.front());

  return Comatroid(std::move(family), std::move(circuits), girth);
}

Comatroid make_comatroid(const GroundSet& ground, const std::vector<Mask>& members) {
  auto result = validate_comatroid(ground, members);
  if (auto* failure = std::get_if<ComatroidFailure>(&result)) {
    throw std::invalid_argument("not a comatroid: " + failure->describe());
  }
  return std::get<Comatroid>(std::move(result));
}

std::vector<int> removable(const Comatroid& c, Mask subset) {
  if (!c.contains(subset)) {
    throw std::invalid_argument(subset_to_string(subset) +
                                " is not a member of the dependence family");
  }
  std::vector<int> out;
  for (int e : subset_elements(subset)) {
    if (c.contains(subset & ~element_bit(e))) out.push_back(e);
  }
  return out;
}

std::vector<int> exchange_witnesses(const Comatroid& c, Mask a, Mask b) {
  if (!c.contains(a) || !c.contains(b)) {
    throw std::invalid_argument("exchange witnesses need both sets in the family");
  }
  if (subset_size(b) > subset_size(a)) {
    throw std::invalid_argument("exchange witnesses need |B| <= |A|");
  }

  std::vector<int> witnesses;
  Mask current = a;
  const int needed = subset_size(a) - subset_size(b);
  for (int step = 0; step < needed; ++step) {
    bool advanced = false;
    for (int e : subset_elements(current & ~b)) {
      const Mask next = current & ~element_bit(e);
      if (c.contains(next)) {
        witnesses.push_back(e);
        current = next;
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      // Unreachable for a validated comatroid: the exchange axiom applies
      // to (current, B) as long as |current| > |B|.
      throw std::logic_error("exchange axiom violated between " +
                             subset_to_string(current) + " and " + subset_to_string(b));
    }
  }
  return witnesses;
}

bool matroid_independent(const MatroidSpec& spec, Mask subset) {
  if (const auto* uniform = std::get_if<UniformMatroid>(&spec.kind)) {
    return subset_size(subset) <= uniform->rank;
  }
  const auto& partition = std::get<PartitionMatroid>(spec.kind);
  for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
    Mask block_mask = 0;
    for (int e : partition.blocks[b]) block_mask |= element_bit(e);
    if (subset_size(subset & block_mask) > partition.capacities[b]) return false;
  }
  return true;
}

namespace {

void check_matroid_spec(const MatroidSpec& spec) {
  const int n = spec.ground.size();
  if (const auto* uniform = std::get_if<UniformMatroid>(&spec.kind)) {
    if (uniform->rank < 0 || uniform->rank > n) {
      throw std::invalid_argument("uniform rank " + std::to_string(uniform->rank) +
                                  " out of range 0.." + std::to_string(n));
    }
    return;
  }
  const auto& partition = std::get<PartitionMatroid>(spec.kind);
  if (partition.blocks.size() != partition.capacities.size()) {
    throw std::invalid_argument("partition matroid needs one capacity per block");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::size_t covered = 0;
  for (const auto& block : partition.blocks) {
    if (block.empty()) throw std::invalid_argument("partition blocks must be nonempty");
    for (int e : block) {
      if (!spec.ground.contains_label(e)) {
        throw std::invalid_argument("block element " + std::to_string(e) +
                                    " outside 1.." + std::to_string(n));
      }
      if (seen[e]) {
        throw std::invalid_argument("element " + std::to_string(e) +
                                    " appears in two blocks");
      }
      seen[e] = true;
      ++covered;
    }
  }
  if (covered != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("blocks must cover every element of 1.." +
                                std::to_string(n));
  }
  for (int cap : partition.capacities) {
    if (cap < 0) throw std::invalid_argument("capacities must be nonnegative");
  }
}

}  // namespace

int matroid_rank(const MatroidSpec& spec) {
  check_matroid_spec(spec);
  if (const auto* uniform = std::get_if<UniformMatroid>(&spec.kind)) {
    return uniform->rank;
  }
  const auto& partition = std::get<PartitionMatroid>(spec.kind);
  int rank = 0;
  for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
    rank += std::min<int>(partition.capacities[b],
                          static_cast<int>(partition.blocks[b].size()));
  }
  return rank;
}

Comatroid from_matroid_dual(const MatroidSpec& spec) {
  check_matroid_spec(spec);
  const int n = spec.ground.size();
  if (matroid_rank(spec) >= n) {
    throw std::invalid_argument(
        "matroid rank must be below n; a full-rank matroid's dual dependence "
        "family would contain the empty set");
  }

  const Mask full = spec.ground.full_mask();
  std::vector<Mask> members;
  for (Mask m = 0; m <= full; ++m) {
    if (matroid_independent(spec, full & ~m)) members.push_back(m);
  }

  auto result = validate_comatroid(spec.ground, members);
  if (std::holds_alternative<ComatroidFailure>(result)) {
    throw std::logic_error("matroid dual failed comatroid validation: " +
                           std::get<ComatroidFailure>(result).describe());
  }
  return std::get<Comatroid>(std::move(result));
}

}  // namespace stingy
