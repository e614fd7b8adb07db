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

#ifndef STINGY_COMATROID_HPP_
#define STINGY_COMATROID_HPP_

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "stingy/subset.hpp"

namespace stingy {

// The dependence family D of a hereditary system (U, D): a set of subset
// masks with O(1) membership. Construction deduplicates and range-checks
// masks; the comatroid axioms are checked by validate_comatroid().
class DependenceFamily {
 public:
  DependenceFamily(GroundSet ground, const std::vector<Mask>& members);

  const GroundSet& ground() const { return ground_; }
  int n() const { return ground_.size(); }

  bool contains(Mask subset) const;

  // Ascending by mask.
  const std::vector<Mask>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  friend bool operator==(const DependenceFamily& a, const DependenceFamily& b) {
    return a.ground_ == b.ground_ && a.members_ == b.members_;
  }

 private:
  GroundSet ground_;
  std::vector<bool> bitmap_;
  std::vector<Mask> members_;
};

enum class ComatroidDefect {
  kMissingGroundSet,  // U itself is not a member
  kContainsEmptySet,  // the empty set is a member
  kUpwardClosure,     // witness: (member, missing superset)
  kExchange,          // witness: (A, B) in D, |B| < |A|, no removable x in A\B
};

const char* to_string(ComatroidDefect defect);

struct ComatroidFailure {
  ComatroidDefect defect;
  std::optional<std::pair<Mask, Mask>> witness;

  std::string describe() const;
};

// A validated comatroid: an upward-closed dependence family (with U in and
// the empty set out) satisfying single-step exchange: for all A, B in D
// with |B| < |A| there is x in A\B with A\{x} in D. Circuits (the
// inclusion-minimal members) and the girth are computed at validation.
// Instances exist only through validate_comatroid()/from_matroid_dual(),
// so every Comatroid in flight satisfies the axioms.
class Comatroid {
 public:
  const DependenceFamily& family() const { return family_; }
  const GroundSet& ground() const { return family_.ground(); }
  int n() const { return family_.n(); }

  bool contains(Mask subset) const { return family_.contains(subset); }

  // Sorted by (cardinality, mask). All circuits share the girth cardinality.
  const std::vector<Mask>& circuits() const { return circuits_; }
  int girth() const { return girth_; }

  bool is_circuit(Mask subset) const;

  friend bool operator==(const Comatroid& a, const Comatroid& b) {
    return a.family_ == b.family_;
  }

 private:
  Comatroid(DependenceFamily family, std::vector<Mask> circuits, int girth)
      : family_(std::move(family)), circuits_(std::move(circuits)), girth_(girth) {}

  friend std::variant<Comatroid, ComatroidFailure> validate_comatroid(
      const GroundSet& ground, const std::vector<Mask>& members);

  DependenceFamily family_;
  std::vector<Mask> circuits_;
  int girth_;
};

// Checks the axioms in order (ground member, no empty set, upward closure,
// exchange) and reports the first defect with a concrete witness, scanning
// masks in ascending order so witnesses are deterministic.
std::variant<Comatroid, ComatroidFailure> validate_comatroid(
    const GroundSet& ground, const std::vector<Mask>& members);

// Convenience wrapper that throws std::invalid_argument on failure.
Comatroid make_comatroid(const GroundSet& ground, const std::vector<Mask>& members);

// { x in X : X \ {x} in D }, ascending. Throws std::invalid_argument when
// X is not a member.
std::vector<int> removable(const Comatroid& c, Mask subset);

// For A, B in D with |B| <= |A|: exactly |A| - |B| distinct elements of
// A\B such that removing them from A one at a time (in the returned order)
// keeps every intermediate set in D. Picks the smallest feasible label at
// each step. Throws std::invalid_argument on precondition violations.
std::vector<int> exchange_witnesses(const Comatroid& c, Mask a, Mask b);

struct UniformMatroid {
  int rank = 0;
};

struct PartitionMatroid {
  std::vector<std::vector<int>> blocks;  // must partition 1..n
  std::vector<int> capacities;           // one per block, >= 0
};

struct MatroidSpec {
  GroundSet ground;
  std::variant<UniformMatroid, PartitionMatroid> kind;
};

// True iff the subset is independent in the specified matroid.
bool matroid_independent(const MatroidSpec& spec, Mask subset);

int matroid_rank(const MatroidSpec& spec);

// The dual construction D = { A : U\A independent }. Circuits are the
// complements of the matroid's bases and the girth is n - rank. Throws
// std::invalid_argument for malformed specs and for full-rank matroids
// (whose dual family would contain the empty set).
Comatroid from_matroid_dual(const MatroidSpec& spec);

}  // namespace stingy

#endif  // STINGY_COMATROID_HPP_
