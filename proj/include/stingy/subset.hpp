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

#ifndef STINGY_SUBSET_HPP_
#define STINGY_SUBSET_HPP_

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace stingy {

// Subsets of the ground set are n-bit masks: bit (i-1) set means element i
// is present. Elements are labeled 1..n.
using Mask = std::uint32_t;

// Every algorithm here enumerates 2^n subsets, so the ground set is capped.
inline constexpr int kMaxElements = 24;

class GroundSet {
 public:
  explicit GroundSet(int n) : n_(n) {
    if (n < 1 || n > kMaxElements) {
      throw std::out_of_range("ground set size must be in 1.." +
                              std::to_string(kMaxElements) + ", got " +
                              std::to_string(n));
    }
  }

  int size() const { return n_; }
  Mask full_mask() const { return (Mask{1} << n_) - 1; }
  bool contains_label(int element) const { return element >= 1 && element <= n_; }

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  int n_;
};

inline Mask element_bit(int element) { return Mask{1} << (element - 1); }

inline bool subset_contains(Mask subset, int element) {
  return (subset >> (element - 1)) & Mask{1};
}

inline int subset_size(Mask subset) { return std::popcount(subset); }

inline std::vector<int> subset_elements(Mask subset) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(subset)));
  while (subset != 0) {
    int low = std::countr_zero(subset);
    out.push_back(low + 1);
    subset &= subset - 1;
  }
  return out;
}

// Throws std::out_of_range for labels outside 1..n and
// std::invalid_argument for repeated labels.
inline Mask subset_from_elements(const std::vector<int>& elements,
                                 const GroundSet& ground) {
  Mask m = 0;
  for (int e : elements) {
    if (!ground.contains_label(e)) {
      throw std::out_of_range("element label " + std::to_string(e) +
                              " outside 1.." + std::to_string(ground.size()));
    }
    if (subset_contains(m, e)) {
      throw std::invalid_argument("repeated element label " + std::to_string(e));
    }
    m |= element_bit(e);
  }
  return m;
}

inline std::string subset_to_string(Mask subset) {
  std::string out = "{";
  bool first = true;
  for (int e : subset_elements(subset)) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  out += "}";
  return out;
}

// Lexicographic order on the ascending element sequences, shorter prefix
// first. {1,4} < {3,4} and {1} < {1,4}.
inline bool subset_lex_less(Mask a, Mask b) {
  while (a != 0 && b != 0) {
    int la = std::countr_zero(a);
    int lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

}  // namespace stingy

#endif  // STINGY_SUBSET_HPP_
