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

#ifndef STINGY_RATIONAL_HPP_
#define STINGY_RATIONAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace stingy {

// All arithmetic in this library is exact. Values never touch floating
// point except in explicitly approximate renderings.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "p", "-p" or "p/q" (decimal digits, lowest terms not required,
// no whitespace, locale-independent). Throws std::invalid_argument on
// anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

// Lowest-terms rendering: "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rational& r);

// Approximate double rendering for human-facing output only.
double approx(const Rational& r);

// Exact base^exponent for integer exponents >= 0.
Rational pow_rational(const Rational& base, unsigned exponent);

// A rational extended with a single +infinity. Used where a quantity can
// blow up (t and the steepness bound at s = 1).
class ExtRational {
 public:
  ExtRational() = default;
  ExtRational(Rational value) : value_(std::move(value)) {}  // NOLINT: implicit
  ExtRational(int value) : value_(value) {}                  // NOLINT: implicit

  static ExtRational infinity() {
    ExtRational e;
    e.infinite_ = true;
    return e;
  }

  bool is_infinite() const { return infinite_; }

  // The finite value; throws std::logic_error when infinite.
  const Rational& value() const;

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend bool operator!=(const ExtRational& a, const ExtRational& b) { return !(a == b); }
  friend bool operator<(const ExtRational& a, const ExtRational& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator>(const ExtRational& a, const ExtRational& b) { return b < a; }
  friend bool operator<=(const ExtRational& a, const ExtRational& b) { return !(b < a); }
  friend bool operator>=(const ExtRational& a, const ExtRational& b) { return !(a < b); }

 private:
  bool infinite_ = false;
  Rational value_{};
};

// "inf" or the exact rational rendering.
std::string format_ext(const ExtRational& e);

}  // namespace stingy

#endif  // STINGY_RATIONAL_HPP_
