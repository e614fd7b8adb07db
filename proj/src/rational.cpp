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

#include "stingy/rational.hpp"

#include <algorithm>
#include <cctype>

namespace stingy {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

[[noreturn]] void bad_rational(std::string_view text) {
  throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (den.find('/') != std::string_view::npos) bad_rational(text);
  }

  bool negative = false;
  if (!num.empty() && num.front() == '-') {
    negative = true;
    num.remove_prefix(1);
  }
  if (!all_digits(num)) bad_rational(text);

  BigInt n{std::string(num)};
  if (negative) n = -n;
  if (den.empty() && text.find('/') == std::string_view::npos) {
    return Rational(n);
  }

  if (!all_digits(den)) bad_rational(text);
  BigInt d{std::string(den)};
  if (d == 0) {
    throw std::invalid_argument("zero denominator in rational: '" + std::string(text) + "'");
  }
  return Rational(n, d);
}

std::string format_rational(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

double approx(const Rational& r) { return r.convert_to<double>(); }

Rational pow_rational(const Rational& base, unsigned exponent) {
  using boost::multiprecision::pow;
  return Rational(pow(numerator(base), exponent), pow(denominator(base), exponent));
}

const Rational& ExtRational::value() const {
  if (infinite_) throw std::logic_error("value() called on an infinite quantity");
  return value_;
}

std::string format_ext(const ExtRational& e) {
  return e.is_infinite() ? "inf" : format_rational(e.value());
}

}  // namespace stingy
