// Copyright 2026 The Scripbid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SCRIPBID_DYADIC_H_
#define SCRIPBID_DYADIC_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace scripbid {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact value numerator * 2^-scale. Always stored in canonical form: the
// numerator is odd, or zero with scale 0, so equality is structural.
class Dyadic {
 public:
  Dyadic() = default;
  explicit Dyadic(std::int64_t value) : numerator_(value) {}
  Dyadic(BigInt numerator, unsigned scale);

  // 2^exponent; exponent may be negative.
  static Dyadic Pow2(int exponent);

  // Accepts "p", "p/2^k" and "p/q" where q is a power of two. Anything else
  // (including non-dyadic fractions) raises kNonDyadic or kParse.
  static Dyadic Parse(std::string_view text);

  const BigInt& numerator() const { return numerator_; }
  unsigned scale() const { return scale_; }

  // Numerator when written at the (finer or equal) scale `target`.
  // Raises kOffGrid if the value is not a multiple of 2^-target.
  BigInt UnitsAt(unsigned target) const;
  // Same, for callers that know the result fits in 64 bits.
  std::int64_t Units64At(unsigned target) const;

  Dyadic Half() const { return Dyadic(numerator_, scale_ + 1); }
  Dyadic operator-() const { return Dyadic(-numerator_, scale_); }
  Dyadic operator*(std::int64_t k) const { return Dyadic(numerator_ * k, scale_); }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
  Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.scale_ == b.scale_ && a.numerator_ == b.numerator_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  bool IsZero() const { return numerator_ == 0; }
  Rational ToRational() const;
  double ToDouble() const;

  // "p" when the scale is zero, "p/2^k" otherwise.
  std::string ToString() const;

 private:
  void Normalize();

  BigInt numerator_ = 0;
  unsigned scale_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Dyadic& d);

// Utilities are exact rationals written as "p/q" or as a plain integer.
Rational ParseRational(std::string_view text);
std::string RationalToString(const Rational& r);

}  // namespace scripbid

#endif  // SCRIPBID_DYADIC_H_
