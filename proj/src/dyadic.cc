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

#include "scripbid/dyadic.h"

#include <algorithm>
#include <limits>
#include <sstream>

#include "scripbid/error.h"

namespace scripbid {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

BigInt ParseInteger(std::string_view s) {
  s = Trim(s);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw GameError(ErrorCode::kParse, "empty integer");
  BigInt value = 0;
  for (char c : s) {
    if (c < '0' || c > '9') {
      throw GameError(ErrorCode::kParse, "bad digit in '" + std::string(s) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

// Position of the single set bit, or nullopt if `v` is not a power of two.
std::optional<unsigned> Log2Exact(const BigInt& v) {
  if (v <= 0) return std::nullopt;
  unsigned bit = boost::multiprecision::msb(v);
  if (boost::multiprecision::lsb(v) != bit) return std::nullopt;
  return bit;
}

}  // namespace

Dyadic::Dyadic(BigInt numerator, unsigned scale)
    : numerator_(std::move(numerator)), scale_(scale) {
  Normalize();
}

void Dyadic::Normalize() {
  if (numerator_ == 0) {
    scale_ = 0;
    return;
  }
  if (scale_ == 0) return;
  unsigned zeros = boost::multiprecision::lsb(abs(numerator_));
  unsigned shift = std::min(zeros, scale_);
  numerator_ >>= shift;
  scale_ -= shift;
}

Dyadic Dyadic::Pow2(int exponent) {
  if (exponent >= 0) return Dyadic(BigInt(1) << exponent, 0);
  return Dyadic(BigInt(1), static_cast<unsigned>(-exponent));
}

Dyadic Dyadic::Parse(std::string_view text) {
  text = Trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Dyadic(ParseInteger(text), 0);
  BigInt num = ParseInteger(text.substr(0, slash));
  std::string_view den = Trim(text.substr(slash + 1));
  if (den.rfind("2^", 0) == 0) {
    BigInt k = ParseInteger(den.substr(2));
    if (k < 0 || k > 100000) {
      throw GameError(ErrorCode::kParse, "bad exponent in '" + std::string(text) + "'");
    }
    return Dyadic(num, k.convert_to<unsigned>());
  }
  BigInt q = ParseInteger(den);
  if (q == 0) throw GameError(ErrorCode::kParse, "zero denominator");
  auto bit = Log2Exact(q);
  if (!bit) {
    // Allow p/q that reduces to a dyadic, e.g. 3/6 = 1/2.
    Rational r(num, q);
    auto reduced = Log2Exact(boost::multiprecision::denominator(r));
    if (reduced) return Dyadic(boost::multiprecision::numerator(r), *reduced);
    throw GameError(ErrorCode::kNonDyadic,
                    "'" + std::string(text) + "' is not a dyadic rational");
  }
  return Dyadic(num, *bit);
}

BigInt Dyadic::UnitsAt(unsigned target) const {
  if (target < scale_) {
    throw GameError(ErrorCode::kOffGrid,
                    ToString() + " is not a multiple of 2^-" + std::to_string(target));
  }
  return numerator_ << (target - scale_);
}

std::int64_t Dyadic::Units64At(unsigned target) const {
  BigInt u = UnitsAt(target);
  if (u > std::numeric_limits<std::int64_t>::max() ||
      u < std::numeric_limits<std::int64_t>::min()) {
    throw GameError(ErrorCode::kGridTooLarge, "budget units overflow 64 bits");
  }
  return u.convert_to<std::int64_t>();
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  unsigned s = std::max(a.scale_, b.scale_);
  return Dyadic((a.numerator_ << (s - a.scale_)) + (b.numerator_ << (s - b.scale_)), s);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  unsigned s = std::max(a.scale_, b.scale_);
  BigInt lhs = a.numerator_ << (s - a.scale_);
  BigInt rhs = b.numerator_ << (s - b.scale_);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Dyadic::ToRational() const {
  return Rational(numerator_, BigInt(1) << scale_);
}

double Dyadic::ToDouble() const { return ToRational().convert_to<double>(); }

std::string Dyadic::ToString() const {
  std::ostringstream os;
  os << numerator_;
  if (scale_ != 0) os << "/2^" << scale_;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Dyadic& d) {
  return os << d.ToString();
}

Rational ParseRational(std::string_view text) {
  text = Trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(ParseInteger(text));
  BigInt num = ParseInteger(text.substr(0, slash));
  BigInt den = ParseInteger(text.substr(slash + 1));
  if (den == 0) throw GameError(ErrorCode::kParse, "zero denominator");
  return Rational(num, den);
}

std::string RationalToString(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1) {
    os << "/" << boost::multiprecision::denominator(r);
  }
  return os.str();
}

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCycleDetected: return "CycleDetected";
    case ErrorCode::kDanglingChild: return "DanglingChild";
    case ErrorCode::kEmptyMoveSet: return "EmptyMoveSet";
    case ErrorCode::kMissingUtility: return "MissingUtility";
    case ErrorCode::kNotATerminal: return "NotATerminal";
    case ErrorCode::kNonDyadic: return "NonDyadic";
    case ErrorCode::kBudgetOutOfRange: return "BudgetOutOfRange";
    case ErrorCode::kTooManyItems: return "TooManyItems";
    case ErrorCode::kNegativeValue: return "NegativeValue";
    case ErrorCode::kMissingTableEntry: return "MissingTableEntry";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kEmptyFrontier: return "EmptyFrontier";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kUnknownFixture: return "UnknownFixture";
    case ErrorCode::kGridTooLarge: return "GridTooLarge";
    case ErrorCode::kNonConvergence: return "NonConvergence";
    case ErrorCode::kOffGrid: return "OffGrid";
    case ErrorCode::kInfeasibleBid: return "InfeasibleBid";
    case ErrorCode::kWrongLength: return "WrongLength";
    case ErrorCode::kNotBinary: return "NotBinary";
    case ErrorCode::kChildProfileMissing: return "ChildProfileMissing";
    case ErrorCode::kCyclic: return "Cyclic";
    case ErrorCode::kUnlabeledTerminal: return "UnlabeledTerminal";
    case ErrorCode::kNotFullBinary: return "NotFullBinary";
    case ErrorCode::kIncompleteTables: return "IncompleteTables";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kEnumerationTooLarge: return "EnumerationTooLarge";
  }
  return "Unknown";
}

}  // namespace scripbid
