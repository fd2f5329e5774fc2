#include "cyclekit/exact_number.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>

namespace cyclekit {

namespace {

using Wide = __int128;

std::int64_t narrow(Wide v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw ArithmeticError("exact arithmetic overflowed 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

Wide gcd_wide(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

ExactNumber make(Wide num, Wide den) {
  if (den == 0) throw ArithmeticError("division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = gcd_wide(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return ExactNumber(narrow(num), narrow(den));
}

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    throw std::invalid_argument("not an exact number: \"" + std::string(s) + "\"");
  }
  return v;
}

}  // namespace

ExactNumber::ExactNumber(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ArithmeticError("zero denominator");
  if (den < 0) {
    num = narrow(-static_cast<Wide>(num));
    den = narrow(-static_cast<Wide>(den));
  }
  std::int64_t g = std::gcd(num, den);
  num_ = g > 1 ? num / g : num;
  den_ = g > 1 ? den / g : den;
}

ExactNumber ExactNumber::parse(std::string_view text) {
  if (text == "inf" || text == "+inf") return infinity();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return ExactNumber(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }
  return ExactNumber(parse_int(text));
}

ExactNumber ExactNumber::floor() const {
  if (inf_ || den_ == 1) return *this;
  std::int64_t q = num_ / den_;
  if (num_ < 0) --q;  // den_ > 1 here, so the division was inexact
  return ExactNumber(q);
}

ExactNumber ExactNumber::ceil() const {
  if (inf_ || den_ == 1) return *this;
  std::int64_t q = num_ / den_;
  if (num_ > 0) ++q;
  return ExactNumber(q);
}

std::string ExactNumber::to_string() const {
  if (inf_) return "inf";
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

double ExactNumber::to_double() const {
  if (inf_) return std::numeric_limits<double>::infinity();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

ExactNumber operator+(const ExactNumber& a, const ExactNumber& b) {
  if (a.inf_ || b.inf_) return ExactNumber::infinity();
  return make(static_cast<Wide>(a.num_) * b.den_ + static_cast<Wide>(b.num_) * a.den_,
              static_cast<Wide>(a.den_) * b.den_);
}

ExactNumber ExactNumber::operator-() const {
  if (inf_) throw ArithmeticError("negative infinity is not representable");
  return make(-static_cast<Wide>(num_), den_);
}

ExactNumber operator-(const ExactNumber& a, const ExactNumber& b) {
  if (b.inf_) throw ArithmeticError("subtracting infinity");
  if (a.inf_) return a;
  return make(static_cast<Wide>(a.num_) * b.den_ - static_cast<Wide>(b.num_) * a.den_,
              static_cast<Wide>(a.den_) * b.den_);
}

ExactNumber operator*(const ExactNumber& a, const ExactNumber& b) {
  if (a.inf_ || b.inf_) {
    const ExactNumber& other = a.inf_ ? b : a;
    if (other.inf_ || other.num_ > 0) return ExactNumber::infinity();
    throw ArithmeticError("infinity times a non-positive value");
  }
  return make(static_cast<Wide>(a.num_) * b.num_, static_cast<Wide>(a.den_) * b.den_);
}

ExactNumber operator/(const ExactNumber& a, const ExactNumber& b) {
  if (b.inf_) throw ArithmeticError("division by infinity");
  if (b.num_ == 0) throw ArithmeticError("division by zero");
  if (a.inf_) {
    if (b.num_ > 0) return a;
    throw ArithmeticError("infinity divided by a negative value");
  }
  return make(static_cast<Wide>(a.num_) * b.den_, static_cast<Wide>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const ExactNumber& a, const ExactNumber& b) {
  if (a.inf_ || b.inf_) return static_cast<int>(a.inf_) <=> static_cast<int>(b.inf_);
  const Wide l = static_cast<Wide>(a.num_) * b.den_;
  const Wide r = static_cast<Wide>(b.num_) * a.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

ExactNumber min(const ExactNumber& a, const ExactNumber& b) { return b < a ? b : a; }
ExactNumber max(const ExactNumber& a, const ExactNumber& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const ExactNumber& x) { return os << x.to_string(); }

}  // namespace cyclekit
