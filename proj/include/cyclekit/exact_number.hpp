#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclekit {

class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact rational in lowest terms (positive denominator) or +infinity.
///
/// Infinity absorbs addition and multiplication by positive values and
/// is the maximum of the total order. Operations without a meaningful
/// value (inf - inf, 0 * inf, division by zero, inf on the right of a
/// division, negative * inf) throw ArithmeticError, as does int64
/// overflow. No floating point is involved anywhere.
class ExactNumber {
 public:
  constexpr ExactNumber() = default;
  constexpr ExactNumber(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design of the algebra
  ExactNumber(std::int64_t num, std::int64_t den);

  static constexpr ExactNumber infinity() {
    ExactNumber x;
    x.inf_ = true;
    x.num_ = 1;
    return x;
  }

  /// Accepts "inf", "p", "-p" and "p/q".
  static ExactNumber parse(std::string_view text);

  constexpr bool is_infinite() const { return inf_; }
  constexpr bool is_integer() const { return !inf_ && den_ == 1; }
  constexpr std::int64_t numerator() const { return num_; }
  constexpr std::int64_t denominator() const { return den_; }

  /// Floor and ceiling; infinity maps to itself.
  ExactNumber floor() const;
  ExactNumber ceil() const;

  /// "inf", "3", "-1/2".
  std::string to_string() const;
  /// Lossy, for display only.
  double to_double() const;

  friend ExactNumber operator+(const ExactNumber& a, const ExactNumber& b);
  friend ExactNumber operator-(const ExactNumber& a, const ExactNumber& b);
  friend ExactNumber operator*(const ExactNumber& a, const ExactNumber& b);
  friend ExactNumber operator/(const ExactNumber& a, const ExactNumber& b);
  ExactNumber operator-() const;

  friend bool operator==(const ExactNumber& a, const ExactNumber& b) {
    return a.inf_ == b.inf_ && (a.inf_ || (a.num_ == b.num_ && a.den_ == b.den_));
  }
  friend std::strong_ordering operator<=>(const ExactNumber& a, const ExactNumber& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  bool inf_ = false;
};

ExactNumber min(const ExactNumber& a, const ExactNumber& b);
ExactNumber max(const ExactNumber& a, const ExactNumber& b);

std::ostream& operator<<(std::ostream& os, const ExactNumber& x);

}  // namespace cyclekit
