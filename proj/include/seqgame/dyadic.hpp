#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace seqgame {

using BigInt = boost::multiprecision::cpp_int;

/// Exact dyadic rational m / 2^n, kept normalized (n == 0 or m odd).
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(std::int64_t integer) : numerator_(integer) {}  // NOLINT: implicit by design of the value type
  Dyadic(BigInt numerator, std::size_t exponent);

  const BigInt& numerator() const { return numerator_; }
  std::size_t exponent() const { return exponent_; }

  bool is_zero() const { return numerator_ == 0; }
  bool is_integer() const { return exponent_ == 0; }
  int sign() const { return numerator_.sign(); }

  Dyadic operator-() const { return Dyadic(-numerator_, exponent_); }
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
  Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
  Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }

  /// Halving is exact on dyadics.
  Dyadic half() const { return Dyadic(numerator_, exponent_ + 1); }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exponent_ == b.exponent_ && a.numerator_ == b.numerator_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  /// "57/16", "-5", "0".
  std::string to_string() const;

 private:
  void normalize();

  BigInt numerator_ = 0;
  std::size_t exponent_ = 0;
};

}  // namespace seqgame
