#include "seqgame/dyadic.hpp"

#include <utility>

namespace seqgame {

Dyadic::Dyadic(BigInt numerator, std::size_t exponent)
    : numerator_(std::move(numerator)), exponent_(exponent) {
  normalize();
}

void Dyadic::normalize() {
  if (numerator_ == 0) {
    exponent_ = 0;
    return;
  }
  if (exponent_ == 0) return;
  auto trailing = static_cast<std::size_t>(boost::multiprecision::lsb(abs(numerator_)));
  auto shift = trailing < exponent_ ? trailing : exponent_;
  numerator_ >>= shift;  // exact: the low bits are zero
  exponent_ -= shift;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.exponent_ == b.exponent_) return Dyadic(a.numerator_ + b.numerator_, a.exponent_);
  if (a.exponent_ > b.exponent_) {
    BigInt scaled = b.numerator_ << (a.exponent_ - b.exponent_);
    return Dyadic(a.numerator_ + scaled, a.exponent_);
  }
  BigInt scaled = a.numerator_ << (b.exponent_ - a.exponent_);
  return Dyadic(scaled + b.numerator_, b.exponent_);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Dyadic::to_string() const {
  std::string out = numerator_.str();
  if (exponent_ > 0) {
    BigInt denominator = BigInt(1) << exponent_;
    out += "/" + denominator.str();
  }
  return out;
}

}  // namespace seqgame
