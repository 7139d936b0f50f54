#pragma once

#include "cherednik/rational.hpp"

#include <string>

namespace cherednik {

// exp(2 pi i * angle) with angle kept in [0,1).
class CyclotomicUnit {
 public:
  CyclotomicUnit() = default;

  static CyclotomicUnit from_angle(const Rational& t);
  static CyclotomicUnit one() { return {}; }
  static CyclotomicUnit minus_one() { return from_angle(Rational(1, 2)); }
  // omega = exp(2 pi i / ell)
  static CyclotomicUnit primitive(long ell);

  // Parses "1", "-1" or "e(a/b)".
  static CyclotomicUnit parse(std::string_view text);

  const Rational& angle() const { return angle_; }
  Integer order() const { return angle_.denominator(); }
  bool is_one() const { return angle_.is_zero(); }

  CyclotomicUnit inverse() const { return from_angle(-angle_); }
  CyclotomicUnit pow(long k) const { return from_angle(angle_ * Rational(k)); }
  CyclotomicUnit pow(const Integer& k) const { return from_angle(angle_ * Rational(k)); }

  // "1", "-1", or "e(a/b)".
  std::string str() const;

  friend CyclotomicUnit operator*(const CyclotomicUnit& a, const CyclotomicUnit& b) {
    return from_angle(a.angle_ + b.angle_);
  }
  CyclotomicUnit& operator*=(const CyclotomicUnit& o) { return *this = *this * o; }
  friend CyclotomicUnit operator/(const CyclotomicUnit& a, const CyclotomicUnit& b) {
    return from_angle(a.angle_ - b.angle_);
  }
  friend bool operator==(const CyclotomicUnit& a, const CyclotomicUnit& b) = default;

 private:
  Rational angle_;
};

inline CyclotomicUnit cyc_from_angle(const Rational& t) { return CyclotomicUnit::from_angle(t); }
inline CyclotomicUnit cyc_mul(const CyclotomicUnit& a, const CyclotomicUnit& b) { return a * b; }
inline CyclotomicUnit cyc_pow(const CyclotomicUnit& a, long k) { return a.pow(k); }

}  // namespace cherednik
