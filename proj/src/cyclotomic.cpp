#include "cherednik/cyclotomic.hpp"

#include "cherednik/errors.hpp"

namespace cherednik {

CyclotomicUnit CyclotomicUnit::from_angle(const Rational& t) {
  CyclotomicUnit u;
  u.angle_ = t.frac();
  return u;
}

CyclotomicUnit CyclotomicUnit::primitive(long ell) {
  if (ell < 1) throw InvalidArgument("root of unity order must be positive");
  return from_angle(Rational(1, ell));
}

CyclotomicUnit CyclotomicUnit::parse(std::string_view text) {
  if (text == "1") return one();
  if (text == "-1") return minus_one();
  if (text.size() > 3 && text.substr(0, 2) == "e(" && text.back() == ')')
    return from_angle(Rational::parse(text.substr(2, text.size() - 3)));
  throw ParseError("not a root of unity: '" + std::string(text) + "'");
}

std::string CyclotomicUnit::str() const {
  if (angle_.is_zero()) return "1";
  if (angle_ == Rational(1, 2)) return "-1";
  return "e(" + angle_.str() + ")";
}

}  // namespace cherednik
