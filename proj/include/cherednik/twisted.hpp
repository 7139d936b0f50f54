#pragma once

#include "cherednik/params.hpp"
#include "cherednik/weyl.hpp"

#include <map>
#include <string>
#include <vector>

namespace cherednik {

// coefficient * x^exponents * delta^twist, Laurent exponents allowed.
struct TwistedMonomial {
  std::vector<long> exponents;
  Rational coefficient{1};
  VarsigmaQuiver twist;
};

struct TwistedSum {
  VarsigmaQuiver twist;
  std::map<std::vector<long>, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const std::vector<long>& e, const Rational& c);
  std::string str() const;
  friend bool operator==(const TwistedSum& a, const TwistedSum& b) { return a.terms == b.terms; }
};

// x_i shifts exponents; d_i(x^e delta^s) = (e_i + s_i) x^{e - unit_i} delta^s.
TwistedSum twisted_apply(const WeylElement& op, const TwistedMonomial& m);

struct RadialCheck {
  Rational expected;  // prod_i (j + s_i)
  TwistedSum computed;
  bool ok = false;
};

// Delta = d_0...d_{l-1} on z^j delta^s with z = x_0...x_{l-1}.
RadialCheck radial_delta_check(const VarsigmaQuiver& v, long j);

}  // namespace cherednik
