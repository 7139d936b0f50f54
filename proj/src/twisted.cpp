#include "cherednik/twisted.hpp"

#include "cherednik/errors.hpp"

#include <sstream>

namespace cherednik {

void TwistedSum::add(const std::vector<long>& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

std::string TwistedSum::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    os << (first ? "" : " + ") << "(" << it->second << ")";
    for (std::size_t i = 0; i < it->first.size(); ++i)
      if (it->first[i] != 0) os << "*x" << i << "^" << it->first[i];
    first = false;
  }
  os << " delta^(" << format_rational_list(twist.entries) << ")";
  return os.str();
}

TwistedSum twisted_apply(const WeylElement& op, const TwistedMonomial& m) {
  const int k = op.vars();
  if (static_cast<int>(m.exponents.size()) != k || m.twist.ell() != k)
    throw VarCountMismatch("operator acts on " + std::to_string(k) + " variables, monomial has " +
                           std::to_string(m.exponents.size()));
  TwistedSum out;
  out.twist = m.twist;
  for (const auto& [e, c] : op.terms()) {
    std::vector<long> cur = m.exponents;
    Rational coeff = c * m.coefficient;
    for (int i = 0; i < k && !coeff.is_zero(); ++i) {
      for (int t = 0; t < e[k + i]; ++t) {
        coeff *= Rational(cur[i]) + m.twist.entries[i];
        cur[i] -= 1;
      }
      cur[i] += e[i];
    }
    out.add(cur, coeff);
  }
  return out;
}

RadialCheck radial_delta_check(const VarsigmaQuiver& v, long j) {
  const long ell = v.ell();
  RadialCheck rc;
  rc.expected = Rational(1);
  for (long i = 0; i < ell; ++i) rc.expected *= Rational(j) + v.entries[i];
  TwistedMonomial m{std::vector<long>(ell, j), Rational(1), v};
  rc.computed = twisted_apply(delta_operator(static_cast<int>(ell)), m);
  TwistedSum want;
  want.twist = v;
  want.add(std::vector<long>(ell, j - 1), rc.expected);
  rc.ok = rc.computed == want;
  return rc;
}

}  // namespace cherednik
