#include "cherednik/simplicity.hpp"

#include "cherednik/errors.hpp"

#include <algorithm>

namespace cherednik {

// l(k_i - k_{i+m}) depends on m only through r = m mod l, so each (i, r) class
// holds at most one solution m = c, and only if c is an integer with c = r mod l.
SimplicityCheck h_simple_cyclic(const KappaZl& k) {
  SimplicityCheck out;
  const long ell = k.ell();
  const Rational L(ell);
  for (long i = 0; i < ell; ++i) {
    for (long r = 0; r < ell; ++r) {
      Rational c = L * (k.at(i) - k.at(i + r));
      if (!c.is_integer() || c.sign() <= 0) continue;
      if (mod_floor(c.numerator(), ell) != r) continue;
      out.simple = false;
      out.witnesses.push_back({i, c.numerator(), c});
    }
  }
  return out;
}

// Same reduction with p = i+1; the solution j must also satisfy j >= l - i.
SimplicityCheck a_simple_cyclic(const KappaZl& k) {
  SimplicityCheck out;
  const long ell = k.ell();
  const Rational L(ell);
  for (long i = 0; i < ell; ++i) {
    const long p = i + 1;
    for (long r = 0; r < ell; ++r) {
      Rational c = L * (k.at(p) - k.at(p + r));
      if (!c.is_integer()) continue;
      if (mod_floor(c.numerator(), ell) != r) continue;
      if (c.numerator() < ell - i) continue;
      out.simple = false;
      out.witnesses.push_back({i, c.numerator(), c});
    }
  }
  return out;
}

SimplicityCheck a_simple_varsigma(const VarsigmaQuiver& v) {
  SimplicityCheck out;
  const long ell = v.ell();
  for (long i = 0; i < ell; ++i) {
    for (long j = 0; j < ell; ++j) {
      Rational d = v.entries[i] - v.entries[j];
      if (d.is_integer() && d.sign() > 0) {
        out.simple = false;
        out.witnesses.push_back({i, Integer(j), d});
      }
    }
  }
  return out;
}

SimplicityCheck a_simple_wreath(const KappaWreath& k) {
  if (k.kappa00 != k.kappa01)
    throw PreconditionViolation("a_simple_wreath needs kappa00 = kappa01, got " + k.kappa00.str() +
                                " and " + k.kappa01.str());
  return a_simple_cyclic(KappaZl(k.kappa1));
}

OracleVerdict standard_module_oracle(const KappaZl& k) {
  OracleVerdict out;
  const long ell = k.ell();
  const auto [lo, hi] = std::minmax_element(k.kappa.begin(), k.kappa.end());
  // a = l(k_i - k_{i+a}) bounds every singular degree by the spread.
  const Integer top = (Rational(ell) * (*hi - *lo)).floor();
  for (long i = 0; i < ell; ++i) {
    StandardModuleReport rep;
    rep.tau_index = i;
    for (Integer a = 1; a <= top; ++a) {
      const long shift = mod_floor(a, ell);
      Rational coeff = Rational(a) + Rational(ell) * (k.at(i + shift) - k.at(i));
      if (coeff.is_zero()) {
        rep.dim_L = a;
        break;
      }
    }
    if (rep.dim_L) {
      // degree d carries the e-weight when d + i = 0 mod l
      for (Integer d = 0; d < *rep.dim_L; ++d) {
        if (mod_floor(d + i, ell) == 0) {
          rep.e_nonzero = true;
          break;
        }
      }
      out.h_simple = false;
      if (rep.e_nonzero) out.a_simple = false;
    }
    out.reports.push_back(std::move(rep));
  }
  return out;
}

WeightedLineResult weighted_line_example() {
  WeightedLineResult out;
  out.kappa_left = kappa_weighted_line(2, Rational(-1, 3), Rational(-1));
  out.kappa_right = kappa_weighted_line(2, Rational(1, 3), Rational(1));
  out.left_simple = a_simple_cyclic(out.kappa_left).simple;
  out.right_simple = a_simple_cyclic(out.kappa_right).simple;
  return out;
}

std::pair<bool, bool> reproduce_weighted_line() {
  auto r = weighted_line_example();
  return {r.left_simple, r.right_simple};
}

}  // namespace cherednik
