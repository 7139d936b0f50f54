#pragma once

#include "cherednik/cyclotomic.hpp"
#include "cherednik/rational.hpp"

#include <vector>

namespace cherednik {

// Index i read cyclically, representative in [0, ell).
inline long cyclic_index(long i, long ell) { return mod_floor(i, ell); }

struct VarsigmaQuiver {
  std::vector<Rational> entries;
  Rational infinity;

  VarsigmaQuiver() = default;
  explicit VarsigmaQuiver(std::vector<Rational> e, Rational inf = Rational(0));
  static VarsigmaQuiver zero(long ell);

  long ell() const { return static_cast<long>(entries.size()); }
  const Rational& at(long i) const { return entries[cyclic_index(i, ell())]; }
};

struct ChiVector {
  std::vector<Rational> entries;
  long ell() const { return static_cast<long>(entries.size()); }
  Rational dot_delta() const;
};

struct KappaZl {
  std::vector<Rational> kappa;

  KappaZl() = default;
  explicit KappaZl(std::vector<Rational> k);

  long ell() const { return static_cast<long>(kappa.size()); }
  const Rational& at(long i) const { return kappa[cyclic_index(i, ell())]; }
  friend bool operator==(const KappaZl&, const KappaZl&) = default;
};

struct KappaWreath {
  long n = 1;
  Rational kappa00;
  Rational kappa01;
  std::vector<Rational> kappa1;

  long ell() const { return static_cast<long>(kappa1.size()); }
};

struct HeckeParams {
  long n = 1;
  std::vector<CyclotomicUnit> u;
  CyclotomicUnit q0;
  CyclotomicUnit q1;

  long ell() const { return static_cast<long>(u.size()); }
};

ChiVector chi_from_varsigma(const VarsigmaQuiver& v);

// kappa_i = s_i + (ell - i)/ell - [i = 0]
KappaZl kappa_rank1(const VarsigmaQuiver& v);

KappaWreath kappa_wreath(const VarsigmaQuiver& v, long n);

// ell = n + 1; kappa_i = (s2 - 1)/n + i/(n(n+1)) for i < n, kappa_n = s1.
KappaZl kappa_weighted_line(long n, const Rational& s1, const Rational& s2);

// u_j = e(-j/ell - kappa_{1,j}), q0 = e(-kappa00), q1 = e(1/2 - kappa01).
HeckeParams hecke_from_kappa(const KappaWreath& k);

}  // namespace cherednik
