#include "cherednik/params.hpp"

#include "cherednik/errors.hpp"

namespace cherednik {

VarsigmaQuiver::VarsigmaQuiver(std::vector<Rational> e, Rational inf)
    : entries(std::move(e)), infinity(std::move(inf)) {
  if (entries.empty()) throw InvalidArgument("varsigma needs at least one entry");
}

VarsigmaQuiver VarsigmaQuiver::zero(long ell) {
  if (ell < 1) throw InvalidArgument("ell must be positive");
  return VarsigmaQuiver(std::vector<Rational>(ell));
}

Rational ChiVector::dot_delta() const {
  Rational s;
  for (const auto& c : entries) s += c;
  return s;
}

KappaZl::KappaZl(std::vector<Rational> k) : kappa(std::move(k)) {
  if (kappa.empty()) throw InvalidArgument("kappa needs at least one entry");
}

ChiVector chi_from_varsigma(const VarsigmaQuiver& v) {
  ChiVector chi;
  const long ell = v.ell();
  for (long i = 0; i < ell; ++i) chi.entries.push_back(v.at(i - 1) - v.at(i));
  return chi;
}

KappaZl kappa_rank1(const VarsigmaQuiver& v) {
  const long ell = v.ell();
  std::vector<Rational> k;
  k.reserve(ell);
  for (long i = 0; i < ell; ++i) {
    Rational value = v.entries[i] + Rational(ell - i, ell);
    if (i == 0) value -= Rational(1);
    k.push_back(std::move(value));
  }
  return KappaZl(std::move(k));
}

KappaWreath kappa_wreath(const VarsigmaQuiver& v, long n) {
  if (n < 1) throw InvalidArgument("n must be positive");
  KappaWreath k;
  k.n = n;
  k.kappa00 = v.infinity + Rational(1, 2);
  k.kappa01 = k.kappa00;
  k.kappa1 = kappa_rank1(v).kappa;
  return k;
}

KappaZl kappa_weighted_line(long n, const Rational& s1, const Rational& s2) {
  if (n < 1) throw InvalidArgument("n must be positive");
  std::vector<Rational> k;
  const Rational base = (s2 - Rational(1)) / Rational(n);
  for (long i = 0; i < n; ++i) k.push_back(base + Rational(i, n * (n + 1)));
  k.push_back(s1);
  return KappaZl(std::move(k));
}

HeckeParams hecke_from_kappa(const KappaWreath& k) {
  const long ell = k.ell();
  if (ell < 1) throw InvalidArgument("kappa1 block is empty");
  HeckeParams h;
  h.n = k.n;
  for (long j = 0; j < ell; ++j)
    h.u.push_back(CyclotomicUnit::from_angle(-Rational(j, ell) - k.kappa1[j]));
  h.q0 = CyclotomicUnit::from_angle(-k.kappa00);
  h.q1 = CyclotomicUnit::from_angle(Rational(1, 2) - k.kappa01);
  return h;
}

}  // namespace cherednik
