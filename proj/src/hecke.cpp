#include "cherednik/hecke.hpp"

#include "cherednik/errors.hpp"

namespace cherednik {

ArikiKoikePresentation ArikiKoikePresentation::normalized(long n, std::vector<CyclotomicUnit> u,
                                                          const CyclotomicUnit& q) {
  if (n < 1) throw InvalidArgument("n must be positive");
  if (u.empty()) throw InvalidArgument("need at least one T_0 eigenvalue");
  ArikiKoikePresentation p;
  p.n = n;
  p.u = std::move(u);
  p.q0 = q;
  p.q1 = CyclotomicUnit::minus_one();
  p.normalized_q = q;
  return p;
}

ArikiKoikePresentation presentation_from_hecke_params(const HeckeParams& h) {
  ArikiKoikePresentation p;
  p.n = h.n;
  p.u = h.u;
  p.q0 = h.q0;
  p.q1 = h.q1;
  p.normalized_q = CyclotomicUnit::minus_one() * h.q0 * h.q1.inverse();
  return p;
}

std::string SemisimplicityWitness::str() const {
  if (kind == Kind::QInteger) return "[" + std::to_string(k) + "]_q = 0";
  return "q^" + std::to_string(d) + " u_" + std::to_string(i) + " = u_" + std::to_string(j);
}

bool q_integer_vanishes(const CyclotomicUnit& q, long k) {
  return !q.is_one() && q.pow(k).is_one();
}

SemisimplicityVerdict is_semisimple(const ArikiKoikePresentation& p) {
  SemisimplicityVerdict out;
  const CyclotomicUnit& q = p.normalized_q;
  for (long k = 2; k <= p.n; ++k) {
    if (q_integer_vanishes(q, k)) {
      SemisimplicityWitness w;
      w.kind = SemisimplicityWitness::Kind::QInteger;
      w.k = k;
      out.witnesses.push_back(w);
    }
  }
  // |d| < n, and d = 0 covers the n = 1 distinctness condition.
  const long ell = p.ell();
  for (long i = 0; i < ell; ++i) {
    for (long j = 0; j < ell; ++j) {
      if (i == j) continue;
      for (long d = -(p.n - 1); d <= p.n - 1; ++d) {
        if (q.pow(d) * p.u[i] == p.u[j]) {
          SemisimplicityWitness w;
          w.kind = SemisimplicityWitness::Kind::EigenvalueCollision;
          w.i = i;
          w.j = j;
          w.d = d;
          out.witnesses.push_back(w);
        }
      }
    }
  }
  out.semisimple = out.witnesses.empty();
  return out;
}

VarsigmaZeroStructure varsigma_zero_structure(long ell, long n) {
  if (ell < 1 || n < 1) throw InvalidArgument("ell and n must be positive");
  VarsigmaZeroStructure s;
  s.truncation_order = ell;
  s.tensor_factors = n;
  s.symmetric_group_rank = n;
  Integer dim;
  mpz_pow_ui(dim.get_mpz_t(), Integer(ell).get_mpz_t(), static_cast<unsigned long>(n));
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
  s.dimension = dim * fact;
  return s;
}

bool is_regular(const VarsigmaQuiver& v, long n) {
  return is_semisimple(presentation_from_hecke_params(hecke_from_kappa(kappa_wreath(v, n)))).semisimple;
}

}  // namespace cherednik
