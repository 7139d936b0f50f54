#pragma once

#include "cherednik/params.hpp"

#include <string>
#include <vector>

namespace cherednik {

struct ArikiKoikePresentation {
  long n = 1;
  std::vector<CyclotomicUnit> u;
  CyclotomicUnit q0;
  CyclotomicUnit q1;
  CyclotomicUnit normalized_q;  // -q0/q1

  long ell() const { return static_cast<long>(u.size()); }

  // Quadratic relation already in the form (L - q)(L + 1) = 0.
  static ArikiKoikePresentation normalized(long n, std::vector<CyclotomicUnit> u, const CyclotomicUnit& q);
};

ArikiKoikePresentation presentation_from_hecke_params(const HeckeParams& h);

struct SemisimplicityWitness {
  enum class Kind { QInteger, EigenvalueCollision };
  Kind kind = Kind::QInteger;
  long k = 0;  // [k]_q = 0
  long i = 0;  // q^d u_i = u_j
  long j = 0;
  long d = 0;

  std::string str() const;
};

struct SemisimplicityVerdict {
  bool semisimple = true;
  std::vector<SemisimplicityWitness> witnesses;
};

// 1 + q + ... + q^{k-1} = 0 exactly when q != 1 and q^k = 1.
bool q_integer_vanishes(const CyclotomicUnit& q, long k);

SemisimplicityVerdict is_semisimple(const ArikiKoikePresentation& p);

struct VarsigmaZeroStructure {
  long truncation_order = 1;
  long tensor_factors = 1;
  long symmetric_group_rank = 1;
  Integer dimension;
};

VarsigmaZeroStructure varsigma_zero_structure(long ell, long n);

bool is_regular(const VarsigmaQuiver& v, long n);

}  // namespace cherednik
