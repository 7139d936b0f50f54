#pragma once

#include "cherednik/rational.hpp"

#include <random>
#include <vector>

namespace testing_support {

inline cherednik::Rational random_rational(std::mt19937_64& rng, long max_den, long span = 2) {
  const long den = std::uniform_int_distribution<long>(1, max_den)(rng);
  const long num = std::uniform_int_distribution<long>(-span * den, span * den)(rng);
  return cherednik::Rational(num, den);
}

inline std::vector<cherednik::Rational> random_rationals(std::mt19937_64& rng, long count, long max_den,
                                                         long span = 2) {
  std::vector<cherednik::Rational> out;
  for (long i = 0; i < count; ++i) out.push_back(random_rational(rng, max_den, span));
  return out;
}

inline long random_long(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

}  // namespace testing_support
