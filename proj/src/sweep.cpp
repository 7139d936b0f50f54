#include "cherednik/simplicity.hpp"

#include <omp.h>

#include <random>

namespace cherednik {

namespace {

std::mt19937_64 case_engine(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

// Half of the cases share one denominator so integer differences are common.
std::vector<Rational> random_entries(std::mt19937_64& rng, long ell, long max_den) {
  std::uniform_int_distribution<long> den_dist(1, max_den);
  const bool shared = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
  const long common = den_dist(rng);
  std::vector<Rational> out;
  for (long i = 0; i < ell; ++i) {
    const long den = shared ? common : den_dist(rng);
    std::uniform_int_distribution<long> num_dist(-2 * den, 2 * den);
    out.emplace_back(num_dist(rng), den);
  }
  return out;
}

void accumulate(SweepStats& s, const KappaZl& k) {
  const bool h = h_simple_cyclic(k).simple;
  const bool a = a_simple_cyclic(k).simple;
  const OracleVerdict o = standard_module_oracle(k);
  s.cases += 1;
  s.h_mismatches += h != o.h_simple;
  s.a_mismatches += a != o.a_simple;
  s.h_simple += h;
  s.a_simple += a;
  s.h_implies_a_failures += h && !a;
}

}  // namespace

KappaZl random_kappa(std::uint64_t seed, std::uint64_t index, long max_ell, long max_den) {
  auto rng = case_engine(seed, index);
  const long ell = std::uniform_int_distribution<long>(1, max_ell)(rng);
  return KappaZl(random_entries(rng, ell, max_den));
}

VarsigmaQuiver random_varsigma(std::uint64_t seed, std::uint64_t index, long max_ell, long max_den) {
  auto rng = case_engine(seed ^ 0x5bd1e995u, index);
  const long ell = std::uniform_int_distribution<long>(1, max_ell)(rng);
  return VarsigmaQuiver(random_entries(rng, ell, max_den));
}

SweepStats oracle_sweep_serial(std::uint64_t cases, std::uint64_t seed, long max_ell, long max_den) {
  SweepStats s;
  for (std::uint64_t c = 0; c < cases; ++c) accumulate(s, random_kappa(seed, c, max_ell, max_den));
  return s;
}

SweepStats oracle_sweep_parallel(std::uint64_t cases, std::uint64_t seed, long max_ell, long max_den) {
  std::uint64_t n = 0, hm = 0, am = 0, hs = 0, as = 0, ha = 0;
  const auto total = static_cast<long long>(cases);
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : n, hm, am, hs, as, ha)
  for (long long c = 0; c < total; ++c) {
    SweepStats local;
    accumulate(local, random_kappa(seed, static_cast<std::uint64_t>(c), max_ell, max_den));
    n += local.cases;
    hm += local.h_mismatches;
    am += local.a_mismatches;
    hs += local.h_simple;
    as += local.a_simple;
    ha += local.h_implies_a_failures;
  }
  return SweepStats{n, hm, am, hs, as, ha};
}

FormSweepStats form_sweep(std::uint64_t cases, std::uint64_t seed, long max_ell, long max_den) {
  FormSweepStats s;
  for (std::uint64_t c = 0; c < cases; ++c) {
    const VarsigmaQuiver v = random_varsigma(seed, c, max_ell, max_den);
    const bool direct = a_simple_varsigma(v).simple;
    s.cases += 1;
    s.mismatches += direct != a_simple_cyclic(kappa_rank1(v)).simple;
    s.simple += direct;
  }
  return s;
}

}  // namespace cherednik
