#pragma once

#include "cherednik/params.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace cherednik {

// (i, m or j, offending value). For the varsigma form: (i, j, s_i - s_j).
struct Witness {
  long index = 0;
  Integer step;
  Rational value;
};

struct SimplicityCheck {
  bool simple = true;
  std::vector<Witness> witnesses;
};

SimplicityCheck h_simple_cyclic(const KappaZl& k);
SimplicityCheck a_simple_cyclic(const KappaZl& k);
SimplicityCheck a_simple_varsigma(const VarsigmaQuiver& v);
// Throws PreconditionViolation unless kappa00 = kappa01.
SimplicityCheck a_simple_wreath(const KappaWreath& k);

struct StandardModuleReport {
  long tau_index = 0;
  std::optional<Integer> dim_L;  // empty: infinite
  bool e_nonzero = false;
};

struct OracleVerdict {
  std::vector<StandardModuleReport> reports;
  bool h_simple = true;
  bool a_simple = true;
};

OracleVerdict standard_module_oracle(const KappaZl& k);

struct WeightedLineResult {
  KappaZl kappa_left;   // s = (-1/3, -1)
  KappaZl kappa_right;  // s = (1/3, 1)
  bool left_simple = false;
  bool right_simple = false;
};

WeightedLineResult weighted_line_example();
std::pair<bool, bool> reproduce_weighted_line();

// Deterministic random kappa for sweep case `index`.
KappaZl random_kappa(std::uint64_t seed, std::uint64_t index, long max_ell, long max_den);
VarsigmaQuiver random_varsigma(std::uint64_t seed, std::uint64_t index, long max_ell, long max_den);

struct SweepStats {
  std::uint64_t cases = 0;
  std::uint64_t h_mismatches = 0;
  std::uint64_t a_mismatches = 0;
  std::uint64_t h_simple = 0;
  std::uint64_t a_simple = 0;
  std::uint64_t h_implies_a_failures = 0;

  friend bool operator==(const SweepStats&, const SweepStats&) = default;
};

// Closed form against the oracle on `cases` random kappa values.
SweepStats oracle_sweep_serial(std::uint64_t cases, std::uint64_t seed, long max_ell = 6, long max_den = 12);
SweepStats oracle_sweep_parallel(std::uint64_t cases, std::uint64_t seed, long max_ell = 6, long max_den = 12);

struct FormSweepStats {
  std::uint64_t cases = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t simple = 0;
};

// a_simple_varsigma against a_simple_cyclic(kappa_rank1(.)).
FormSweepStats form_sweep(std::uint64_t cases, std::uint64_t seed, long max_ell = 8, long max_den = 12);

}  // namespace cherednik
