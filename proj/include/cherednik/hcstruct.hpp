#pragma once

#include "cherednik/params.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cherednik {

using SubsetMask = std::uint32_t;

constexpr long kMaxSubsetEll = 24;

std::string subset_label(SubsetMask J, long ell);  // "{}", "{0,2}"
SubsetMask parse_subset(std::string_view text, long ell);

struct CompositionFactor {
  SubsetMask subset = 0;
  long multiplicity = 0;  // ell - |J|
  bool is_torsion = false;
};

std::vector<CompositionFactor> composition_multiset(long ell);

std::uint64_t total_length(long ell);          // ell 2^{ell-1}
std::uint64_t torsion_count(long ell);         // ell (2^{ell-1} - 1)
std::uint64_t torsion_count_alternative(long ell);  // (ell - 1) 2^{ell-1}

// Throws ProperSubsetRequired for the full set.
long localized_length(long ell, SubsetMask J);

struct SerialProfile {
  long regular_locus_length = 0;
  SubsetMask socle = 0;
  SubsetMask top = 0;
  long endomorphism_order = 0;
};

SerialProfile serial_profile(long ell);

using Partition = std::vector<int>;

// Reverse lexicographic: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions(int n);
Integer hook_length_dimension(const Partition& p);
std::string partition_label(const Partition& p);

struct SummandRecord {
  Partition partition;
  Integer multiplicity;
  long endomorphism_order = 0;
};

std::vector<SummandRecord> decompose_G0(long ell, int n);

struct FramedQuiverVerdict {
  ChiVector chi;
  Rational chi_dot_delta;
  bool semisimple = false;
  bool regular_hecke = false;
};

FramedQuiverVerdict framed_quiver_verdict(const VarsigmaQuiver& v, long n);

// s_inf = -1/2, s_i = (i - ell)/ell + [i = 0]; all kappa vanish.
VarsigmaQuiver framed_example_varsigma(long ell);

}  // namespace cherednik
