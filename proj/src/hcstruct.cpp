#include "cherednik/hcstruct.hpp"

#include "cherednik/errors.hpp"
#include "cherednik/hecke.hpp"

#include <bit>
#include <functional>

namespace cherednik {

namespace {

void check_ell(long ell) {
  if (ell < 1 || ell > kMaxSubsetEll)
    throw InvalidArgument("ell must lie in [1, " + std::to_string(kMaxSubsetEll) + "]");
}

}  // namespace

std::string subset_label(SubsetMask J, long ell) {
  std::string out = "{";
  bool first = true;
  for (long i = 0; i < ell; ++i) {
    if (!(J >> i & 1u)) continue;
    out += (first ? "" : ",") + std::to_string(i);
    first = false;
  }
  return out + "}";
}

SubsetMask parse_subset(std::string_view text, long ell) {
  check_ell(ell);
  if (text.size() >= 2 && text.front() == '{' && text.back() == '}') text = text.substr(1, text.size() - 2);
  SubsetMask J = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto comma = text.find(',', start);
    auto tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string_view::npos)
      throw ParseError("bad subset element '" + std::string(tok) + "'");
    const long i = std::stol(std::string(tok));
    if (i >= ell) throw ParseError("subset element " + std::to_string(i) + " out of range");
    J |= SubsetMask(1) << i;
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return J;
}

std::vector<CompositionFactor> composition_multiset(long ell) {
  check_ell(ell);
  std::vector<CompositionFactor> out;
  const SubsetMask full = (SubsetMask(1) << ell) - 1;
  for (SubsetMask J = 0; J < full; ++J)
    out.push_back({J, ell - std::popcount(J), J != 0});
  return out;
}

std::uint64_t total_length(long ell) {
  if (ell < 1 || ell > 62) throw InvalidArgument("ell must lie in [1, 62]");
  return static_cast<std::uint64_t>(ell) << (ell - 1);
}

std::uint64_t torsion_count(long ell) { return total_length(ell) - static_cast<std::uint64_t>(ell); }

std::uint64_t torsion_count_alternative(long ell) {
  if (ell < 1 || ell > 62) throw InvalidArgument("ell must lie in [1, 62]");
  return static_cast<std::uint64_t>(ell - 1) << (ell - 1);
}

long localized_length(long ell, SubsetMask J) {
  check_ell(ell);
  const SubsetMask full = (SubsetMask(1) << ell) - 1;
  if (J & ~full) throw InvalidArgument("subset has elements outside [0, ell)");
  if (J == full) throw ProperSubsetRequired("J must be a proper subset of {0,...,ell-1}");
  return ell - std::popcount(J);
}

SerialProfile serial_profile(long ell) {
  if (ell < 1) throw InvalidArgument("ell must be positive");
  return {ell, 0, 0, ell};
}

std::vector<Partition> partitions(int n) {
  if (n < 1) throw InvalidArgument("n must be positive");
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Integer hook_length_dimension(const Partition& p) {
  int n = 0;
  for (int r : p) n += r;
  Integer num;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(n));
  Integer hooks = 1;
  for (std::size_t r = 0; r < p.size(); ++r) {
    for (int c = 0; c < p[r]; ++c) {
      int below = 0;
      for (std::size_t s = r + 1; s < p.size() && p[s] > c; ++s) ++below;
      hooks *= p[r] - c - 1 + below + 1;
    }
  }
  return num / hooks;
}

std::string partition_label(const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
  return out + ")";
}

std::vector<SummandRecord> decompose_G0(long ell, int n) {
  if (ell < 1) throw InvalidArgument("ell must be positive");
  std::vector<SummandRecord> out;
  for (auto& p : partitions(n)) out.push_back({p, hook_length_dimension(p), ell});
  return out;
}

FramedQuiverVerdict framed_quiver_verdict(const VarsigmaQuiver& v, long n) {
  FramedQuiverVerdict out;
  out.chi = chi_from_varsigma(v);
  out.chi_dot_delta = out.chi.dot_delta();
  if (!out.chi_dot_delta.is_zero()) throw DataIntegrity("chi . delta = " + out.chi_dot_delta.str() + ", expected 0");
  out.semisimple = false;
  out.regular_hecke = is_regular(v, n);
  return out;
}

VarsigmaQuiver framed_example_varsigma(long ell) {
  if (ell < 1) throw InvalidArgument("ell must be positive");
  std::vector<Rational> s;
  for (long i = 0; i < ell; ++i) s.push_back(Rational(i - ell, ell) + Rational(i == 0 ? 1 : 0));
  return VarsigmaQuiver(std::move(s), Rational(-1, 2));
}

}  // namespace cherednik
