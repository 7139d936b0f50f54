#pragma once

#include "cherednik/linalg.hpp"
#include "cherednik/weyl.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cherednik {

enum class MembershipVerdict { Member, Inconclusive };

std::string to_string(MembershipVerdict v);

struct CertificateTerm {
  WeylElement multiplier;
  std::size_t generator = 0;
};

struct MembershipCertificate {
  MembershipVerdict verdict = MembershipVerdict::Inconclusive;
  int bound_used = 0;
  std::vector<CertificateTerm> combination;

  bool is_member() const { return verdict == MembershipVerdict::Member; }

  // "verdict Member", "bound 6", then one "(multiplier) ⊗ index" line per pair.
  std::string serialize() const;
  static MembershipCertificate deserialize(std::string_view text, int vars);
};

// Default Bernstein bound: deg(target) + 4.
int default_bound(const WeylElement& target);

// Searches span{ m*g : deg(m*g) <= bound } for target. Inconclusive never means non-membership.
MembershipCertificate ideal_member(const WeylElement& target, const std::vector<WeylElement>& gens, int bound,
                                   Execution exec = Execution::Serial);

// sum multiplier * gens[index]
WeylElement replay(const MembershipCertificate& cert, const std::vector<WeylElement>& gens);
bool replays_to(const MembershipCertificate& cert, const std::vector<WeylElement>& gens, const WeylElement& target);

struct CasimirReport {
  WeylElement E{2}, F{2}, H{2}, omega{2};
  bool he_relation = false;  // [H,E] = 2E
  bool hf_relation = false;  // [H,F] = -2F
  MembershipCertificate omega_plus_one;
  bool omega_plus_one_replays = false;
  int sanity_bound = 8;
  MembershipCertificate omega_alone;  // expected Inconclusive
  bool ok = false;
};

// E = x0 x1, F = -d0 d1, H = [E,F], Omega = H^2 + 2H + 4FE, target Omega + 1 in D*nabla.
CasimirReport casimir_check(int bound);

struct LatticeLine {
  std::string label;
  std::string ideal;
  WeylElement target{2};
  std::vector<WeylElement> gens;
  bool expect_member = true;
  MembershipCertificate cert;
  bool ok = false;
};

struct LatticeReport {
  int bound = 0;
  std::vector<LatticeLine> lines;
  bool ok = false;
};

// I = (nabla, Delta), J0 = (x0d0, x1d1, d0d1), J1 = (d0, x1d1), J2 = (x0d0, d1), Jinf = (d0, d1).
LatticeReport verify_section2_lattice(int bound);

}  // namespace cherednik
