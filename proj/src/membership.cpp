#include "cherednik/membership.hpp"

#include "cherednik/errors.hpp"

#include <map>
#include <sstream>

namespace cherednik {

std::string to_string(MembershipVerdict v) { return v == MembershipVerdict::Member ? "Member" : "Inconclusive"; }

int default_bound(const WeylElement& target) { return std::max(target.degree(), 0) + 4; }

namespace {

const char* const kTensor = " \xE2\x8A\x97 ";

void monomials_upto(int slots, int budget, WeylExponents& cur, int slot, std::vector<WeylExponents>& out) {
  if (slot == slots) {
    out.push_back(cur);
    return;
  }
  for (int p = 0; p <= budget; ++p) {
    cur[slot] = p;
    monomials_upto(slots, budget - p, cur, slot + 1, out);
  }
  cur[slot] = 0;
}

struct Candidate {
  std::size_t generator;
  WeylExponents multiplier;
  WeylElement product;
};

// Solves one block; appends multiplier contributions on success.
bool solve_block(const WeylElement& target, const std::vector<Candidate>& cands, Execution exec,
                 std::vector<WeylElement>& multipliers) {
  std::map<WeylExponents, std::size_t, GradedLex> rows;
  for (const auto& [e, c] : target.terms()) rows.emplace(e, 0);
  for (const auto& cand : cands)
    for (const auto& [e, c] : cand.product.terms()) rows.emplace(e, 0);
  std::size_t r = 0;
  for (auto& [e, idx] : rows) idx = r++;

  DenseMatrix a(rows.size(), cands.size());
  for (std::size_t col = 0; col < cands.size(); ++col)
    for (const auto& [e, c] : cands[col].product.terms()) a.at(rows.at(e), col) = c;
  std::vector<Rational> b(rows.size());
  for (const auto& [e, c] : target.terms()) b[rows.at(e)] = c;

  const LinearSolution sol = solve_exact(a, b, exec);
  if (!sol.consistent) return false;
  const int vars = target.vars();
  for (std::size_t col = 0; col < cands.size(); ++col) {
    if (sol.x[col].is_zero()) continue;
    multipliers[cands[col].generator] += WeylElement::from_exponents(vars, cands[col].multiplier, sol.x[col]);
  }
  return true;
}

}  // namespace

MembershipCertificate ideal_member(const WeylElement& target, const std::vector<WeylElement>& gens, int bound,
                                   Execution exec) {
  const int vars = target.vars();
  for (const auto& g : gens)
    if (g.vars() != vars) throw VarCountMismatch("generator and target variable counts differ");
  if (bound < target.degree())
    throw BoundTooSmall("bound " + std::to_string(bound) + " is below the target degree " +
                        std::to_string(target.degree()));

  MembershipCertificate cert;
  cert.bound_used = bound;
  if (target.is_zero()) {
    cert.verdict = MembershipVerdict::Member;
    return cert;
  }

  bool homogeneous = true;
  for (const auto& g : gens) homogeneous = homogeneous && g.is_homogeneous();

  std::vector<WeylExponents> monos;
  {
    WeylExponents cur(2 * vars, 0);
    monomials_upto(2 * vars, bound, cur, 0, monos);
  }

  // Target components keyed by Euler weight; a single block when generators are not homogeneous.
  std::map<std::vector<int>, WeylElement> blocks;
  for (const auto& [e, c] : target.terms()) {
    const auto key = homogeneous ? euler_weight(e) : std::vector<int>{};
    blocks.try_emplace(key, vars).first->second.add_term(e, c);
  }

  std::vector<WeylElement> multipliers(gens.size(), WeylElement(vars));
  for (const auto& [weight, component] : blocks) {
    std::vector<Candidate> cands;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      const WeylElement& g = gens[gi];
      if (g.is_zero() || g.degree() > bound) continue;
      const int budget = bound - g.degree();
      const auto gw = homogeneous ? euler_weight(g.terms().begin()->first) : std::vector<int>{};
      for (const auto& m : monos) {
        if (exponent_degree(m) > budget) continue;
        if (homogeneous) {
          auto mw = euler_weight(m);
          for (std::size_t i = 0; i < mw.size(); ++i) mw[i] += gw[i];
          if (mw != weight) continue;
        }
        cands.push_back({gi, m, weyl_mul(WeylElement::from_exponents(vars, m), g)});
      }
    }
    if (cands.empty() || !solve_block(component, cands, exec, multipliers)) return cert;
  }

  cert.verdict = MembershipVerdict::Member;
  for (std::size_t gi = 0; gi < gens.size(); ++gi)
    if (!multipliers[gi].is_zero()) cert.combination.push_back({multipliers[gi], gi});
  return cert;
}

WeylElement replay(const MembershipCertificate& cert, const std::vector<WeylElement>& gens) {
  if (gens.empty()) throw InvalidArgument("no generators");
  WeylElement sum(gens.front().vars());
  for (const auto& t : cert.combination) {
    if (t.generator >= gens.size()) throw InvalidArgument("certificate refers to a missing generator");
    sum += weyl_mul(t.multiplier, gens[t.generator]);
  }
  return sum;
}

bool replays_to(const MembershipCertificate& cert, const std::vector<WeylElement>& gens, const WeylElement& target) {
  if (!cert.is_member()) return false;
  if (cert.combination.empty()) return target.is_zero();
  return replay(cert, gens) == target;
}

std::string MembershipCertificate::serialize() const {
  std::ostringstream os;
  os << "verdict " << to_string(verdict) << "\n";
  os << "bound " << bound_used << "\n";
  for (const auto& t : combination) os << "(" << t.multiplier.str() << ")" << kTensor << t.generator << "\n";
  return os.str();
}

MembershipCertificate MembershipCertificate::deserialize(std::string_view text, int vars) {
  MembershipCertificate cert;
  std::istringstream is{std::string(text)};
  std::string line;
  auto expect = [&](const std::string& key) {
    if (!std::getline(is, line) || line.rfind(key + " ", 0) != 0) throw ParseError("expected '" + key + "' line");
    return line.substr(key.size() + 1);
  };
  const std::string v = expect("verdict");
  if (v == "Member")
    cert.verdict = MembershipVerdict::Member;
  else if (v == "Inconclusive")
    cert.verdict = MembershipVerdict::Inconclusive;
  else
    throw ParseError("unknown verdict '" + v + "'");
  try {
    cert.bound_used = std::stoi(expect("bound"));
  } catch (const std::logic_error&) {
    throw ParseError("bad bound line");
  }
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto pos = line.rfind(kTensor);
    if (pos == std::string::npos) throw ParseError("certificate line without generator index: " + line);
    const std::string idx = line.substr(pos + std::string(kTensor).size());
    if (idx.empty() || idx.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad generator index: " + idx);
    cert.combination.push_back({parse_weyl(line.substr(0, pos), vars), std::stoul(idx)});
  }
  return cert;
}

CasimirReport casimir_check(int bound) {
  CasimirReport rep;
  const int k = 2;
  const WeylElement x0 = WeylElement::x(k, 0), x1 = WeylElement::x(k, 1);
  const WeylElement d0 = WeylElement::d(k, 0), d1 = WeylElement::d(k, 1);
  const WeylElement one = WeylElement::constant(k, Rational(1));
  rep.E = x0 * x1;
  rep.F = -(d0 * d1);
  rep.H = commutator(rep.E, rep.F);
  rep.omega = rep.H * rep.H + Rational(2) * rep.H + Rational(4) * (rep.F * rep.E);
  rep.he_relation = commutator(rep.H, rep.E) == Rational(2) * rep.E;
  rep.hf_relation = commutator(rep.H, rep.F) == Rational(-2) * rep.F;

  const std::vector<WeylElement> gens{x0 * d0 - x1 * d1};
  const WeylElement target = rep.omega + one;
  rep.omega_plus_one = ideal_member(target, gens, bound);
  rep.omega_plus_one_replays = replays_to(rep.omega_plus_one, gens, target);
  rep.sanity_bound = std::max(bound, 8);
  rep.omega_alone = ideal_member(rep.omega, gens, rep.sanity_bound);
  rep.ok = rep.he_relation && rep.hf_relation && rep.omega_plus_one_replays;
  return rep;
}

LatticeReport verify_section2_lattice(int bound) {
  const int k = 2;
  const WeylElement x0 = WeylElement::x(k, 0), x1 = WeylElement::x(k, 1);
  const WeylElement d0 = WeylElement::d(k, 0), d1 = WeylElement::d(k, 1);
  const WeylElement nabla = x0 * d0 - x1 * d1;
  const WeylElement Delta = d0 * d1;
  const std::vector<std::pair<std::string, std::vector<WeylElement>>> ideals{
      {"I", {nabla, Delta}},       {"J0", {x0 * d0, x1 * d1, d0 * d1}}, {"J1", {d0, x1 * d1}},
      {"J2", {x0 * d0, d1}},       {"Jinf", {d0, d1}}};
  auto gens_of = [&](const std::string& name) -> const std::vector<WeylElement>& {
    for (const auto& [n, g] : ideals)
      if (n == name) return g;
    throw InvalidArgument("unknown ideal " + name);
  };

  LatticeReport rep;
  rep.bound = bound;
  auto add = [&](std::string label, const std::string& ideal, const WeylElement& target, bool expect) {
    LatticeLine line;
    line.label = std::move(label);
    line.ideal = ideal;
    line.target = target;
    line.gens = gens_of(ideal);
    line.expect_member = expect;
    line.cert = ideal_member(target, line.gens, std::max(bound, target.degree()));
    line.ok = expect ? replays_to(line.cert, line.gens, target) : !line.cert.is_member();
    rep.lines.push_back(std::move(line));
  };

  const std::vector<std::pair<std::string, std::string>> inclusions{
      {"I", "J0"}, {"J0", "J1"}, {"J0", "J2"}, {"J1", "Jinf"}, {"J2", "Jinf"}};
  for (const auto& [small, big] : inclusions)
    for (const auto& g : gens_of(small)) add(small + " in " + big + ": " + g.str(), big, g, true);

  const WeylElement s0 = x0 * d0;
  add("D/(d0,d1) -> J0/I, 1 -> x0*d0: d0*(x0*d0)", "I", d0 * s0, true);
  add("D/(d0,d1) -> J0/I, 1 -> x0*d0: d1*(x0*d0)", "I", d1 * s0, true);
  add("D/(x0,d1) -> J1/J0, 1 -> d0: x0*d0", "J0", x0 * d0, true);
  add("D/(x0,d1) -> J1/J0, 1 -> d0: d1*d0", "J0", d1 * d0, true);
  add("D/(x1,d0) -> J2/J0, 1 -> d1: x1*d1", "J0", x1 * d1, true);
  add("D/(x1,d0) -> J2/J0, 1 -> d1: d0*d1", "J0", d0 * d1, true);
  add("x0*d0 = x1*d1 modulo I", "I", x0 * d0 - x1 * d1, true);
  add("D/(x1,d0) -> J2/J0, 1 -> d0 (expected inconclusive): x1*d0", "J0", x1 * d0, false);
  add("D/(x1,d0) -> J2/J0, 1 -> d0 (expected inconclusive): d0*d0", "J0", d0 * d0, false);

  rep.ok = true;
  for (const auto& l : rep.lines) rep.ok = rep.ok && l.ok;
  return rep;
}

}  // namespace cherednik
