#include "cherednik/errors.hpp"
#include "cherednik/membership.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace cherednik;
using testing_support::random_long;
using testing_support::random_rational;

namespace {

const WeylElement x0 = WeylElement::x(2, 0), x1 = WeylElement::x(2, 1);
const WeylElement d0 = WeylElement::d(2, 0), d1 = WeylElement::d(2, 1);
const WeylElement nabla = x0 * d0 - x1 * d1;
const WeylElement Delta = d0 * d1;

WeylElement random_monomial(std::mt19937_64& rng, int max_deg) {
  WeylExponents e(4, 0);
  int budget = static_cast<int>(random_long(rng, 0, max_deg));
  while (budget-- > 0) ++e[random_long(rng, 0, 3)];
  return WeylElement::from_exponents(2, e, random_rational(rng, 3, 2));
}

}  // namespace

TEST_CASE("ideal_member examples") {
  const auto target = (x0 * d0 + WeylElement::constant(2, Rational(1))) * d0;
  CHECK(target == d0 * nabla + x1 * Delta);
  const auto a = ideal_member(target, {nabla, Delta}, 4);
  CHECK(a.is_member());
  CHECK(a.bound_used == 4);
  CHECK(replays_to(a, {nabla, Delta}, target));

  for (int b = 0; b <= 6; ++b) CHECK_FALSE(ideal_member(WeylElement::constant(2, Rational(1)), {d0, d1}, b).is_member());

  const auto c = ideal_member(Delta, {d0}, 2);
  REQUIRE(c.is_member());
  REQUIRE(c.combination.size() == 1);
  CHECK(c.combination[0].multiplier == d1);
  CHECK(c.combination[0].generator == 0);
}

TEST_CASE("bound below the target degree is rejected") {
  CHECK_THROWS_AS(ideal_member(Delta, {d0}, 1), BoundTooSmall);
  CHECK(default_bound(Delta) == 6);
}

TEST_CASE("constructed combinations are found and replay") {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 40; ++t) {
    std::vector<WeylElement> gens;
    const long ng = random_long(rng, 1, 3);
    for (long g = 0; g < ng; ++g) gens.push_back(random_monomial(rng, 2) + random_monomial(rng, 2));
    WeylElement target(2);
    int bound = 0;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const auto m = random_monomial(rng, 2);
      const auto p = m * gens[g];
      bound = std::max(bound, m.degree() + std::max(gens[g].degree(), 0));
      target += p;
    }
    bound = std::max(bound, target.degree());
    const auto cert = ideal_member(target, gens, bound);
    CHECK(cert.is_member());
    CHECK(replays_to(cert, gens, target));
  }
}

TEST_CASE("certificates serialize and parse back") {
  const auto a = ideal_member((x0 * d0 + WeylElement::constant(2, Rational(1))) * d0, {nabla, Delta}, 4);
  const auto text = a.serialize();
  CHECK(text.rfind("verdict Member\nbound 4\n", 0) == 0);
  const auto b = MembershipCertificate::deserialize(text, 2);
  CHECK(b.verdict == a.verdict);
  CHECK(b.bound_used == a.bound_used);
  REQUIRE(b.combination.size() == a.combination.size());
  for (std::size_t i = 0; i < a.combination.size(); ++i) {
    CHECK(b.combination[i].multiplier == a.combination[i].multiplier);
    CHECK(b.combination[i].generator == a.combination[i].generator);
  }
  const auto n = ideal_member(WeylElement::constant(2, Rational(1)), {d0, d1}, 3);
  CHECK(MembershipCertificate::deserialize(n.serialize(), 2).verdict == MembershipVerdict::Inconclusive);
  CHECK_THROWS_AS(MembershipCertificate::deserialize("verdict Maybe\nbound 2\n", 2), ParseError);
  CHECK_THROWS_AS(MembershipCertificate::deserialize("verdict Member\nbound x\n", 2), ParseError);
  CHECK_THROWS_AS(MembershipCertificate::deserialize("verdict Member\nbound 2\nd0\n", 2), ParseError);
}

TEST_CASE("parallel solver gives the same certificate") {
  const auto target = (x0 * d0 + WeylElement::constant(2, Rational(1))) * d0;
  const auto a = ideal_member(target, {nabla, Delta}, 5, Execution::Serial);
  const auto b = ideal_member(target, {nabla, Delta}, 5, Execution::Parallel);
  CHECK(a.serialize() == b.serialize());
}

TEST_CASE("casimir") {
  const auto r = casimir_check(6);
  CHECK(r.H == x0 * d0 + x1 * d1 + WeylElement::constant(2, Rational(1)));
  CHECK(r.he_relation);
  CHECK(r.hf_relation);
  CHECK(r.omega == r.H * r.H + Rational(2) * r.H + Rational(4) * (r.F * r.E));
  // Omega + 1 is the square of nabla
  CHECK(r.omega + WeylElement::constant(2, Rational(1)) == nabla * nabla);
  CHECK(r.omega_plus_one.is_member());
  CHECK(r.omega_plus_one_replays);
  CHECK(r.sanity_bound == 8);
  CHECK_FALSE(r.omega_alone.is_member());
  CHECK(r.ok);
}

TEST_CASE("ideal lattice at bound 8") {
  const auto rep = verify_section2_lattice(8);
  CHECK(rep.ok);
  CHECK(rep.lines.size() == 21);
  int expected_inconclusive = 0;
  for (const auto& l : rep.lines) {
    CHECK_MESSAGE(l.ok, l.label);
    if (!l.expect_member) {
      ++expected_inconclusive;
      CHECK_FALSE(l.cert.is_member());
    } else {
      CHECK(replays_to(l.cert, l.gens, l.target));
    }
  }
  CHECK(expected_inconclusive == 2);
  const auto c = std::find_if(rep.lines.begin(), rep.lines.end(),
                              [](const LatticeLine& l) { return l.label == "x0*d0 = x1*d1 modulo I"; });
  REQUIRE(c != rep.lines.end());
  CHECK(c->target == nabla);
}
