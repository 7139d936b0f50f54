#include "cherednik/errors.hpp"
#include "cherednik/hecke.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <complex>
#include <numbers>
#include <set>

using namespace cherednik;

namespace {

CyclotomicUnit E(long a, long b) { return cyc_from_angle(Rational(a, b)); }

ArikiKoikePresentation from_q(const CyclotomicUnit& q0, const CyclotomicUnit& q1, std::vector<CyclotomicUnit> u,
                              long n) {
  HeckeParams h;
  h.n = n;
  h.u = std::move(u);
  h.q0 = q0;
  h.q1 = q1;
  return presentation_from_hecke_params(h);
}

// Closure of the wreath generators acting on (permutation, colours).
std::size_t wreath_group_order(long ell, long n) {
  using Elt = std::pair<std::vector<long>, std::vector<long>>;
  auto compose = [&](const Elt& g, const Elt& h) {
    // (g h)(i): first h then g
    Elt out{std::vector<long>(n), std::vector<long>(n)};
    for (long i = 0; i < n; ++i) {
      out.first[i] = g.first[h.first[i]];
      out.second[i] = (h.second[i] + g.second[h.first[i]]) % ell;
    }
    return out;
  };
  Elt id{std::vector<long>(n), std::vector<long>(n, 0)};
  for (long i = 0; i < n; ++i) id.first[i] = i;
  std::vector<Elt> gens;
  Elt s0 = id;
  s0.second[0] = 1 % ell;
  gens.push_back(s0);
  for (long i = 0; i + 1 < n; ++i) {
    Elt s = id;
    std::swap(s.first[i], s.first[i + 1]);
    gens.push_back(s);
  }
  std::set<Elt> seen{id};
  std::vector<Elt> frontier{id};
  while (!frontier.empty()) {
    std::vector<Elt> next;
    for (const auto& g : frontier)
      for (const auto& s : gens) {
        Elt h = compose(s, g);
        if (seen.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace

TEST_CASE("normalized q from (q0, q1)") {
  CHECK(from_q(CyclotomicUnit::minus_one(), CyclotomicUnit::one(), {CyclotomicUnit::one()}, 1).normalized_q.is_one());
  CHECK(from_q(CyclotomicUnit::one(), CyclotomicUnit::minus_one(), {CyclotomicUnit::one()}, 1).normalized_q.is_one());
  CHECK(from_q(CyclotomicUnit::one(), CyclotomicUnit::one(), {CyclotomicUnit::one()}, 1).normalized_q ==
        CyclotomicUnit::minus_one());
  const auto p = from_q(E(1, 3), E(1, 5), {CyclotomicUnit::one()}, 1);
  CHECK(p.normalized_q == cyc_mul(cyc_from_angle(Rational(1, 2)), cyc_mul(p.q0, cyc_pow(p.q1, -1))));
}

TEST_CASE("normalized constructor") {
  const auto p = ArikiKoikePresentation::normalized(3, {CyclotomicUnit::one()}, E(1, 4));
  CHECK(p.normalized_q == E(1, 4));
  CHECK(p.q1 == CyclotomicUnit::minus_one());
  CHECK_THROWS_AS(ArikiKoikePresentation::normalized(0, {CyclotomicUnit::one()}, E(1, 4)), InvalidArgument);
  CHECK_THROWS_AS(ArikiKoikePresentation::normalized(1, {}, E(1, 4)), InvalidArgument);
}

TEST_CASE("is_semisimple examples") {
  for (long n = 1; n <= 8; ++n)
    CHECK(is_semisimple(ArikiKoikePresentation::normalized(n, {CyclotomicUnit::one()}, CyclotomicUnit::one())).semisimple);

  const auto a = is_semisimple(ArikiKoikePresentation::normalized(2, {CyclotomicUnit::one()}, CyclotomicUnit::minus_one()));
  CHECK_FALSE(a.semisimple);
  REQUIRE(a.witnesses.size() == 1);
  CHECK(a.witnesses[0].kind == SemisimplicityWitness::Kind::QInteger);
  CHECK(a.witnesses[0].k == 2);
  CHECK(a.witnesses[0].str() == "[2]_q = 0");

  for (long n = 1; n <= 4; ++n)
    for (long t = 0; t < 6; ++t)
      CHECK_FALSE(is_semisimple(ArikiKoikePresentation::normalized(n, {CyclotomicUnit::one(), CyclotomicUnit::one()},
                                                                   E(t, 6)))
                      .semisimple);

  // q^d u_i = u_j with d = 1 < n = 2
  const auto b = is_semisimple(ArikiKoikePresentation::normalized(2, {CyclotomicUnit::one(), E(1, 5)}, E(1, 5)));
  CHECK_FALSE(b.semisimple);
  CHECK(std::any_of(b.witnesses.begin(), b.witnesses.end(), [](const SemisimplicityWitness& w) {
    return w.kind == SemisimplicityWitness::Kind::EigenvalueCollision && w.i == 0 && w.j == 1 && w.d == 1;
  }));
  CHECK(is_semisimple(ArikiKoikePresentation::normalized(1, {CyclotomicUnit::one(), E(1, 5)}, E(1, 5))).semisimple);
}

TEST_CASE("q-integers vanish exactly at nontrivial roots") {
  for (long den = 1; den <= 12; ++den)
    for (long a = 0; a < den; ++a) {
      const CyclotomicUnit q = E(a, den);
      for (long k = 1; k <= 30; ++k) {
        std::complex<double> sum = 0;
        for (long j = 0; j < k; ++j) sum += std::polar(1.0, 2 * std::numbers::pi * j * a / den);
        const bool vanishes = std::abs(sum) < 1e-9;
        CHECK(q_integer_vanishes(q, k) == vanishes);
      }
    }
}

TEST_CASE("semisimplicity invariant under rotating and permuting u") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 400; ++t) {
    const long ell = testing_support::random_long(rng, 1, 4), n = testing_support::random_long(rng, 1, 4);
    const long den = testing_support::random_long(rng, 1, 8);
    std::vector<CyclotomicUnit> u;
    for (long i = 0; i < ell; ++i) u.push_back(E(testing_support::random_long(rng, 0, den - 1), den));
    const CyclotomicUnit q = E(testing_support::random_long(rng, 0, den - 1), den);
    const bool base = is_semisimple(ArikiKoikePresentation::normalized(n, u, q)).semisimple;
    const CyclotomicUnit z = E(testing_support::random_long(rng, 0, 11), 12);
    auto rotated = u;
    for (auto& x : rotated) x = x * z;
    CHECK(is_semisimple(ArikiKoikePresentation::normalized(n, rotated, q)).semisimple == base);
    std::shuffle(u.begin(), u.end(), rng);
    CHECK(is_semisimple(ArikiKoikePresentation::normalized(n, u, q)).semisimple == base);
  }
}

TEST_CASE("rank one verdict depends on q and n only") {
  for (long n = 1; n <= 50; ++n)
    CHECK(is_semisimple(ArikiKoikePresentation::normalized(n, {CyclotomicUnit::one()}, CyclotomicUnit::one())).semisimple);
  for (long den = 1; den <= 9; ++den)
    for (long a = 0; a < den; ++a)
      for (long n = 1; n <= 10; ++n) {
        const CyclotomicUnit q = E(a, den);
        const bool x = is_semisimple(ArikiKoikePresentation::normalized(n, {CyclotomicUnit::one()}, q)).semisimple;
        const bool y = is_semisimple(ArikiKoikePresentation::normalized(n, {E(3, 7)}, q)).semisimple;
        CHECK(x == y);
        CHECK(x == (q.is_one() || q.order().get_si() > n));
      }
}

TEST_CASE("varsigma_zero_structure") {
  auto a = varsigma_zero_structure(2, 1);
  CHECK(a.truncation_order == 2);
  CHECK(a.dimension == 2);
  auto b = varsigma_zero_structure(3, 1);
  CHECK(b.truncation_order == 3);
  CHECK(b.dimension == 3);
  auto c = varsigma_zero_structure(2, 2);
  CHECK(c.dimension == 8);
  CHECK(c.tensor_factors == 2);
  CHECK(c.symmetric_group_rank == 2);
  CHECK_THROWS_AS(varsigma_zero_structure(0, 2), InvalidArgument);
}

TEST_CASE("structure dimension equals the wreath group order") {
  for (long ell = 1; ell <= 3; ++ell)
    for (long n = 1; n <= 4; ++n)
      CHECK(varsigma_zero_structure(ell, n).dimension == static_cast<long>(wreath_group_order(ell, n)));
}

TEST_CASE("is_regular examples") {
  for (long ell = 1; ell <= 8; ++ell)
    for (long n = 1; n <= 5; ++n) CHECK(is_regular(VarsigmaQuiver::zero(ell), n) == (ell == 1));
  const VarsigmaQuiver v(std::vector<Rational>{Rational(0), Rational(1, 4)});
  const auto h = hecke_from_kappa(kappa_wreath(v, 1));
  CHECK(h.u[0] != h.u[1]);
  CHECK(is_regular(v, 1));
}
