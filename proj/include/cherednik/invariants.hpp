#pragma once

#include "cherednik/cyclotomic.hpp"
#include "cherednik/rational.hpp"
#include "cherednik/weyl.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cherednik {

// Commutative polynomial over Q in x1..xn.
class SparsePoly {
 public:
  using Terms = std::map<std::vector<int>, Rational, GradedLex>;

  explicit SparsePoly(int vars = 1);
  static SparsePoly constant(int vars, const Rational& c);
  static SparsePoly variable(int vars, int i);  // 0-based slot, printed as x{i+1}
  static SparsePoly monomial(int vars, const std::vector<int>& e, const Rational& c = Rational(1));

  int vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for zero
  const Rational& leading_coefficient() const;

  void add_term(const std::vector<int>& e, const Rational& c);
  // Highest graded-lex term first.
  std::string str() const;

  SparsePoly operator-() const;
  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const Rational& c);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(SparsePoly a, const Rational& c) { return a *= c; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  SparsePoly pow(unsigned k) const;
  // Exchanges variables i and j.
  SparsePoly swapped(int i, int j) const;

 private:
  int vars_;
  Terms terms_;
};

// Some c with p = c q, if one exists (both nonzero).
std::optional<Rational> proportionality(const SparsePoly& p, const SparsePoly& q);

// (x1...xn)^l prod_{i<j} (xi^l - xj^l)^2
SparsePoly delta_restricted(long ell, int n);
bool delta_factorization_check(long ell, int n);

// prod_H alpha_H^{l_H}, the x_i = 0 class present only for l > 1.
SparsePoly discriminant_h(long ell, int n);

// prod_{k<l} (a - omega^k b) = a^l - b^l via power sums and Newton identities.
SparsePoly cyclic_product(long ell, int vars, int a, int b);

struct WreathCharacter {
  long ell = 1;
  int n = 1;
  long cyclic_power = 0;  // value omega^c on the first-slot generator
  int sign = 1;           // value on transpositions

  WreathCharacter() = default;
  WreathCharacter(long ell, int n, long c, int sign);

  static WreathCharacter trivial(long ell, int n) { return {ell, n, 0, 1}; }
  // Character of prod alpha_H under the substitution action f -> f o g.
  static WreathCharacter product_of_roots(long ell, int n);
  WreathCharacter compose(const WreathCharacter& o) const;
  friend bool operator==(const WreathCharacter&, const WreathCharacter&) = default;
};

struct SemiinvariantExponents {
  std::optional<long> coordinate_class;  // x_i = 0, absent when l = 1
  std::optional<int> reflection_class;   // x_i = omega^k x_j, absent when n = 1
  long degree = 0;
};

SemiinvariantExponents semiinvariant_exponents(const WreathCharacter& chi);
SparsePoly semiinvariant(const WreathCharacter& chi);
bool verify_semiinvariance(const WreathCharacter& chi);

}  // namespace cherednik
