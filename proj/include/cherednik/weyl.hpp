#pragma once

#include "cherednik/rational.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace cherednik {

// x-exponents followed by d-exponents, length 2k.
using WeylExponents = std::vector<int>;

// Graded lexicographic on the concatenated (x, d) exponent vector.
struct GradedLex {
  bool operator()(const WeylExponents& a, const WeylExponents& b) const;
};

int exponent_degree(const WeylExponents& e);

// Normal-ordered element of the Weyl algebra in k variables, x's left of d's.
class WeylElement {
 public:
  using Terms = std::map<WeylExponents, Rational, GradedLex>;

  explicit WeylElement(int vars = 1);

  static WeylElement constant(int vars, const Rational& c);
  static WeylElement x(int vars, int i);
  static WeylElement d(int vars, int i);
  static WeylElement monomial(int vars, const std::vector<int>& xe, const std::vector<int>& de,
                              const Rational& c = Rational(1));
  static WeylElement from_exponents(int vars, const WeylExponents& e, const Rational& c = Rational(1));

  int vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Bernstein degree; -1 for zero.
  int degree() const;
  // True when every term has the same Euler weight (x-exponent minus d-exponent per slot).
  bool is_homogeneous() const;

  void add_term(const WeylExponents& e, const Rational& c);

  // Highest term first, e.g. "x0*d0 - 3/2*x1^2 + 1".
  std::string str() const;

  WeylElement operator-() const;
  WeylElement& operator+=(const WeylElement& o);
  WeylElement& operator-=(const WeylElement& o);
  WeylElement& operator*=(const Rational& c);
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  friend WeylElement operator*(WeylElement a, const Rational& c) { return a *= c; }
  friend WeylElement operator*(const Rational& c, WeylElement a) { return a *= c; }
  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

 private:
  void check_vars(const WeylElement& o) const;

  int vars_;
  Terms terms_;
};

std::vector<int> euler_weight(const WeylExponents& e);

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b);
inline WeylElement operator*(const WeylElement& a, const WeylElement& b) { return weyl_mul(a, b); }
WeylElement commutator(const WeylElement& a, const WeylElement& b);
WeylElement weyl_pow(const WeylElement& a, unsigned k);

// Grammar: x0..x9, d0..d9, integers, "a/b", + - * ^ and parentheses.
WeylElement parse_weyl(std::string_view text, int vars);
// One more than the largest variable index mentioned; at least 1.
int weyl_vars_needed(std::string_view text);

// x_i d_i
WeylElement euler_operator(int vars, int i);
// d_0 ... d_{k-1}
WeylElement delta_operator(int vars);

}  // namespace cherednik
