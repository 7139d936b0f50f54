#include "cherednik/weyl.hpp"

#include "cherednik/errors.hpp"

#include <numeric>
#include <sstream>

namespace cherednik {

bool GradedLex::operator()(const WeylExponents& a, const WeylExponents& b) const {
  const int da = exponent_degree(a), db = exponent_degree(b);
  if (da != db) return da < db;
  return a < b;
}

int exponent_degree(const WeylExponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

std::vector<int> euler_weight(const WeylExponents& e) {
  const std::size_t k = e.size() / 2;
  std::vector<int> w(k);
  for (std::size_t i = 0; i < k; ++i) w[i] = e[i] - e[k + i];
  return w;
}

WeylElement::WeylElement(int vars) : vars_(vars) {
  if (vars < 1) throw InvalidArgument("Weyl algebra needs at least one variable");
}

WeylElement WeylElement::constant(int vars, const Rational& c) {
  WeylElement out(vars);
  out.add_term(WeylExponents(2 * vars, 0), c);
  return out;
}

WeylElement WeylElement::x(int vars, int i) {
  WeylExponents e(2 * vars, 0);
  e.at(i) = 1;
  return from_exponents(vars, e);
}

WeylElement WeylElement::d(int vars, int i) {
  WeylExponents e(2 * vars, 0);
  e.at(vars + i) = 1;
  return from_exponents(vars, e);
}

WeylElement WeylElement::monomial(int vars, const std::vector<int>& xe, const std::vector<int>& de,
                                  const Rational& c) {
  if (static_cast<int>(xe.size()) != vars || static_cast<int>(de.size()) != vars)
    throw VarCountMismatch("exponent vector length does not match variable count");
  WeylExponents e(xe);
  e.insert(e.end(), de.begin(), de.end());
  return from_exponents(vars, e, c);
}

WeylElement WeylElement::from_exponents(int vars, const WeylExponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != 2 * vars) throw VarCountMismatch("exponent vector length mismatch");
  for (int v : e)
    if (v < 0) throw InvalidArgument("negative exponent in Weyl element");
  WeylElement out(vars);
  out.add_term(e, c);
  return out;
}

int WeylElement::degree() const {
  return terms_.empty() ? -1 : exponent_degree(terms_.rbegin()->first);
}

bool WeylElement::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto w = euler_weight(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (euler_weight(e) != w) return false;
  return true;
}

void WeylElement::add_term(const WeylExponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

namespace {

std::string monomial_str(const WeylExponents& e, int vars) {
  std::string out;
  auto factor = [&](char sym, int i, int p) {
    if (p == 0) return;
    if (!out.empty()) out += '*';
    out += sym;
    out += std::to_string(i);
    if (p > 1) out += "^" + std::to_string(p);
  };
  for (int i = 0; i < vars; ++i) factor('x', i, e[i]);
  for (int i = 0; i < vars; ++i) factor('d', i, e[vars + i]);
  return out;
}

}  // namespace

std::string WeylElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rational& c = it->second;
    const std::string mono = monomial_str(it->first, vars_);
    const Rational mag = c.abs();
    if (first)
      out += c.sign() < 0 ? "-" : "";
    else
      out += c.sign() < 0 ? " - " : " + ";
    if (mono.empty())
      out += mag.str();
    else if (mag == Rational(1))
      out += mono;
    else
      out += mag.str() + "*" + mono;
    first = false;
  }
  return out;
}

void WeylElement::check_vars(const WeylElement& o) const {
  if (vars_ != o.vars_)
    throw VarCountMismatch("variable counts differ: " + std::to_string(vars_) + " vs " + std::to_string(o.vars_));
}

WeylElement WeylElement::operator-() const {
  WeylElement out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
  check_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
  check_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

WeylElement& WeylElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

namespace {

Integer binomial(int n, int k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

// c!/(c-t)!
Integer falling(int c, int t) {
  Integer out = 1;
  for (int s = 0; s < t; ++s) out *= c - s;
  return out;
}

// d^b x^c = sum_t C(b,t) c!/(c-t)! x^{c-t} d^{b-t}, applied slot by slot.
void expand_product(const WeylExponents& a, const WeylExponents& b, int vars, int slot, WeylExponents& cur,
                    const Integer& coeff, const Rational& scale, WeylElement& out) {
  if (slot == vars) {
    out.add_term(cur, scale * Rational(coeff));
    return;
  }
  const int beta = a[vars + slot], gamma = b[slot];
  for (int t = 0; t <= std::min(beta, gamma); ++t) {
    cur[slot] = a[slot] + gamma - t;
    cur[vars + slot] = beta - t + b[vars + slot];
    expand_product(a, b, vars, slot + 1, cur, coeff * binomial(beta, t) * falling(gamma, t), scale, out);
  }
}

}  // namespace

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b) {
  if (a.vars() != b.vars())
    throw VarCountMismatch("variable counts differ: " + std::to_string(a.vars()) + " vs " +
                           std::to_string(b.vars()));
  const int k = a.vars();
  WeylElement out(k);
  WeylExponents cur(2 * k);
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) expand_product(ea, eb, k, 0, cur, Integer(1), ca * cb, out);
  return out;
}

WeylElement commutator(const WeylElement& a, const WeylElement& b) { return weyl_mul(a, b) - weyl_mul(b, a); }

WeylElement weyl_pow(const WeylElement& a, unsigned k) {
  WeylElement out = WeylElement::constant(a.vars(), Rational(1));
  for (unsigned i = 0; i < k; ++i) out = weyl_mul(out, a);
  return out;
}

WeylElement euler_operator(int vars, int i) { return WeylElement::x(vars, i) * WeylElement::d(vars, i); }

WeylElement delta_operator(int vars) {
  return WeylElement::monomial(vars, std::vector<int>(vars, 0), std::vector<int>(vars, 1));
}

}  // namespace cherednik
