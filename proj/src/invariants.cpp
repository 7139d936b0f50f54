#include "cherednik/invariants.hpp"

#include "cherednik/errors.hpp"

#include <sstream>

namespace cherednik {

SparsePoly::SparsePoly(int vars) : vars_(vars) {
  if (vars < 1) throw InvalidArgument("polynomial needs at least one variable");
}

SparsePoly SparsePoly::constant(int vars, const Rational& c) {
  SparsePoly p(vars);
  p.add_term(std::vector<int>(vars, 0), c);
  return p;
}

SparsePoly SparsePoly::variable(int vars, int i) {
  std::vector<int> e(vars, 0);
  e.at(i) = 1;
  return monomial(vars, e);
}

SparsePoly SparsePoly::monomial(int vars, const std::vector<int>& e, const Rational& c) {
  if (static_cast<int>(e.size()) != vars) throw VarCountMismatch("exponent vector length mismatch");
  SparsePoly p(vars);
  p.add_term(e, c);
  return p;
}

int SparsePoly::degree() const { return terms_.empty() ? -1 : exponent_degree(terms_.rbegin()->first); }

const Rational& SparsePoly::leading_coefficient() const {
  if (terms_.empty()) throw InvalidArgument("zero polynomial has no leading coefficient");
  return terms_.rbegin()->second;
}

void SparsePoly::add_term(const std::vector<int>& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::string SparsePoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rational& c = it->second;
    std::string mono;
    for (int i = 0; i < vars_; ++i) {
      const int p = it->first[i];
      if (p == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "x" + std::to_string(i + 1);
      if (p > 1) mono += "^" + std::to_string(p);
    }
    const Rational mag = c.abs();
    os << (first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + "));
    if (mono.empty())
      os << mag;
    else if (mag == Rational(1))
      os << mono;
    else
      os << mag << "*" << mono;
    first = false;
  }
  return os.str();
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  if (o.vars_ != vars_) throw VarCountMismatch("polynomial variable counts differ");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  if (o.vars_ != vars_) throw VarCountMismatch("polynomial variable counts differ");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  if (a.vars_ != b.vars_) throw VarCountMismatch("polynomial variable counts differ");
  SparsePoly out(a.vars_);
  std::vector<int> e(a.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.vars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

SparsePoly SparsePoly::pow(unsigned k) const {
  SparsePoly out = constant(vars_, Rational(1));
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

SparsePoly SparsePoly::swapped(int i, int j) const {
  SparsePoly out(vars_);
  for (const auto& [exps, c] : terms_) {
    std::vector<int> e = exps;
    std::swap(e.at(i), e.at(j));
    out.add_term(e, c);
  }
  return out;
}

std::optional<Rational> proportionality(const SparsePoly& p, const SparsePoly& q) {
  if (p.is_zero() || q.is_zero() || p.vars() != q.vars()) return std::nullopt;
  const Rational c = p.leading_coefficient() / q.leading_coefficient();
  if (p == q * c) return c;
  return std::nullopt;
}

namespace {

void check_sizes(long ell, int n) {
  if (ell < 1 || n < 1) throw InvalidArgument("ell and n must be positive");
}

SparsePoly coordinate_product(int n) {
  return SparsePoly::monomial(n, std::vector<int>(n, 1));
}

SparsePoly power_difference(long ell, int n, int i, int j) {
  std::vector<int> a(n, 0), b(n, 0);
  a[i] = static_cast<int>(ell);
  b[j] = static_cast<int>(ell);
  return SparsePoly::monomial(n, a) - SparsePoly::monomial(n, b);
}

}  // namespace

SparsePoly delta_restricted(long ell, int n) {
  check_sizes(ell, n);
  SparsePoly vandermonde = SparsePoly::constant(n, Rational(1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) vandermonde = vandermonde * power_difference(ell, n, i, j);
  return coordinate_product(n).pow(static_cast<unsigned>(ell)) * vandermonde.pow(2);
}

bool delta_factorization_check(long ell, int n) {
  check_sizes(ell, n);
  SparsePoly prod = SparsePoly::constant(n, Rational(1));
  for (long i = 0; i < ell; ++i) prod = prod * coordinate_product(n);
  SparsePoly delta_inf = SparsePoly::constant(n, Rational(1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) delta_inf = delta_inf * power_difference(ell, n, i, j).pow(2);
  return prod * delta_inf == delta_restricted(ell, n);
}

// Roots omega^k have power sums p_m = l [l | m]; Newton: m e_m = sum_{i=1}^m (-1)^{i-1} e_{m-i} p_i.
SparsePoly cyclic_product(long ell, int vars, int a, int b) {
  std::vector<Rational> e(ell + 1);
  e[0] = Rational(1);
  for (long m = 1; m <= ell; ++m) {
    Rational s;
    for (long i = 1; i <= m; ++i) {
      const Rational p = i % ell == 0 ? Rational(ell) : Rational(0);
      s += (i % 2 == 1 ? Rational(1) : Rational(-1)) * e[m - i] * p;
    }
    e[m] = s / Rational(m);
  }
  SparsePoly out(vars);
  for (long m = 0; m <= ell; ++m) {
    std::vector<int> exps(vars, 0);
    exps[a] += static_cast<int>(ell - m);
    exps[b] += static_cast<int>(m);
    out.add_term(exps, (m % 2 == 0 ? Rational(1) : Rational(-1)) * e[m]);
  }
  return out;
}

SparsePoly discriminant_h(long ell, int n) {
  check_sizes(ell, n);
  SparsePoly h = SparsePoly::constant(n, Rational(1));
  if (ell > 1)
    for (int i = 0; i < n; ++i) h = h * SparsePoly::variable(n, i).pow(static_cast<unsigned>(ell));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) h = h * cyclic_product(ell, n, i, j).pow(2);
  return h;
}

WreathCharacter::WreathCharacter(long ell_, int n_, long c, int sign_) : ell(ell_), n(n_), cyclic_power(c), sign(sign_) {
  check_sizes(ell, n);
  if (c < 0 || c >= ell) throw InvalidArgument("cyclic power must lie in [0, ell)");
  if (sign != 1 && sign != -1) throw InvalidArgument("sign must be +1 or -1");
  if (n == 1 && sign != 1) throw InvalidArgument("for n = 1 the sign must be +1");
}

WreathCharacter WreathCharacter::product_of_roots(long ell, int n) {
  return {ell, n, ell > 1 ? 1 : 0, n > 1 ? -1 : 1};
}

WreathCharacter WreathCharacter::compose(const WreathCharacter& o) const {
  if (o.ell != ell || o.n != n) throw InvalidArgument("characters of different groups");
  return {ell, n, mod_floor(cyclic_power + o.cyclic_power, ell), sign * o.sign};
}

SemiinvariantExponents semiinvariant_exponents(const WreathCharacter& chi) {
  SemiinvariantExponents out;
  const long pairs = static_cast<long>(chi.n) * (chi.n - 1) / 2;
  if (chi.ell > 1) out.coordinate_class = chi.cyclic_power;
  if (chi.n > 1) out.reflection_class = chi.sign == -1 ? 1 : 0;
  out.degree = chi.n * chi.cyclic_power + (chi.sign == -1 ? chi.ell * pairs : 0);
  return out;
}

SparsePoly semiinvariant(const WreathCharacter& chi) {
  const int n = chi.n;
  SparsePoly h = coordinate_product(n).pow(static_cast<unsigned>(chi.cyclic_power));
  if (chi.sign == -1)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) h = h * power_difference(chi.ell, n, i, j);
  return h;
}

bool verify_semiinvariance(const WreathCharacter& chi) {
  const SparsePoly h = semiinvariant(chi);
  if (h.is_zero()) return false;
  if (chi.ell > 1) {
    const CyclotomicUnit omega = CyclotomicUnit::primitive(chi.ell);
    const CyclotomicUnit want = omega.pow(chi.cyclic_power);
    for (const auto& [e, c] : h.terms())
      if (omega.pow(static_cast<long>(e[0])) != want) return false;
  }
  const SparsePoly signed_h = h * Rational(chi.sign);
  for (int i = 0; i + 1 < chi.n; ++i)
    if (h.swapped(i, i + 1) != signed_h) return false;
  return true;
}

}  // namespace cherednik
