#include "czds/poly.hpp"

#include <algorithm>
#include <sstream>

namespace czds {

Poly Poly::constant(const Rational& a) {
  if (a == 0) return Poly{};
  return Poly{std::vector<Rational>{a}};
}

Poly Poly::monomial(const Rational& a, std::size_t n) {
  if (a == 0) return Poly{};
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = a;
  return Poly{std::move(c)};
}

Rational Poly::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::operator-() const {
  std::vector<Rational> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return Poly{std::move(c)};
}

Poly& Poly::operator+=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly::zero();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly{std::move(c)};
}

Poly operator*(const Rational& s, const Poly& p) {
  if (s == 0) return Poly::zero();
  std::vector<Rational> c(p.c_.size());
  for (std::size_t i = 0; i < p.c_.size(); ++i) c[i] = s * p.c_[i];
  return Poly{std::move(c)};
}

Poly Poly::pow(unsigned e) const {
  Poly acc = Poly::constant(1);
  for (unsigned i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("zero divisor");
  if (a.is_zero() || a.degree() < b.degree()) return {Poly::zero(), a};
  std::vector<Rational> rem = a.c_;
  const int db = b.degree();
  std::vector<Rational> quot(a.c_.size() - b.c_.size() + 1, Rational(0));
  for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
    if (rem[i] == 0) continue;
    Rational q = rem[i] / b.c_.back();
    quot[i - db] = q;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.c_[j];
  }
  return {Poly{std::move(quot)}, Poly{std::move(rem)}};
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw std::invalid_argument("inexact division");
  return q;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return Rational(1) / leading_coeff() * *this;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (!first) out << " + ";
    out << to_string(c_[k]);
    if (k >= 1) out << "*" << var;
    if (k >= 2) out << "^" << k;
    first = false;
  }
  return out.str();
}

Poly derivative(const Poly& p, unsigned k) {
  Poly cur = p;
  for (unsigned round = 0; round < k; ++round) {
    if (cur.is_zero() || cur.is_constant()) return Poly::zero();
    std::vector<Rational> c(cur.coeffs().size() - 1);
    for (std::size_t i = 1; i < cur.coeffs().size(); ++i)
      c[i - 1] = Rational(static_cast<long>(i)) * cur.coeffs()[i];
    cur = Poly{std::move(c)};
  }
  return cur;
}

Poly affine_substitute(const Poly& p, const Rational& a, const Rational& b) {
  if (a == 0) throw std::invalid_argument("degenerate substitution");
  Poly arg{b, a};  // a*x + b
  Poly acc = Poly::zero();
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = acc * arg + Poly::constant(*it);
  return acc;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = Poly::divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace czds
