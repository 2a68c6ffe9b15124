#include "czds/diffop.hpp"

#include <stdexcept>

#include "czds/bases.hpp"

namespace czds {

void DiffOp::put(unsigned k, Poly g) {
  if (g.is_zero()) {
    terms_.erase(k);
  } else {
    terms_[k] = std::move(g);
  }
}

DiffOp DiffOp::term(const Poly& g, unsigned k) {
  DiffOp L;
  L.put(k, g);
  return L;
}

Poly DiffOp::apply(const Poly& p) const {
  Poly sum = Poly::zero();
  for (const auto& [k, g] : terms_) sum += g * derivative(p, k);
  return sum;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  for (const auto& [k, g] : o.terms_) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, g);
    } else {
      it->second += g;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

DiffOp operator-(const DiffOp& a, const DiffOp& b) {
  DiffOp out = a;
  out += Rational(-1) * b;
  return out;
}

DiffOp operator*(const Rational& s, const DiffOp& L) {
  DiffOp out;
  if (s == 0) return out;
  for (const auto& [k, g] : L.terms_) out.terms_.emplace(k, s * g);
  return out;
}

DiffOp DiffOp::pow(unsigned e) const {
  DiffOp acc = DiffOp::identity();
  for (unsigned i = 0; i < e; ++i) acc = compose(acc, *this);
  return acc;
}

namespace {

// D * M in normal form: each g D^k becomes g' D^k + g D^{k+1}.
DiffOp commute_one_derivative(const DiffOp& M) {
  DiffOp out;
  for (const auto& [k, g] : M.terms()) {
    out += DiffOp::term(derivative(g), k);
    out += DiffOp::term(g, k + 1);
  }
  return out;
}

}  // namespace

DiffOp compose(const DiffOp& l1, const DiffOp& l2) {
  DiffOp out;
  for (const auto& [k, g] : l1.terms()) {
    DiffOp shifted = l2;
    for (unsigned i = 0; i < k; ++i) shifted = commute_one_derivative(shifted);
    for (const auto& [j, h] : shifted.terms()) out += DiffOp::term(g * h, j);
  }
  return out;
}

DiffOp shift_past_derivative(unsigned n, const DiffOp& L) {
  for (const auto& [k, g] : L.terms()) {
    if (!g.is_zero() && g.degree() > static_cast<int>(k))
      throw std::invalid_argument("degree hypothesis violated");
  }
  DiffOp out;
  const unsigned m = L.order();
  for (unsigned j = 0; j <= m; ++j) {
    Poly rj = Poly::zero();
    for (unsigned k = j; k <= m; ++k) {
      auto it = L.terms().find(k);
      if (it == L.terms().end()) continue;
      unsigned drop = k - j;
      if (drop > n) continue;  // C(n, k-j) = 0
      rj += gen_binomial(Rational(static_cast<long>(n)), drop) * derivative(it->second, drop);
    }
    if (!rj.is_zero()) out += DiffOp::term(rj, j);
  }
  return out;
}

DiffOp phi(const Rational& a) {
  return DiffOp::term(Poly{Rational(-1), Rational(0), Rational(1)}, 1) +
         DiffOp::term(Poly{Rational(0), 2 * (1 + a)}, 0);
}

DiffOp psi(const Rational& a) {
  return DiffOp::term(Poly{Rational(0), Rational(-1)}, 1) +
         DiffOp::term(Poly{-(a + 1), Rational(1)}, 0);
}

DiffOp hermite_op(const Rational& beta, const Rational& c, const Rational& d,
                  const Rational& alpha) {
  return DiffOp::term(Poly::constant(-beta), 2) + DiffOp::term(Poly{d, c}, 1) +
         DiffOp::term(Poly::constant(alpha), 0);
}

Poly laguerre_op(const Poly& q, const Rational& alpha, const Poly& p) {
  return q * derivative(p) + alpha * (derivative(q) * p);
}

Poly three_factor_op(const Poly& p, const Poly& q, const Poly& r, const Rational& alpha,
                     const Rational& beta) {
  return p * q * derivative(r) + alpha * (derivative(p) * q * r) +
         beta * (p * derivative(q) * r);
}

Poly lmgen_op(const Rational& c, const Rational& d, const Rational& beta, const Poly& p) {
  return Poly{d, c} * p - beta * derivative(p);
}

}  // namespace czds
