#ifndef CZDS_DIFFOP_HPP
#define CZDS_DIFFOP_HPP

#include <map>

#include "czds/poly.hpp"

namespace czds {

// Finite-order linear differential operator sum g_k(x) D^k in normal form:
// coefficient polynomials on the left of the derivative symbols, no zero
// coefficients stored. Equality is normal-form map equality.
class DiffOp {
 public:
  DiffOp() = default;

  static DiffOp zero() { return DiffOp{}; }
  static DiffOp identity() { return term(Poly::constant(1), 0); }
  // g(x) * D^k
  static DiffOp term(const Poly& g, unsigned k);
  // D^n
  static DiffOp derivative_op(unsigned n = 1) { return term(Poly::constant(1), n); }
  // g(x) * I
  static DiffOp mul_by(const Poly& g) { return term(g, 0); }

  const std::map<unsigned, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned order() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  // sum g_k * p^(k), exact.
  Poly apply(const Poly& p) const;

  DiffOp& operator+=(const DiffOp& o);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(const DiffOp& a, const DiffOp& b);
  friend DiffOp operator*(const Rational& s, const DiffOp& L);
  friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.terms_ == b.terms_; }

  DiffOp pow(unsigned e) const;

 private:
  std::map<unsigned, Poly> terms_;
  void put(unsigned k, Poly g);
};

// Normal form of L1 after L2 (apply L2 first), commuting one derivative
// symbol at a time via D*g = g*D + g'.
DiffOp compose(const DiffOp& l1, const DiffOp& l2);

// For L = sum g_k D^k with deg(g_k) <= k, the operator R with
// D^n L = R D^n, R_j = sum_{k>=j} C(n, k-j) g_k^{(k-j)}. Throws
// std::invalid_argument("degree hypothesis violated") otherwise.
DiffOp shift_past_derivative(unsigned n, const DiffOp& L);

// (x^2 - 1) D + 2(1+a) x I
DiffOp phi(const Rational& a);

// -x D + (x - (a+1)) I
DiffOp psi(const Rational& a);

// -beta D^2 + (cx + d) D + alpha I
DiffOp hermite_op(const Rational& beta, const Rational& c, const Rational& d,
                  const Rational& alpha);

// p -> q p' + alpha q' p
Poly laguerre_op(const Poly& q, const Rational& alpha, const Poly& p);

// p q r' + alpha p' q r + beta p q' r
Poly three_factor_op(const Poly& p, const Poly& q, const Poly& r, const Rational& alpha,
                     const Rational& beta);

// p -> (cx + d) p - beta p'
Poly lmgen_op(const Rational& c, const Rational& d, const Rational& beta, const Poly& p);

}  // namespace czds

#endif
