#ifndef CZDS_POLY_HPP
#define CZDS_POLY_HPP

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "czds/rational.hpp"

namespace czds {

// Dense univariate polynomial over Rational, standard basis, ascending degree.
// Invariant: the coefficient vector never ends in a zero; the zero polynomial
// is the empty vector. The zero polynomial has no numeric degree.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

  static Poly zero() { return Poly{}; }
  static Poly constant(const Rational& a);
  // x^n with the given coefficient.
  static Poly monomial(const Rational& a, std::size_t n);
  static Poly x() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  // Degree of a nonzero polynomial. Throws std::logic_error on the zero
  // polynomial; callers must branch on is_zero() first.
  int degree() const {
    if (c_.empty()) throw std::logic_error("degree of zero polynomial");
    return static_cast<int>(c_.size()) - 1;
  }

  const std::vector<Rational>& coeffs() const { return c_; }
  // Coefficient of x^k, zero beyond the degree.
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const Rational& leading_coeff() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  Rational evaluate(const Rational& x) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& s, const Poly& p);
  friend Poly operator*(const Poly& p, const Rational& s) { return s * p; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly pow(unsigned e) const;

  // Quotient and remainder with deg(rem) < deg(divisor). Throws
  // std::invalid_argument("zero divisor") when the divisor is zero.
  static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);

  // Exact division; throws std::invalid_argument if the remainder is nonzero.
  static Poly exact_div(const Poly& a, const Poly& b);

  Poly monic() const;

  std::string str(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

// k-th formal derivative; derivative(p, 0) = p.
Poly derivative(const Poly& p, unsigned k = 1);

// p(a*x + b), exact. Throws std::invalid_argument("degenerate substitution")
// when a = 0.
Poly affine_substitute(const Poly& p, const Rational& a, const Rational& b);

// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

}  // namespace czds

#endif
