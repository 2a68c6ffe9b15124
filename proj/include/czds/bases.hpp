#ifndef CZDS_BASES_HPP
#define CZDS_BASES_HPP

#include <string>
#include <vector>

#include "czds/poly.hpp"

namespace czds {

// Rising factorial (a)_n = a(a+1)...(a+n-1); (a)_0 = 1.
Rational rising_factorial(const Rational& a, unsigned n);

// Generalized binomial coefficient C(a, j) = a(a-1)...(a-j+1)/j! for rational a.
Rational gen_binomial(const Rational& a, unsigned j);

// A simple-set polynomial family. Jacobi/GenLaguerre parameters and the
// ultraspherical lambda must exceed -1; Custom must supply deg(b_k) = k.
class BasisFamily {
 public:
  enum class Tag {
    Standard,
    Hermite,
    Jacobi,
    Ultraspherical,
    Legendre,
    ChebyshevT,
    ChebyshevU,
    GenLaguerre,
    Custom,
  };

  static BasisFamily standard() { return BasisFamily(Tag::Standard); }
  static BasisFamily hermite() { return BasisFamily(Tag::Hermite); }
  static BasisFamily jacobi(const Rational& alpha, const Rational& beta);
  static BasisFamily ultraspherical(const Rational& lambda);
  static BasisFamily legendre() { return BasisFamily(Tag::Legendre); }
  static BasisFamily chebyshev_t() { return BasisFamily(Tag::ChebyshevT); }
  static BasisFamily chebyshev_u() { return BasisFamily(Tag::ChebyshevU); }
  static BasisFamily gen_laguerre(const Rational& alpha);
  static BasisFamily custom(std::vector<Poly> polys);

  Tag tag() const { return tag_; }
  const Rational& alpha() const { return alpha_; }
  const Rational& beta() const { return beta_; }
  const Rational& lambda() const { return alpha_; }
  const std::vector<Poly>& custom_polys() const { return polys_; }

  std::string name() const;

  friend bool operator==(const BasisFamily&, const BasisFamily&) = default;

 private:
  explicit BasisFamily(Tag t) : tag_(t) {}
  Tag tag_;
  Rational alpha_{0};
  Rational beta_{0};
  std::vector<Poly> polys_;
};

// Standard-basis coefficients of the n-th basis element, exact. Memoized;
// safe for concurrent callers. Throws std::domain_error("parameter out of
// domain") / std::invalid_argument for bad Custom sets.
Poly basis_poly(const BasisFamily& family, unsigned n);

// Coefficients d_0..d_m with p = sum d_k b_k, by back-substitution on the
// triangular change of basis. The zero polynomial expands to the empty list.
std::vector<Rational> expand_in_basis(const Poly& p, const BasisFamily& family);

// Rebuilds sum d_k b_k.
Poly combine_in_basis(const std::vector<Rational>& coeffs, const BasisFamily& family);

}  // namespace czds

#endif
