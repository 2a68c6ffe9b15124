#include "czds/bases.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace czds {

Rational rising_factorial(const Rational& a, unsigned n) {
  Rational acc(1);
  for (unsigned i = 0; i < n; ++i) acc *= a + Rational(static_cast<long>(i));
  return acc;
}

Rational gen_binomial(const Rational& a, unsigned j) {
  Rational num(1);
  for (unsigned i = 0; i < j; ++i) num *= a - Rational(static_cast<long>(i));
  Rational fact(1);
  for (unsigned i = 2; i <= j; ++i) fact *= Rational(static_cast<long>(i));
  return num / fact;
}

BasisFamily BasisFamily::jacobi(const Rational& alpha, const Rational& beta) {
  if (alpha <= -1 || beta <= -1) throw std::domain_error("parameter out of domain");
  BasisFamily f(Tag::Jacobi);
  f.alpha_ = alpha;
  f.beta_ = beta;
  return f;
}

BasisFamily BasisFamily::ultraspherical(const Rational& lambda) {
  if (lambda <= -1) throw std::domain_error("parameter out of domain");
  BasisFamily f(Tag::Ultraspherical);
  f.alpha_ = lambda;
  f.beta_ = lambda;
  return f;
}

BasisFamily BasisFamily::gen_laguerre(const Rational& alpha) {
  if (alpha <= -1) throw std::domain_error("parameter out of domain");
  BasisFamily f(Tag::GenLaguerre);
  f.alpha_ = alpha;
  return f;
}

BasisFamily BasisFamily::custom(std::vector<Poly> polys) {
  for (std::size_t k = 0; k < polys.size(); ++k) {
    if (polys[k].is_zero() || polys[k].degree() != static_cast<int>(k))
      throw std::invalid_argument("not a simple set");
  }
  BasisFamily f(Tag::Custom);
  f.polys_ = std::move(polys);
  return f;
}

std::string BasisFamily::name() const {
  switch (tag_) {
    case Tag::Standard: return "standard";
    case Tag::Hermite: return "hermite";
    case Tag::Jacobi:
      return "jacobi(" + czds::to_string(alpha_) + "," + czds::to_string(beta_) + ")";
    case Tag::Ultraspherical: return "ultraspherical(" + czds::to_string(alpha_) + ")";
    case Tag::Legendre: return "legendre";
    case Tag::ChebyshevT: return "chebyshev-t";
    case Tag::ChebyshevU: return "chebyshev-u";
    case Tag::GenLaguerre: return "gen-laguerre(" + czds::to_string(alpha_) + ")";
    case Tag::Custom: return "custom";
  }
  return "?";
}

namespace {

// Explicit double-binomial expansion; exact for rational parameters, and
// validated elsewhere against the Jacobi differential equation.
Poly jacobi_poly(const Rational& alpha, const Rational& beta, unsigned n) {
  const Poly xm1_half{Rational(-1, 2), Rational(1, 2)};  // (x-1)/2
  const Poly xp1_half{Rational(1, 2), Rational(1, 2)};   // (x+1)/2
  Poly sum = Poly::zero();
  for (unsigned s = 0; s <= n; ++s) {
    Rational c = gen_binomial(Rational(static_cast<long>(n)) + alpha, s) *
                 gen_binomial(Rational(static_cast<long>(n)) + beta, n - s);
    sum += c * (xm1_half.pow(n - s) * xp1_half.pow(s));
  }
  return sum;
}

Poly hermite_poly(unsigned n) {
  Poly prev = Poly::constant(1);
  if (n == 0) return prev;
  Poly cur{Rational(0), Rational(2)};  // 2x
  for (unsigned k = 1; k < n; ++k) {
    // H_{k+1} = 2x H_k - 2k H_{k-1}
    Poly next = Poly{Rational(0), Rational(2)} * cur - Rational(2L * k) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly gen_laguerre_poly(const Rational& alpha, unsigned n) {
  Poly sum = Poly::zero();
  Rational kfact(1);
  for (unsigned k = 0; k <= n; ++k) {
    if (k > 0) kfact *= Rational(static_cast<long>(k));
    Rational c = gen_binomial(Rational(static_cast<long>(n)) + alpha, n - k) / kfact;
    if (k % 2 == 1) c = -c;
    sum += Poly::monomial(c, k);
  }
  return sum;
}

Poly uncached_basis_poly(const BasisFamily& family, unsigned n) {
  using Tag = BasisFamily::Tag;
  switch (family.tag()) {
    case Tag::Standard:
      return Poly::monomial(1, n);
    case Tag::Hermite:
      return hermite_poly(n);
    case Tag::Jacobi:
    case Tag::Ultraspherical:
      return jacobi_poly(family.alpha(), family.beta(), n);
    case Tag::Legendre:
      return jacobi_poly(0, 0, n);
    case Tag::ChebyshevT: {
      Rational factn(1);
      for (unsigned i = 2; i <= n; ++i) factn *= Rational(static_cast<long>(i));
      return factn / rising_factorial(Rational(1, 2), n) *
             jacobi_poly(Rational(-1, 2), Rational(-1, 2), n);
    }
    case Tag::ChebyshevU: {
      Rational factn1(1);
      for (unsigned i = 2; i <= n + 1; ++i) factn1 *= Rational(static_cast<long>(i));
      return factn1 / rising_factorial(Rational(3, 2), n) *
             jacobi_poly(Rational(1, 2), Rational(1, 2), n);
    }
    case Tag::GenLaguerre:
      return gen_laguerre_poly(family.alpha(), n);
    case Tag::Custom: {
      if (n >= family.custom_polys().size()) throw std::invalid_argument("not a simple set");
      return family.custom_polys()[n];
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

Poly basis_poly(const BasisFamily& family, unsigned n) {
  if (family.tag() == BasisFamily::Tag::Custom) return uncached_basis_poly(family, n);

  using Key = std::tuple<BasisFamily::Tag, Rational, Rational, unsigned>;
  static std::map<Key, Poly> cache;
  static std::mutex mu;
  Key key{family.tag(), family.alpha(), family.beta(), n};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Poly p = uncached_basis_poly(family, n);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::move(key), std::move(p)).first->second;
}

std::vector<Rational> expand_in_basis(const Poly& p, const BasisFamily& family) {
  if (p.is_zero()) return {};
  const int m = p.degree();
  std::vector<Rational> d(static_cast<std::size_t>(m) + 1, Rational(0));
  Poly rem = p;
  for (int k = m; k >= 0; --k) {
    if (rem.is_zero()) break;
    if (rem.degree() < k) continue;
    Poly bk = basis_poly(family, static_cast<unsigned>(k));
    d[k] = rem.leading_coeff() / bk.leading_coeff();
    rem -= d[k] * bk;
  }
  if (!rem.is_zero()) throw std::logic_error("basis expansion failed");
  return d;
}

Poly combine_in_basis(const std::vector<Rational>& coeffs, const BasisFamily& family) {
  Poly sum = Poly::zero();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    sum += coeffs[k] * basis_poly(family, static_cast<unsigned>(k));
  }
  return sum;
}

}  // namespace czds
