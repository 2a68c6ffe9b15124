#include "czds/sequences.hpp"

#include <stdexcept>

namespace czds {

namespace {

Rational product_gamma(const Rational& eig_n, const std::vector<unsigned>& m,
                       const Rational& two_lambda) {
  // prod_{k<w} (eig_n - k(k+1+2 lambda))^{m_k}
  Rational acc(1);
  for (std::size_t k = 0; k < m.size(); ++k) {
    Rational kk(static_cast<long>(k));
    Rational factor = eig_n - kk * (kk + 1 + two_lambda);
    for (unsigned e = 0; e < m[k]; ++e) acc *= factor;
  }
  return acc;
}

Rational eigenvalue(const Rational& n, const Rational& two_lambda) {
  return n * (n + 1 + two_lambda);
}

// prod_k [ (F_{base+k} D)^{m_k - 1} F_{base+k} ] D^w for F in {phi, psi}.
DiffOp product_operator(DiffOp (*factor)(const Rational&), const Rational& base,
                        const std::vector<unsigned>& m) {
  if (m.empty()) throw std::invalid_argument("empty exponent list");
  DiffOp acc = DiffOp::identity();
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m[k] == 0) throw std::invalid_argument("exponent must be positive");
    DiffOp fk = factor(base + Rational(static_cast<long>(k)));
    DiffOp fkd = compose(fk, DiffOp::derivative_op());
    acc = compose(acc, compose(fkd.pow(m[k] - 1), fk));
  }
  return compose(acc, DiffOp::derivative_op(static_cast<unsigned>(m.size())));
}

// h evaluated at an operator argument, by Horner with composition.
DiffOp horner_at_operator(const Poly& h, const DiffOp& e) {
  DiffOp acc = DiffOp::zero();
  for (auto it = h.coeffs().rbegin(); it != h.coeffs().rend(); ++it)
    acc = compose(acc, e) + DiffOp::term(Poly::constant(*it), 0);
  return acc;
}

}  // namespace

std::string spec_name(const SequenceSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, AffineShift>) return "affine-shift";
        if constexpr (std::is_same_v<T, PolynomialInterp>) return "polynomial-interp";
        if constexpr (std::is_same_v<T, JacobiEigen>) return "jacobi-eigen";
        if constexpr (std::is_same_v<T, UltraProduct>) return "ultra-product";
        if constexpr (std::is_same_v<T, ChebyTProduct>) return "cheby-t-product";
        if constexpr (std::is_same_v<T, ChebyUProduct>) return "cheby-u-product";
        if constexpr (std::is_same_v<T, LaguerreProduct>) return "laguerre-product";
      },
      spec);
}

Rational gamma(const SequenceSpec& spec, unsigned n) {
  const Rational rn(static_cast<long>(n));
  return std::visit(
      [&](const auto& s) -> Rational {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, AffineShift>) {
          return rn + s.alpha;
        } else if constexpr (std::is_same_v<T, PolynomialInterp>) {
          return s.h.evaluate(rn);
        } else if constexpr (std::is_same_v<T, JacobiEigen>) {
          return rn * (rn + 1 + s.alpha + s.beta);
        } else if constexpr (std::is_same_v<T, UltraProduct>) {
          return product_gamma(eigenvalue(rn, 2 * s.lambda), s.m, 2 * s.lambda);
        } else if constexpr (std::is_same_v<T, ChebyTProduct>) {
          return product_gamma(eigenvalue(rn, -1), s.m, -1);
        } else if constexpr (std::is_same_v<T, ChebyUProduct>) {
          return product_gamma(eigenvalue(rn, 1), s.m, 1);
        } else {
          // LaguerreProduct: prod (n - k)^{m_k}
          Rational acc(1);
          for (std::size_t k = 0; k < s.m.size(); ++k)
            for (unsigned e = 0; e < s.m[k]; ++e) acc *= rn - Rational(static_cast<long>(k));
          return acc;
        }
      },
      spec);
}

Poly diagonal_apply(const SequenceSpec& spec, const BasisFamily& family, const Poly& p) {
  std::vector<Rational> d = expand_in_basis(p, family);
  for (std::size_t k = 0; k < d.size(); ++k) d[k] *= gamma(spec, static_cast<unsigned>(k));
  return combine_in_basis(d, family);
}

DiffOp operator_form(const SequenceSpec& spec, const BasisFamily& family) {
  using Tag = BasisFamily::Tag;
  return std::visit(
      [&](const auto& s) -> DiffOp {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, AffineShift>) {
          if (family.tag() == Tag::Standard)
            return DiffOp::term(Poly::x(), 1) + DiffOp::term(Poly::constant(s.alpha), 0);
          if (family.tag() == Tag::Hermite)
            return hermite_op(Rational(1, 2), 1, 0, s.alpha);
          throw std::invalid_argument("no operator form");
        } else if constexpr (std::is_same_v<T, PolynomialInterp>) {
          if (family.tag() == Tag::Standard)
            return horner_at_operator(s.h, DiffOp::term(Poly::x(), 1));
          if (family.tag() == Tag::Hermite)
            return horner_at_operator(s.h, hermite_op(Rational(1, 2), 1, 0, 0));
          throw std::invalid_argument("no operator form");
        } else if constexpr (std::is_same_v<T, JacobiEigen>) {
          DiffOp first = DiffOp::term(Poly{Rational(-1), Rational(0), Rational(1)}, 1) +
                         DiffOp::term(Poly{s.alpha - s.beta, 2 + s.alpha + s.beta}, 0);
          return compose(first, DiffOp::derivative_op());
        } else if constexpr (std::is_same_v<T, UltraProduct>) {
          return product_operator(&phi, s.lambda, s.m);
        } else if constexpr (std::is_same_v<T, ChebyTProduct>) {
          return product_operator(&phi, Rational(-1, 2), s.m);
        } else if constexpr (std::is_same_v<T, ChebyUProduct>) {
          return product_operator(&phi, Rational(1, 2), s.m);
        } else {
          // LaguerreProduct: the basis parameter comes from the family.
          if (family.tag() != Tag::GenLaguerre) throw std::invalid_argument("no operator form");
          return product_operator(&psi, family.alpha(), s.m);
        }
      },
      spec);
}

BasisFamily default_family(const SequenceSpec& spec) {
  return std::visit(
      [](const auto& s) -> BasisFamily {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, AffineShift> || std::is_same_v<T, PolynomialInterp>) {
          return BasisFamily::standard();
        } else if constexpr (std::is_same_v<T, JacobiEigen>) {
          return BasisFamily::jacobi(s.alpha, s.beta);
        } else if constexpr (std::is_same_v<T, UltraProduct>) {
          return BasisFamily::ultraspherical(s.lambda);
        } else if constexpr (std::is_same_v<T, ChebyTProduct>) {
          return BasisFamily::chebyshev_t();
        } else if constexpr (std::is_same_v<T, ChebyUProduct>) {
          return BasisFamily::chebyshev_u();
        } else {
          return BasisFamily::gen_laguerre(0);
        }
      },
      spec);
}

}  // namespace czds
