#ifndef CZDS_SEQUENCES_HPP
#define CZDS_SEQUENCES_HPP

#include <string>
#include <variant>
#include <vector>

#include "czds/bases.hpp"
#include "czds/diffop.hpp"
#include "czds/poly.hpp"

namespace czds {

// Symbolic descriptors of the CZDS families, evaluable at any index n.

// gamma_k = k + alpha
struct AffineShift {
  Rational alpha;
};

// gamma_k = h(k)
struct PolynomialInterp {
  Poly h;
};

// gamma_k = k(k+1+alpha+beta)
struct JacobiEigen {
  Rational alpha;
  Rational beta;
};

// gamma_n = prod_{k<w} (n(n+1+2 lambda) - k(k+1+2 lambda))^{m_k}
struct UltraProduct {
  Rational lambda;
  std::vector<unsigned> m;
};

// gamma_n = prod_{k<w} (n^2 - k^2)^{m_k}
struct ChebyTProduct {
  std::vector<unsigned> m;
};

// gamma_n = prod_{k<w} (n(n+2) - k(k+2))^{m_k}
struct ChebyUProduct {
  std::vector<unsigned> m;
};

// gamma_n = prod_{k<w} (n - k)^{m_k}
struct LaguerreProduct {
  std::vector<unsigned> m;
};

using SequenceSpec = std::variant<AffineShift, PolynomialInterp, JacobiEigen, UltraProduct,
                                  ChebyTProduct, ChebyUProduct, LaguerreProduct>;

std::string spec_name(const SequenceSpec& spec);

// Exact sequence value at index n. Product variants return 0 for n < w.
Rational gamma(const SequenceSpec& spec, unsigned n);

// Expand p in the family, scale coefficient k by gamma_k, recombine.
Poly diagonal_apply(const SequenceSpec& spec, const BasisFamily& family, const Poly& p);

// The differential representation of the diagonal operator, when one exists:
// apply(operator_form(spec, family), p) = diagonal_apply(spec, family, p).
// Throws std::invalid_argument("no operator form") for unsupported pairs.
DiffOp operator_form(const SequenceSpec& spec, const BasisFamily& family);

// The family the spec's CZDS claim is stated for (used by the CLI and the
// verification campaigns as the default basis).
BasisFamily default_family(const SequenceSpec& spec);

}  // namespace czds

#endif
