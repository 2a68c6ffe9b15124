#include "czds/characterize.hpp"

#include <stdexcept>

#include "czds/zeros.hpp"

namespace czds {

CzdsCertificate characterize_standard_czds(const Poly& h) {
  if (h.is_zero()) throw std::invalid_argument("zero polynomial");

  CzdsCertificate cert;
  if (h.evaluate(0) != 0) {
    // Nonzero constants are the empty product of negative-root factors.
    if (h.is_constant()) {
      cert.kind = CzdsCertificate::Kind::AllNegative;
      return cert;
    }
    ZeroCount zc = zero_counts(h);
    if (zc.nonreal != 0) {
      cert.reason = "non-real zeros present";
      return cert;
    }
    if (count_real_roots_above(h, 0) != 0) {
      cert.reason = "positive root with h(0) != 0";
      return cert;
    }
    cert.kind = CzdsCertificate::Kind::AllNegative;
    return cert;
  }

  // h(0) = 0: strip the maximal consecutive-integer prefix x(x-1)...(x-m+1).
  Poly residual = h;
  int m = 0;
  while (true) {
    Poly factor{Rational(-m), Rational(1)};  // x - m
    auto [q, r] = Poly::divrem(residual, factor);
    if (!r.is_zero()) break;
    residual = std::move(q);
    ++m;
  }
  cert.m = m;
  cert.residual = residual;
  const Rational rm(m);
  if (!residual.is_constant()) {
    ZeroCount zc = zero_counts(residual);
    if (zc.nonreal != 0) {
      cert.reason = "residual factor has non-real zeros";
      return cert;
    }
    if (residual.evaluate(rm) == 0 || count_real_roots_above(residual, rm) != 0) {
      cert.reason = "residual root >= m";
      return cert;
    }
  }
  cert.kind = CzdsCertificate::Kind::FallingFactorial;
  return cert;
}

}  // namespace czds
