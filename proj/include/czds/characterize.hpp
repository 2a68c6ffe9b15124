#ifndef CZDS_CHARACTERIZE_HPP
#define CZDS_CHARACTERIZE_HPP

#include <string>

#include "czds/poly.hpp"

namespace czds {

// Decision for the polynomial-interpolated standard-basis CZDS criterion:
// {h(k)} is a CZDS iff either h(0) != 0 and every zero of h is real and
// negative (AllNegative), or h(0) = 0 and h = x(x-1)...(x-m+1) * residual
// with every zero of the residual real and < m (FallingFactorial).
struct CzdsCertificate {
  enum class Kind { AllNegative, FallingFactorial, NotCzds };

  Kind kind = Kind::NotCzds;
  int m = 0;        // FallingFactorial only: length of the consecutive-integer prefix
  Poly residual;    // FallingFactorial only: the prod (x - b_k) factor
  std::string reason;  // NotCzds only

  bool is_czds() const { return kind != Kind::NotCzds; }
};

// Exact decision via Sturm counting and exact division. Throws on the zero
// polynomial.
CzdsCertificate characterize_standard_czds(const Poly& h);

}  // namespace czds

#endif
