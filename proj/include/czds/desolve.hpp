#ifndef CZDS_DESOLVE_HPP
#define CZDS_DESOLVE_HPP

#include <vector>

#include "czds/poly.hpp"

namespace czds {

// Eigenvalue sequence forced by the degree-r equation
// gamma_n b = q b^(r) + alpha q' b^(r-1):
//   gamma_n = 0                            for n < r-1,
//   gamma_{r-1} = alpha r! c_r,
//   gamma_n = c_r n! (n + (alpha-1) r + 1) / (n-r+1)!   for n > r-1.
// Throws std::invalid_argument when deg(q) < 1.
Rational de_gamma(const Poly& q, const Rational& alpha, unsigned n);

// Solution space of the order-n instance of the differential equation.
struct DeSolution {
  unsigned n = 0;
  Rational gamma_n;
  unsigned solution_dim = 0;
  std::vector<Poly> basis_of_solutions;  // rational basis, degrees <= n
};

// Solves gamma_n b = q b^(r) + alpha q' b^(r-1) exactly for each n <= n_max
// and reports the solution-space dimension and a basis. Requires q real-rooted
// ("q must have only real zeros"), deg(q) >= 1, and alpha >= 0.
std::vector<DeSolution> basis_from_de(const Poly& q, const Rational& alpha, unsigned n_max);

// True when every n <= n_max admits a degree-n solution with nonzero leading
// coefficient, i.e. a simple set exists up to n_max.
bool simple_set_exists(const std::vector<DeSolution>& solutions);

// The strictness witness for the Z_R lower bound when alpha < 0:
// p = x^n (x^2 + alpha), q = x, f = q p' + alpha q' p, with n the largest
// non-negative integer with alpha + n < 0. Z_R(f) = n falls strictly below
// the bound Z_R(p) + Z_R(q) - 1 = n + 2.
struct SharpnessWitness {
  unsigned n = 0;
  Poly p;
  Poly q;
  Poly f;
  int zr_f = 0;
  int bound = 0;
};

// Throws std::invalid_argument("counterexample requires negative alpha") for
// alpha >= 0.
SharpnessWitness sharpness_counterexample(const Rational& alpha);

}  // namespace czds

#endif
