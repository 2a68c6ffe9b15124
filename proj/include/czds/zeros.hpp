#ifndef CZDS_ZEROS_HPP
#define CZDS_ZEROS_HPP

#include <optional>
#include <vector>

#include "czds/poly.hpp"

namespace czds {

// Z_R / Z_C record, with multiplicity. The zero polynomial carries no numeric
// degree and counts (0, 0) by convention.
struct ZeroCount {
  std::optional<int> degree;  // nullopt for the zero polynomial
  int real = 0;
  int nonreal = 0;

  friend bool operator==(const ZeroCount&, const ZeroCount&) = default;
};

// Yun square-free decomposition: p = lc * prod factor_i^mult_i with the
// factors monic, square-free, and pairwise coprime. Throws on the zero
// polynomial.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

// Number of distinct real roots over the whole line (Sturm; sign variations
// at -inf/+inf come from leading-term signs). Throws
// std::invalid_argument("indeterminate count") on the zero polynomial.
int count_real_roots(const Poly& p);

// Distinct real roots in the half-open interval (a, b]: a root at b counts,
// a root at a does not. Requires a < b.
int count_real_roots(const Poly& p, const Rational& a, const Rational& b);

// Distinct real roots in (a, +inf).
int count_real_roots_above(const Poly& p, const Rational& a);

// Multiplicity-aware counting via the square-free decomposition.
ZeroCount zero_counts(const Poly& p);

}  // namespace czds

#endif
