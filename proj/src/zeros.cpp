#include "czds/zeros.hpp"

#include <stdexcept>

namespace czds {

namespace {

// Signed-remainder chain of (p, p'). p is assumed square-free so the chain
// ends in a nonzero constant.
std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  chain.push_back(p);
  Poly d = derivative(p);
  if (d.is_zero()) return chain;
  chain.push_back(d);
  while (true) {
    const Poly& a = chain[chain.size() - 2];
    const Poly& b = chain.back();
    Poly r = -Poly::divrem(a, b).second;
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

// Sign variations of the chain at a point, zeros skipped. Skipping zeros
// makes the count equal to the variation count just right of the point, which
// gives the half-open (a, b] root convention.
int variations_at(const std::vector<Poly>& chain, const Rational& x) {
  int var = 0, prev = 0;
  for (const Poly& f : chain) {
    int s = f.is_zero() ? 0 : sign_of(f.evaluate(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

int variations_at_infinity(const std::vector<Poly>& chain, bool positive) {
  int var = 0, prev = 0;
  for (const Poly& f : chain) {
    if (f.is_zero()) continue;
    int s = sign_of(f.leading_coeff());
    if (!positive && f.degree() % 2 == 1) s = -s;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

Poly squarefree_part(const Poly& p) {
  Poly g = poly_gcd(p, derivative(p));
  return Poly::exact_div(p, g).monic();
}

}  // namespace

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("square-free decomposition of zero polynomial");
  std::vector<std::pair<Poly, int>> out;
  Poly f = p.monic();
  if (f.is_constant()) return out;

  // Yun's algorithm.
  Poly fp = derivative(f);
  Poly g = poly_gcd(f, fp);
  Poly w = Poly::exact_div(f, g);
  Poly y = Poly::exact_div(fp, g);
  Poly z = y - derivative(w);
  int i = 1;
  while (!w.is_constant()) {
    Poly gi = poly_gcd(w, z);
    if (!gi.is_constant()) out.emplace_back(gi, i);
    w = Poly::exact_div(w, gi);
    y = Poly::exact_div(z, gi);
    z = y - derivative(w);
    ++i;
  }
  return out;
}

int count_real_roots(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("indeterminate count");
  if (p.is_constant()) return 0;
  auto chain = sturm_chain(squarefree_part(p));
  return variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
}

int count_real_roots(const Poly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw std::invalid_argument("indeterminate count");
  if (!(a < b)) throw std::invalid_argument("empty interval");
  if (p.is_constant()) return 0;
  auto chain = sturm_chain(squarefree_part(p));
  return variations_at(chain, a) - variations_at(chain, b);
}

int count_real_roots_above(const Poly& p, const Rational& a) {
  if (p.is_zero()) throw std::invalid_argument("indeterminate count");
  if (p.is_constant()) return 0;
  auto chain = sturm_chain(squarefree_part(p));
  return variations_at(chain, a) - variations_at_infinity(chain, true);
}

ZeroCount zero_counts(const Poly& p) {
  if (p.is_zero()) return ZeroCount{std::nullopt, 0, 0};
  ZeroCount zc;
  zc.degree = p.is_constant() ? 0 : p.degree();
  int real = 0;
  if (!p.is_constant()) {
    for (const auto& [factor, mult] : squarefree_decomposition(p))
      real += mult * count_real_roots(factor);
  }
  zc.real = real;
  zc.nonreal = *zc.degree - real;
  return zc;
}

}  // namespace czds
