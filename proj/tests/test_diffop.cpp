#include <doctest.h>

#include <random>

#include "czds/bases.hpp"
#include "czds/diffop.hpp"
#include "czds/zeros.hpp"
#include "test_util.hpp"

using namespace czds;
using testutil::random_poly;

namespace {

DiffOp random_op(std::mt19937_64& rng, unsigned max_order, int max_coeff_degree) {
  DiffOp op;
  for (unsigned k = 0; k <= max_order; ++k)
    op += DiffOp::term(random_poly(rng, max_coeff_degree), k);
  return op;
}

// Random operator with deg(g_k) <= k.
DiffOp random_degree_bounded_op(std::mt19937_64& rng, unsigned max_order) {
  DiffOp op;
  for (unsigned k = 0; k <= max_order; ++k)
    op += DiffOp::term(random_poly(rng, static_cast<int>(k)), k);
  return op;
}

}  // namespace

TEST_CASE("apply") {
  Poly x2 = Poly::monomial(1, 2);
  Poly x3 = Poly::monomial(1, 3);
  CHECK(DiffOp::derivative_op().apply(x2) == Poly{Rational(0), Rational(2)});

  DiffOp euler_plus = DiffOp::term(Poly::x(), 1) + DiffOp::identity();
  CHECK(euler_plus.apply(x3) == Rational(4) * x3);

  CHECK(phi(0).apply(Poly::x()) == Poly{Rational(-1), Rational(0), Rational(3)});
  CHECK(psi(0).apply(Poly::constant(1)) == Poly{Rational(-1), Rational(1)});
}

TEST_CASE("compose base cases") {
  // D x = x D + I
  DiffOp dx = compose(DiffOp::derivative_op(), DiffOp::mul_by(Poly::x()));
  CHECK(dx == DiffOp::term(Poly::x(), 1) + DiffOp::identity());

  std::mt19937_64 rng(1);
  DiffOp l = random_op(rng, 3, 3);
  CHECK(compose(DiffOp::identity(), l) == l);
  CHECK(compose(l, DiffOp::identity()) == l);
  CHECK(compose(DiffOp::derivative_op(), DiffOp::derivative_op()) == DiffOp::derivative_op(2));
}

TEST_CASE("compose soundness on random operators") {
  std::mt19937_64 rng(77);
  for (int iter = 0; iter < 60; ++iter) {
    DiffOp l1 = random_op(rng, 3, 4);
    DiffOp l2 = random_op(rng, 3, 4);
    DiffOp c = compose(l1, l2);
    for (int j = 0; j < 3; ++j) {
      Poly p = random_poly(rng, 10);
      CHECK(c.apply(p) == l1.apply(l2.apply(p)));
    }
  }
}

TEST_CASE("shift past derivative") {
  // Constant-coefficient operators commute with D^n.
  CHECK(shift_past_derivative(3, DiffOp::identity()) == DiffOp::identity());

  // D(xD) = (xD + I)D
  DiffOp xd = DiffOp::term(Poly::x(), 1);
  CHECK(shift_past_derivative(1, xd) == xd + DiffOp::identity());

  // Degree hypothesis: deg(g_k) <= k.
  CHECK_THROWS_AS(shift_past_derivative(1, DiffOp::mul_by(Poly::x())), std::invalid_argument);

  // Order-2 displayed form: coefficients g2, n g2' + g1, C(n,2) g2'' + n g1' + g0.
  std::mt19937_64 rng(11);
  for (unsigned n = 0; n <= 4; ++n) {
    Poly g2 = random_poly(rng, 2), g1 = random_poly(rng, 1), g0 = random_poly(rng, 0);
    DiffOp l = DiffOp::term(g2, 2) + DiffOp::term(g1, 1) + DiffOp::term(g0, 0);
    DiffOp r = shift_past_derivative(n, l);
    Rational rn(static_cast<long>(n));
    DiffOp expected = DiffOp::term(g2, 2) + DiffOp::term(rn * derivative(g2) + g1, 1) +
                      DiffOp::term(gen_binomial(rn, 2) * derivative(g2, 2) +
                                       rn * derivative(g1) + g0,
                                   0);
    CHECK(r == expected);
  }
}

TEST_CASE("shift identity D^n L = R D^n on random degree-bounded operators") {
  std::mt19937_64 rng(23);
  for (unsigned n = 0; n <= 4; ++n) {
    for (int iter = 0; iter < 50; ++iter) {
      DiffOp l = random_degree_bounded_op(rng, 4);
      DiffOp lhs = compose(DiffOp::derivative_op(n), l);
      DiffOp rhs = compose(shift_past_derivative(n, l), DiffOp::derivative_op(n));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("phi commutation ladder") {
  // D^n (Phi_l D - n(n+1+2l) I) = Phi_{l+n} D^{n+1}
  for (const Rational& lam : {Rational(0), Rational(1, 2), Rational(-1, 2), Rational(2)}) {
    for (unsigned n = 0; n <= 6; ++n) {
      Rational rn(static_cast<long>(n));
      DiffOp inner = compose(phi(lam), DiffOp::derivative_op()) -
                     DiffOp::term(Poly::constant(rn * (rn + 1 + 2 * lam)), 0);
      DiffOp lhs = compose(DiffOp::derivative_op(n), inner);
      DiffOp rhs = compose(phi(lam + rn), DiffOp::derivative_op(n + 1));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("psi commutation ladder") {
  // D^n (Psi_a D - n I) = Psi_{a+n} D^{n+1}
  for (const Rational& a : {Rational(0), Rational(1, 2), Rational(3)}) {
    for (unsigned n = 0; n <= 6; ++n) {
      Rational rn(static_cast<long>(n));
      DiffOp inner = compose(psi(a), DiffOp::derivative_op()) -
                     DiffOp::term(Poly::constant(rn), 0);
      DiffOp lhs = compose(DiffOp::derivative_op(n), inner);
      DiffOp rhs = compose(psi(a + rn), DiffOp::derivative_op(n + 1));
      CHECK(lhs == rhs);
    }
  }
}

namespace {

DiffOp pow_of(const DiffOp& l, unsigned e) { return l.pow(e); }

// prod_{k<w} (F_a D - eig(k) I)^{m_k} for the product factorization checks.
DiffOp left_side(DiffOp (*factor)(const Rational&), const Rational& a,
                 const std::vector<unsigned>& m, bool ultraspherical) {
  DiffOp acc = DiffOp::identity();
  for (std::size_t k = 0; k < m.size(); ++k) {
    Rational rk(static_cast<long>(k));
    Rational eig = ultraspherical ? rk * (rk + 1 + 2 * a) : rk;
    DiffOp base = compose(factor(a), DiffOp::derivative_op()) -
                  DiffOp::term(Poly::constant(eig), 0);
    acc = compose(acc, pow_of(base, m[k]));
  }
  return acc;
}

DiffOp right_side(DiffOp (*factor)(const Rational&), const Rational& a,
                  const std::vector<unsigned>& m) {
  DiffOp acc = DiffOp::identity();
  for (std::size_t k = 0; k < m.size(); ++k) {
    DiffOp fk = factor(a + Rational(static_cast<long>(k)));
    DiffOp fkd = compose(fk, DiffOp::derivative_op());
    acc = compose(acc, compose(pow_of(fkd, m[k] - 1), fk));
  }
  return compose(acc, DiffOp::derivative_op(static_cast<unsigned>(m.size())));
}

}  // namespace

TEST_CASE("product factorizations, w <= 3, exponents <= 2") {
  std::vector<std::vector<unsigned>> exponent_sets = {{1}, {2}, {1, 1}, {2, 1}, {1, 2},
                                                      {2, 2}, {1, 1, 1}, {2, 1, 2}};
  for (const auto& m : exponent_sets) {
    for (const Rational& lam : {Rational(0), Rational(1, 2), Rational(2)})
      CHECK(left_side(&phi, lam, m, true) == right_side(&phi, lam, m));
    for (const Rational& a : {Rational(0), Rational(1, 2), Rational(3)})
      CHECK(left_side(&psi, a, m, false) == right_side(&psi, a, m));
  }
}

TEST_CASE("hermite_op diagonalizes the Hermite basis") {
  for (const Rational& g : {Rational(0), Rational(1, 2), Rational(3)}) {
    DiffOp op = hermite_op(Rational(1, 2), 1, 0, g);
    for (unsigned k = 0; k <= 10; ++k) {
      Poly hk = basis_poly(BasisFamily::hermite(), k);
      CHECK(op.apply(hk) == (Rational(static_cast<long>(k)) + g) * hk);
    }
  }
  CHECK(hermite_op(0, 0, 0, 1) == DiffOp::identity());
  CHECK(hermite_op(0, 1, 0, 0).apply(Poly::monomial(1, 3)) == Poly::monomial(3, 3));
}

TEST_CASE("Jacobi diagonalization") {
  for (const auto& [a, b] : std::vector<std::pair<Rational, Rational>>{
           {0, 0}, {Rational(1, 2), Rational(-1, 2)}, {2, 3}}) {
    DiffOp op = compose(DiffOp::term(Poly{Rational(-1), Rational(0), Rational(1)}, 1) +
                            DiffOp::term(Poly{a - b, 2 + a + b}, 0),
                        DiffOp::derivative_op());
    for (unsigned k = 0; k <= 10; ++k) {
      Poly pk = basis_poly(BasisFamily::jacobi(a, b), k);
      Rational rk(static_cast<long>(k));
      CHECK(op.apply(pk) == rk * (rk + 1 + a + b) * pk);
    }
  }
}

TEST_CASE("polynomial-map operators") {
  // q = x reproduces x p' + alpha p.
  Poly p{Rational(1), Rational(0), Rational(1)};  // x^2 + 1
  CHECK(laguerre_op(Poly::x(), 2, p) == Poly{Rational(2), Rational(0), Rational(4)});
  CHECK(zero_counts(laguerre_op(Poly::x(), 2, p)).nonreal <= zero_counts(p).nonreal);
  // q constant: p -> q p'.
  CHECK(laguerre_op(Poly::constant(1), 5, p) == derivative(p));

  Poly x = Poly::x();
  CHECK(three_factor_op(x, x, x, 1, 1) == Poly::monomial(3, 2));
  CHECK(three_factor_op(p, p, Poly::constant(2), 0, 0).is_zero());
  Poly r{Rational(1), Rational(1)};
  CHECK(three_factor_op(p, r, Poly::constant(2), 1, 1) ==
        Rational(2) * (derivative(p) * r + p * derivative(r)));

  CHECK(lmgen_op(1, 0, 0, p) == Poly::x() * p);
  CHECK(lmgen_op(0, 1, 1, Poly::monomial(1, 2)) ==
        Poly{Rational(0), Rational(-2), Rational(1)});
  CHECK(lmgen_op(1, 0, 1, Poly::constant(1)) == Poly::x());
}
