#include <doctest.h>

#include <random>
#include <vector>

#include "czds/bases.hpp"
#include "test_util.hpp"

using namespace czds;

namespace {

// Residual of the Jacobi differential equation:
// (x^2-1) p'' + ((2+a+b)x + a-b) p' - n(n+1+a+b) p
Poly jacobi_de_residual(const Poly& p, const Rational& a, const Rational& b, unsigned n) {
  Poly x2m1{Rational(-1), Rational(0), Rational(1)};
  Poly lin{a - b, 2 + a + b};
  Rational rn(static_cast<long>(n));
  return x2m1 * derivative(p, 2) + lin * derivative(p) - rn * (rn + 1 + a + b) * p;
}

// -x p'' + (x - (a+1)) p' - n p
Poly laguerre_de_residual(const Poly& p, const Rational& a, unsigned n) {
  return -Poly::x() * derivative(p, 2) + Poly{-(a + 1), Rational(1)} * derivative(p) -
         Rational(static_cast<long>(n)) * p;
}

// -(1/2) p'' + x p' - n p
Poly hermite_de_residual(const Poly& p, unsigned n) {
  return Rational(-1, 2) * derivative(p, 2) + Poly::x() * derivative(p) -
         Rational(static_cast<long>(n)) * p;
}

}  // namespace

TEST_CASE("rising factorial") {
  CHECK(rising_factorial(Rational(1, 2), 0) == 1);
  CHECK(rising_factorial(Rational(1, 2), 2) == Rational(3, 4));
  CHECK(rising_factorial(Rational(3, 2), 1) == Rational(3, 2));
  CHECK(rising_factorial(Rational(2), 3) == 24);
}

TEST_CASE("generalized binomial") {
  CHECK(gen_binomial(Rational(5), 2) == 10);
  CHECK(gen_binomial(Rational(1, 2), 2) == Rational(-1, 8));
  CHECK(gen_binomial(Rational(3), 0) == 1);
  CHECK(gen_binomial(Rational(2), 5) == 0);
}

TEST_CASE("basis polynomials at small indices") {
  CHECK(basis_poly(BasisFamily::legendre(), 0) == Poly::constant(1));
  CHECK(basis_poly(BasisFamily::gen_laguerre(0), 1) == Poly{Rational(1), Rational(-1)});
  CHECK(basis_poly(BasisFamily::legendre(), 2) ==
        Poly{Rational(-1, 2), Rational(0), Rational(3, 2)});
  CHECK(basis_poly(BasisFamily::chebyshev_t(), 3) ==
        Poly{Rational(0), Rational(-3), Rational(0), Rational(4)});
  CHECK(basis_poly(BasisFamily::hermite(), 2) == Poly{Rational(-2), Rational(0), Rational(4)});
  CHECK(basis_poly(BasisFamily::standard(), 4) == Poly::monomial(1, 4));
}

TEST_CASE("parameter domain") {
  CHECK_THROWS_AS(BasisFamily::jacobi(-1, 0), std::domain_error);
  CHECK_THROWS_AS(BasisFamily::gen_laguerre(Rational(-3, 2)), std::domain_error);
  CHECK_THROWS_AS(BasisFamily::ultraspherical(-2), std::domain_error);
}

TEST_CASE("custom family must be a simple set") {
  CHECK_THROWS_AS(BasisFamily::custom({Poly::constant(1), Poly::constant(2)}),
                  std::invalid_argument);
  auto f = BasisFamily::custom({Poly::constant(1), Poly{Rational(1), Rational(1)}});
  CHECK(basis_poly(f, 1) == Poly{Rational(1), Rational(1)});
  CHECK_THROWS_AS(basis_poly(f, 2), std::invalid_argument);
}

TEST_CASE("simple-set property up to 25") {
  std::vector<BasisFamily> families = {
      BasisFamily::standard(),      BasisFamily::hermite(),
      BasisFamily::jacobi(Rational(1, 2), Rational(-1, 2)),
      BasisFamily::ultraspherical(Rational(2)),
      BasisFamily::legendre(),      BasisFamily::chebyshev_t(),
      BasisFamily::chebyshev_u(),   BasisFamily::gen_laguerre(Rational(7, 3))};
  for (const auto& f : families)
    for (unsigned n = 0; n <= 25; ++n) CHECK(basis_poly(f, n).degree() == static_cast<int>(n));
}

TEST_CASE("differential equation residuals vanish exactly") {
  std::vector<std::pair<Rational, Rational>> jacobi_params = {
      {0, 0}, {Rational(1, 2), Rational(-1, 2)}, {2, 3}};
  for (const auto& [a, b] : jacobi_params)
    for (unsigned n = 0; n <= 12; ++n)
      CHECK(jacobi_de_residual(basis_poly(BasisFamily::jacobi(a, b), n), a, b, n).is_zero());

  // Ultraspherical instance of the same equation.
  for (const Rational& lam : {Rational(0), Rational(1, 2), Rational(-1, 2), Rational(2)})
    for (unsigned n = 0; n <= 12; ++n)
      CHECK(jacobi_de_residual(basis_poly(BasisFamily::ultraspherical(lam), n), lam, lam, n)
                .is_zero());

  for (const Rational& a : {Rational(0), Rational(1, 2), Rational(3)})
    for (unsigned n = 0; n <= 12; ++n)
      CHECK(laguerre_de_residual(basis_poly(BasisFamily::gen_laguerre(a), n), a, n).is_zero());

  for (unsigned n = 0; n <= 12; ++n)
    CHECK(hermite_de_residual(basis_poly(BasisFamily::hermite(), n), n).is_zero());
}

TEST_CASE("family consistency") {
  for (unsigned n = 0; n <= 10; ++n) {
    CHECK(basis_poly(BasisFamily::ultraspherical(Rational(3, 2)), n) ==
          basis_poly(BasisFamily::jacobi(Rational(3, 2), Rational(3, 2)), n));
    CHECK(basis_poly(BasisFamily::legendre(), n) == basis_poly(BasisFamily::jacobi(0, 0), n));
  }
}

TEST_CASE("Chebyshev scalings match the recurrences") {
  // T_{n+1} = 2x T_n - T_{n-1}, U_{n+1} = 2x U_n - U_{n-1}.
  Poly two_x{Rational(0), Rational(2)};
  Poly t_prev = Poly::constant(1), t_cur = Poly::x();
  Poly u_prev = Poly::constant(1), u_cur = two_x;
  CHECK(basis_poly(BasisFamily::chebyshev_t(), 0) == t_prev);
  CHECK(basis_poly(BasisFamily::chebyshev_t(), 1) == t_cur);
  CHECK(basis_poly(BasisFamily::chebyshev_u(), 0) == u_prev);
  CHECK(basis_poly(BasisFamily::chebyshev_u(), 1) == u_cur);
  for (unsigned n = 2; n <= 10; ++n) {
    Poly t_next = two_x * t_cur - t_prev;
    Poly u_next = two_x * u_cur - u_prev;
    CHECK(basis_poly(BasisFamily::chebyshev_t(), n) == t_next);
    CHECK(basis_poly(BasisFamily::chebyshev_u(), n) == u_next);
    t_prev = t_cur; t_cur = t_next;
    u_prev = u_cur; u_cur = u_next;
  }

  // The scaling identities themselves: T_n (1/2)_n / n! = P_n^(-1/2,-1/2).
  Rational factn(1);
  for (unsigned n = 0; n <= 10; ++n) {
    if (n > 0) factn *= Rational(static_cast<long>(n));
    CHECK(rising_factorial(Rational(1, 2), n) / factn *
              basis_poly(BasisFamily::chebyshev_t(), n) ==
          basis_poly(BasisFamily::jacobi(Rational(-1, 2), Rational(-1, 2)), n));
    CHECK(rising_factorial(Rational(3, 2), n) / (factn * Rational(static_cast<long>(n + 1))) *
              basis_poly(BasisFamily::chebyshev_u(), n) ==
          basis_poly(BasisFamily::jacobi(Rational(1, 2), Rational(1, 2)), n));
  }
}

TEST_CASE("expansion in a basis") {
  Poly x2 = Poly::monomial(1, 2);
  CHECK(expand_in_basis(x2, BasisFamily::standard()) ==
        std::vector<Rational>{0, 0, 1});
  CHECK(expand_in_basis(basis_poly(BasisFamily::legendre(), 3), BasisFamily::legendre()) ==
        std::vector<Rational>{0, 0, 0, 1});
  CHECK(expand_in_basis(x2, BasisFamily::legendre()) ==
        std::vector<Rational>{Rational(1, 3), 0, Rational(2, 3)});
  CHECK(expand_in_basis(Poly::zero(), BasisFamily::hermite()).empty());
}

TEST_CASE("expand/combine round trip in every family") {
  std::mt19937_64 rng(314159);
  std::vector<BasisFamily> families = {
      BasisFamily::standard(),    BasisFamily::hermite(),
      BasisFamily::jacobi(Rational(1, 2), Rational(3)),
      BasisFamily::ultraspherical(Rational(-1, 4)),
      BasisFamily::legendre(),    BasisFamily::chebyshev_t(),
      BasisFamily::chebyshev_u(), BasisFamily::gen_laguerre(Rational(1, 2))};
  for (const auto& f : families) {
    for (int iter = 0; iter < 20; ++iter) {
      Poly p = testutil::random_poly(rng, 15);
      CHECK(combine_in_basis(expand_in_basis(p, f), f) == p);
    }
  }
}
