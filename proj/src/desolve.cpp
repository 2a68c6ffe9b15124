#include "czds/desolve.hpp"

#include <stdexcept>

#include "czds/diffop.hpp"
#include "czds/zeros.hpp"

namespace czds {

Rational de_gamma(const Poly& q, const Rational& alpha, unsigned n) {
  if (q.is_zero() || q.degree() < 1) throw std::invalid_argument("q must have degree >= 1");
  const unsigned r = static_cast<unsigned>(q.degree());
  const Rational& cr = q.leading_coeff();
  if (n + 1 < r) return 0;
  if (n + 1 == r) {
    Rational rfact(1);
    for (unsigned i = 2; i <= r; ++i) rfact *= Rational(static_cast<long>(i));
    return alpha * rfact * cr;
  }
  // c_r * n!/(n-r+1)! * (n + (alpha-1) r + 1); the quotient is the falling
  // product n (n-1) ... (n-r+2).
  Rational falling(1);
  for (unsigned i = 0; i + 1 < r; ++i) falling *= Rational(static_cast<long>(n - i));
  Rational rn(static_cast<long>(n));
  Rational rr(static_cast<long>(r));
  return cr * falling * (rn + (alpha - 1) * rr + 1);
}

namespace {

// Basis of the nullspace of a dense rational matrix (rows x cols), by
// reduced row echelon form.
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> a,
                                             std::size_t cols) {
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[row], a[pivot]);
    Rational inv = 1 / a[row][col];
    for (std::size_t j = col; j < cols; ++j) a[row][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a[i][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<DeSolution> basis_from_de(const Poly& q, const Rational& alpha, unsigned n_max) {
  if (q.is_zero() || q.degree() < 1) throw std::invalid_argument("q must have degree >= 1");
  if (alpha < 0) throw std::invalid_argument("alpha must be non-negative");
  if (zero_counts(q).nonreal != 0)
    throw std::invalid_argument("q must have only real zeros");

  const unsigned r = static_cast<unsigned>(q.degree());
  const Poly qp = derivative(q);
  std::vector<DeSolution> out;
  for (unsigned n = 0; n <= n_max; ++n) {
    DeSolution sol;
    sol.n = n;
    sol.gamma_n = de_gamma(q, alpha, n);

    // Homogeneous system: coefficient rows of
    // gamma_n b - q b^(r) - alpha q' b^(r-1) = 0 over the n+1 unknowns of b.
    const std::size_t cols = n + 1;
    std::vector<std::vector<Rational>> mat(cols, std::vector<Rational>(cols, Rational(0)));
    for (std::size_t i = 0; i < cols; ++i) {
      Poly xi = Poly::monomial(1, i);
      Poly residual = sol.gamma_n * xi - q * derivative(xi, r) - alpha * (qp * derivative(xi, r - 1));
      for (std::size_t row = 0; row < cols; ++row) mat[row][i] = residual.coeff(row);
    }
    for (auto& v : nullspace(std::move(mat), cols))
      sol.basis_of_solutions.push_back(Poly{std::move(v)});
    sol.solution_dim = static_cast<unsigned>(sol.basis_of_solutions.size());
    out.push_back(std::move(sol));
  }
  return out;
}

bool simple_set_exists(const std::vector<DeSolution>& solutions) {
  for (const auto& sol : solutions) {
    bool has_degree_n = false;
    for (const Poly& b : sol.basis_of_solutions) {
      if (!b.is_zero() && b.degree() == static_cast<int>(sol.n)) {
        has_degree_n = true;
        break;
      }
    }
    if (!has_degree_n) return false;
  }
  return true;
}

SharpnessWitness sharpness_counterexample(const Rational& alpha) {
  if (alpha >= 0) throw std::invalid_argument("counterexample requires negative alpha");
  unsigned n = 0;
  while (alpha + Rational(static_cast<long>(n)) + 1 < 0) ++n;

  SharpnessWitness w;
  w.n = n;
  w.q = Poly::x();
  w.p = Poly::monomial(1, n) * Poly{alpha, Rational(0), Rational(1)};  // x^n (x^2 + alpha)
  w.f = laguerre_op(w.q, alpha, w.p);
  w.zr_f = zero_counts(w.f).real;
  w.bound = zero_counts(w.p).real + zero_counts(w.q).real - 1;
  return w;
}

}  // namespace czds
