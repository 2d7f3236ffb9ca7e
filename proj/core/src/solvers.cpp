#include "isomon/solvers.hpp"

#include "isomon/errors.hpp"
#include "isomon/unipoly.hpp"

#include <functional>

namespace isomon {

RVec toeplitz_lower_solve(std::span<const Rational> first_column, std::span<const Rational> rhs) {
  if (first_column.size() != rhs.size()) throw InvalidInput("toeplitz solve: length mismatch");
  if (first_column.empty()) return {};
  if (first_column[0] == 0) throw SingularDiagonal();
  const std::size_t n = rhs.size();
  RVec x(n);
  Rational inv = 1 / first_column[0];
  for (std::size_t i = 0; i < n; ++i) {
    Rational acc = rhs[i];
    for (std::size_t j = 0; j < i; ++j) acc -= first_column[i - j] * x[j];
    x[i] = acc * inv;
  }
  return x;
}

RVec toeplitz_unit_inverse_coeffs(std::span<const Rational> subdiagonal) {
  const int n = static_cast<int>(subdiagonal.size());
  RVec out;
  std::vector<int> b(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    Rational total = 0;
    // enumerate (b_1..b_i) with sum (j+1) b_j = i+1
    std::function<void(int, int)> walk = [&](int j, int left) {
      if (left == 0) {
        mpz_class count = 0, multinom = 1;
        Rational term = 1;
        for (int k = 1; k < j; ++k) {
          if (b[static_cast<std::size_t>(k)] == 0) continue;
          count += b[static_cast<std::size_t>(k)];
          mpz_class binom;
          mpz_bin_uiui(binom.get_mpz_t(), count.get_ui(), static_cast<unsigned long>(b[static_cast<std::size_t>(k)]));
          multinom *= binom;
          term *= pow(subdiagonal[static_cast<std::size_t>(k - 1)], b[static_cast<std::size_t>(k)]);
        }
        if (count % 2 == 1) term = -term;
        total += term * Rational(multinom);
        return;
      }
      if (j > i) return;
      for (int m = 0; (j + 1) * m <= left; ++m) {
        b[static_cast<std::size_t>(j)] = m;
        walk(j + 1, left - (j + 1) * m);
      }
      b[static_cast<std::size_t>(j)] = 0;
    };
    walk(1, i + 1);
    out.push_back(total);
  }
  return out;
}

RVec vandermonde_solve(std::span<const Rational> nodes, std::span<const Rational> rhs, bool transposed) {
  const std::size_t n = nodes.size();
  if (rhs.size() != n) throw InvalidInput("vandermonde solve: length mismatch");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (nodes[i] == nodes[j]) throw CoincidentNodes(i, j);
  // Lagrange basis: coefficient k of l_j is (V^-1)[j][k]
  RMatrix lag(n, RVec(n));
  for (std::size_t j = 0; j < n; ++j) {
    UniPoly l(1);
    Rational scale = 1;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == j) continue;
      l *= UniPoly(RVec{-nodes[k], 1});
      scale *= nodes[j] - nodes[k];
    }
    l *= Rational(1 / scale);
    for (std::size_t k = 0; k < n; ++k) lag[j][k] = l.coeff(static_cast<int>(k));
  }
  RVec x(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) x[i] += transposed ? lag[k][i] * rhs[k] : lag[i][k] * rhs[k];
  return x;
}

RVec dense_solve(RMatrix a, RVec rhs) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw InvalidInput("singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      rhs[r] -= f * rhs[col];
    }
  }
  RVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / a[i][i];
  return x;
}

RMatrix identity_matrix(std::size_t n) {
  RMatrix m(n, RVec(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RMatrix dense_inverse(const RMatrix& a) {
  const std::size_t n = a.size();
  RMatrix inv(n, RVec(n));
  for (std::size_t j = 0; j < n; ++j) {
    RVec e(n);
    e[j] = 1;
    RVec col = dense_solve(a, e);
    for (std::size_t i = 0; i < n; ++i) inv[i][j] = col[i];
  }
  return inv;
}

RMatrix matmul(const RMatrix& a, const RMatrix& b) {
  std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
  RMatrix c(n, RVec(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

RMatrix transpose(const RMatrix& a) {
  if (a.empty()) return {};
  RMatrix t(a[0].size(), RVec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

}  // namespace isomon
