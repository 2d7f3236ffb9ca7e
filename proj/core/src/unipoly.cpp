#include "isomon/unipoly.hpp"

#include "isomon/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace isomon {

UniPoly::UniPoly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

UniPoly::UniPoly(RVec coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(const Rational& c, int power) {
  if (c == 0) return {};
  RVec v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::from_roots(std::span<const Rational> roots) {
  UniPoly p(1);
  for (const auto& r : roots) p *= UniPoly(RVec{-r, 1});
  return p;
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

Rational UniPoly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  RVec d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return {};
  return *this * Rational(1 / leading());
}

UniPoly UniPoly::shifted(int k) const {
  if (c_.empty()) return {};
  RVec v(static_cast<std::size_t>(k), Rational(0));
  v.insert(v.end(), c_.begin(), c_.end());
  UniPoly p;
  p.c_ = std::move(v);
  return p;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  RVec r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

UniPoly operator-(UniPoly a) {
  for (auto& x : a.c_) x = -x;
  return a;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    Rational c = c_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    bool neg = c < 0;
    Rational a = abs(c);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    if (mono.empty())
      out += isomon::to_string(a);
    else if (a == 1)
      out += mono;
    else
      out += isomon::to_string(a) + "*" + mono;
  }
  return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw InvalidInput("division by zero polynomial");
  RVec rem = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {UniPoly(), a};
  RVec quo(static_cast<std::size_t>(a.degree() - db + 1));
  Rational lead_inv = 1 / b.leading();
  const RVec& bc = b.coeffs();
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational f = rem[static_cast<std::size_t>(k + db)] * lead_inv;
    quo[static_cast<std::size_t>(k)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= f * bc[static_cast<std::size_t>(j)];
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw NonDivisible(r.to_string());
  return q;
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

// integer coefficients with no common content
std::vector<mpz_class> primitive_integer(const UniPoly& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> out;
  mpz_class g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_class v = c.get_num() * (l / c.get_den());
    out.push_back(v);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (g != 0)
    for (auto& v : out) v /= g;
  return out;
}

std::vector<std::complex<long double>> approximate_roots(const UniPoly& p) {
  using C = std::complex<long double>;
  int n = p.degree();
  std::vector<C> a(static_cast<std::size_t>(n) + 1);
  long double lead = p.leading().get_d();
  for (int k = 0; k <= n; ++k) a[static_cast<std::size_t>(k)] = static_cast<long double>(p.coeff(k).get_d()) / lead;
  std::vector<C> z(static_cast<std::size_t>(n));
  C seed(0.4L, 0.9L);
  for (int k = 0; k < n; ++k) z[static_cast<std::size_t>(k)] = std::pow(seed, k);
  auto eval = [&](C x) {
    C acc = 0;
    for (int k = n; k >= 0; --k) acc = acc * x + a[static_cast<std::size_t>(k)];
    return acc;
  };
  for (int it = 0; it < 2000; ++it) {
    long double delta = 0;
    for (int i = 0; i < n; ++i) {
      C den = 1;
      for (int j = 0; j < n; ++j)
        if (j != i) den *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
      C step = eval(z[static_cast<std::size_t>(i)]) / den;
      z[static_cast<std::size_t>(i)] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-30L) break;
  }
  return z;
}

}  // namespace

RVec rational_roots(const UniPoly& p) {
  if (p.degree() <= 0) return {};
  // Durand-Kerner needs simple roots; multiplicities come back by exact division
  UniPoly rest = exact_div(p, gcd(p, p.derivative()));
  RVec simple;
  while (rest.degree() > 0) {
    auto ints = primitive_integer(rest);
    const mpz_class& lead = ints.back();
    bool found = false;
    for (auto z : approximate_roots(rest)) {
      long double scaled = z.real() * lead.get_d();
      mpz_class k(static_cast<long>(std::llround(scaled)));
      for (int off = -1; off <= 1 && !found; ++off) {
        Rational cand(k + off, lead);
        cand.canonicalize();
        if (rest(cand) == 0) {
          simple.push_back(cand);
          rest = exact_div(rest, UniPoly(RVec{-cand, 1}));
          found = true;
        }
      }
      if (found) break;
    }
    if (!found) throw IrrationalRoots();
  }
  RVec roots;
  UniPoly left = p;
  for (const auto& x : simple) {
    UniPoly factor(RVec{-x, 1});
    for (;;) {
      auto [q, r] = divmod(left, factor);
      if (!r.is_zero()) break;
      roots.push_back(x);
      left = q;
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace isomon
