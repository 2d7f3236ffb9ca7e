#include "isomon/rational.hpp"

#include "isomon/errors.hpp"

#include <cctype>

namespace isomon {

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw InvalidInput("empty rational");
  if (s.front() == '+') s.erase(0, 1);
  auto slash = s.find('/');
  auto digits = [](std::string_view d) {
    if (!d.empty() && d.front() == '-') d.remove_prefix(1);
    if (d.empty()) return false;
    for (char c : d)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!digits(s)) throw InvalidInput("bad rational '" + s + "'");
    return Rational(mpz_class(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!digits(num) || !digits(den) || den.front() == '-')
    throw InvalidInput("bad rational '" + s + "'");
  mpz_class d(den);
  if (d == 0) throw InvalidInput("zero denominator in '" + s + "'");
  Rational r(mpz_class(num), d);
  r.canonicalize();
  return r;
}

RVec parse_rational_list(std::string_view text) {
  RVec out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    bool blank = true;
    for (char c : piece)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) out.push_back(parse_rational(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

static std::optional<mpz_class> int_root(const mpz_class& v, unsigned n) {
  if (v < 0 && n % 2 == 0) return std::nullopt;
  mpz_class a = abs(v), r;
  if (mpz_root(r.get_mpz_t(), a.get_mpz_t(), n) == 0) return std::nullopt;
  return v < 0 ? mpz_class(-r) : r;
}

std::optional<Rational> rational_root(const Rational& x, unsigned n) {
  auto num = int_root(x.get_num(), n);
  auto den = int_root(x.get_den(), n);
  if (!num || !den) return std::nullopt;
  Rational r(*num, *den);
  r.canonicalize();
  return r;
}

std::optional<Rational> rational_sqrt(const Rational& x) { return rational_root(x, 2); }

Rational pow(const Rational& x, int e) {
  Rational base = e < 0 ? Rational(1 / x) : x;
  unsigned n = static_cast<unsigned>(e < 0 ? -e : e);
  Rational r = 1;
  while (n) {
    if (n & 1u) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

double to_double(const Rational& x) { return x.get_d(); }

}  // namespace isomon
