#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace isomon {

// mpq_class keeps values canonical after every arithmetic operation
using Rational = mpq_class;
using RVec = std::vector<Rational>;

std::string to_string(const Rational& x);
Rational parse_rational(std::string_view text);
RVec parse_rational_list(std::string_view text);

std::optional<Rational> rational_sqrt(const Rational& x);
// exact n-th root, nullopt when irrational
std::optional<Rational> rational_root(const Rational& x, unsigned n);
Rational pow(const Rational& x, int e);

double to_double(const Rational& x);

}  // namespace isomon
