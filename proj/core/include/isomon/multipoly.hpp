#pragma once

#include "isomon/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace isomon {

// Sparse polynomial over a fixed list of named variables.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}
  static MultiPoly constant(std::vector<std::string> vars, const Rational& c);
  static MultiPoly variable(std::vector<std::string> vars, const std::string& name);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Exponents, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t index_of(const std::string& name) const;
  bool depends_on(const std::string& name) const;
  Rational coeff(const Exponents& e) const;

  MultiPoly derivative(const std::string& var) const;
  MultiPoly integrate(const std::string& var) const;
  // substitute var = value
  MultiPoly substitute(const std::string& var, const Rational& value) const;
  Rational evaluate(const std::map<std::string, Rational>& values) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& s);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.t_ == b.t_;
  }

  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Rational& c);
  void check_vars(const MultiPoly& o) const;
  std::vector<std::string> vars_;
  std::map<Exponents, Rational> t_;
};

MultiPoly multipoly_integrate(const MultiPoly& p, const std::string& var);

}  // namespace isomon
