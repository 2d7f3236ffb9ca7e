#include "isomon/multipoly.hpp"

#include "isomon/errors.hpp"

#include <algorithm>

namespace isomon {

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Rational& c) {
  MultiPoly p(std::move(vars));
  p.add_term(Exponents(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, const std::string& name) {
  MultiPoly p(std::move(vars));
  Exponents e(p.vars_.size(), 0);
  e[p.index_of(name)] = 1;
  p.add_term(e, 1);
  return p;
}

std::size_t MultiPoly::index_of(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) throw InvalidInput("unknown variable " + name);
  return static_cast<std::size_t>(it - vars_.begin());
}

bool MultiPoly::depends_on(const std::string& name) const {
  auto i = index_of(name);
  return std::any_of(t_.begin(), t_.end(), [i](const auto& kv) { return kv.first[i] != 0; });
}

Rational MultiPoly::coeff(const Exponents& e) const {
  auto it = t_.find(e);
  return it == t_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = t_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

void MultiPoly::check_vars(const MultiPoly& o) const {
  if (vars_ != o.vars_) throw InvalidInput("variable sets differ");
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
  auto i = index_of(var);
  MultiPoly r(vars_);
  for (const auto& [e, c] : t_) {
    if (e[i] == 0) continue;
    Exponents d = e;
    d[i] -= 1;
    r.add_term(d, c * e[i]);
  }
  return r;
}

MultiPoly MultiPoly::integrate(const std::string& var) const {
  auto i = index_of(var);
  MultiPoly r(vars_);
  for (const auto& [e, c] : t_) {
    Exponents d = e;
    d[i] += 1;
    r.add_term(d, c / d[i]);
  }
  return r;
}

MultiPoly MultiPoly::substitute(const std::string& var, const Rational& value) const {
  auto i = index_of(var);
  MultiPoly r(vars_);
  for (const auto& [e, c] : t_) {
    Exponents d = e;
    d[i] = 0;
    r.add_term(d, c * pow(value, e[i]));
  }
  return r;
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational>& values) const {
  Rational acc = 0;
  for (const auto& [e, c] : t_) {
    Rational m = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = values.find(vars_[i]);
      if (it == values.end()) throw InvalidInput("no value for " + vars_[i]);
      m *= pow(it->second, e[i]);
    }
    acc += m;
  }
  return acc;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_vars(o);
  for (const auto& [e, c] : o.t_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_vars(o);
  for (const auto& [e, c] : o.t_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
  if (s == 0) {
    t_.clear();
    return *this;
  }
  for (auto& [e, c] : t_) c *= s;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_vars(b);
  MultiPoly r(a.vars_);
  for (const auto& [ea, ca] : a.t_)
    for (const auto& [eb, cb] : b.t_) {
      MultiPoly::Exponents e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

std::string MultiPoly::to_string() const {
  if (t_.empty()) return "0";
  std::string out;
  // highest total degree first, then lexicographic
  std::vector<std::pair<MultiPoly::Exponents, Rational>> v(t_.begin(), t_.end());
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    int da = 0, db = 0;
    for (int x : a.first) da += x;
    for (int x : b.first) db += x;
    if (da != db) return da > db;
    return a.first > b.first;
  });
  for (const auto& [e, c] : v) {
    bool neg = c < 0;
    Rational a = abs(c);
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      out += isomon::to_string(a);
    else if (a == 1)
      out += mono;
    else
      out += isomon::to_string(a) + "*" + mono;
  }
  return out;
}

MultiPoly multipoly_integrate(const MultiPoly& p, const std::string& var) { return p.integrate(var); }

}  // namespace isomon
