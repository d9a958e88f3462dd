#include "nilbasis/mpoly.hpp"
#include <algorithm>

#include <sstream>

namespace nb {

Scalar MPoly::eval(const std::vector<Scalar>& point) const {
  Scalar acc;
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (size_t i = 0; i < m.size(); ++i)
      for (uint32_t e = 0; e < m[i]; ++e) t *= point[i];
    acc += t;
  }
  return acc;
}

double MPoly::eval_double(const std::vector<double>& point) const {
  double acc = 0;
  for (const auto& [m, c] : terms_) {
    double t = c.to_double();
    for (size_t i = 0; i < m.size(); ++i)
      for (uint32_t e = 0; e < m[i]; ++e) t *= point[i];
    acc += t;
  }
  return acc;
}

MPoly MPoly::substitute(const std::vector<std::optional<Scalar>>& values) const {
  MPoly r(vars_);
  for (const auto& [m, c] : terms_) {
    Scalar coeff = c;
    Mono rem(m.size(), 0);
    bool dead = false;
    for (size_t i = 0; i < m.size() && !dead; ++i) {
      if (m[i] == 0) continue;
      if (values[i]) {
        if (values[i]->is_zero()) {
          dead = true;
          break;
        }
        for (uint32_t e = 0; e < m[i]; ++e) coeff *= *values[i];
      } else {
        rem[i] = m[i];
      }
    }
    if (!dead) r.add_term(std::move(rem), coeff);
  }
  return r;
}

MPoly MPoly::compose(const std::vector<MPoly>& images) const {
  VarSetPtr out_vars = images.empty() ? vars_ : images[0].vars();
  MPoly r(out_vars);
  for (const auto& [m, c] : terms_) {
    MPoly t = MPoly::constant(out_vars, c);
    for (size_t i = 0; i < m.size(); ++i)
      for (uint32_t e = 0; e < m[i]; ++e) t = t * images[i];
    r += t;
  }
  return r;
}

MPoly MPoly::derivative(int var) const {
  MPoly r(vars_);
  for (const auto& [m, c] : terms_) {
    uint32_t e = m[static_cast<size_t>(var)];
    if (e == 0) continue;
    Mono d = m;
    d[static_cast<size_t>(var)] = e - 1;
    r.add_term(std::move(d), c * Scalar(static_cast<long>(e)));
  }
  return r;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  // Low total degree first, then exponent-lex: "z + z' + x*y'".
  std::vector<std::pair<Mono, Scalar>> order(terms_.begin(), terms_.end());
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    int da = 0, db = 0;
    for (auto e : a.first) da += static_cast<int>(e);
    for (auto e : b.first) db += static_cast<int>(e);
    if (da != db) return da < db;
    return a.first > b.first;  // earlier variables print first
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : order) {
    std::string mono;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += (*vars_)[i];
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    Scalar coeff = c;
    std::string sep = first ? "" : " + ";
    if (c.is_rational() && c.sign() < 0) {
      sep = first ? "-" : " - ";
      coeff = -c;
    }
    os << sep;
    std::string cs = coeff.str();
    if (mono.empty()) {
      os << cs;
    } else if (cs == "1") {
      os << mono;
    } else {
      bool plain = coeff.is_integer() || (coeff.is_rational() && cs.find('/') == std::string::npos);
      os << (plain ? cs : "(" + cs + ")") << "*" << mono;
    }
    first = false;
  }
  return os.str();
}

}  // namespace nb
