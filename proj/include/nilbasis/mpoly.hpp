#ifndef NILBASIS_MPOLY_HPP
#define NILBASIS_MPOLY_HPP

#include <complex>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nilbasis/scalar.hpp"

namespace nb {

/// Ordered, named coordinate variables shared by a family of polynomials.
using VarSet = std::vector<std::string>;
using VarSetPtr = std::shared_ptr<const VarSet>;

inline VarSetPtr make_vars(VarSet names) {
  return std::make_shared<const VarSet>(std::move(names));
}

using Mono = std::vector<uint32_t>;  // exponent per variable

/// Sparse multivariate polynomial over Scalar. No zero coefficients are
/// stored; the term map's lexicographic key order makes equality and printing
/// canonical.
class MPoly {
public:
  MPoly() = default;
  explicit MPoly(VarSetPtr vars) : vars_(std::move(vars)) {}
  static MPoly constant(VarSetPtr vars, const Scalar& c) {
    MPoly p(std::move(vars));
    if (!c.is_zero()) p.terms_[Mono(p.vars_->size(), 0)] = c;
    return p;
  }
  static MPoly variable(VarSetPtr vars, int index, const Scalar& coeff = Scalar(1)) {
    MPoly p(std::move(vars));
    if (!coeff.is_zero()) {
      Mono m(p.vars_->size(), 0);
      m[static_cast<size_t>(index)] = 1;
      p.terms_[std::move(m)] = coeff;
    }
    return p;
  }

  const VarSetPtr& vars() const { return vars_; }
  int nvars() const { return static_cast<int>(vars_->size()); }
  const std::map<Mono, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Mono(vars_->size(), 0));
  }
  Scalar constant_term() const {
    auto it = terms_.find(Mono(vars_->size(), 0));
    return it == terms_.end() ? Scalar(0) : it->second;
  }
  Scalar coefficient(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  int total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
      int t = 0;
      for (auto e : m) t += static_cast<int>(e);
      d = std::max(d, t);
    }
    return d;
  }
  /// Indices of variables that actually occur.
  std::set<int> support() const {
    std::set<int> s;
    for (const auto& [m, c] : terms_)
      for (size_t i = 0; i < m.size(); ++i)
        if (m[i] > 0) s.insert(static_cast<int>(i));
    return s;
  }

  void add_term(Mono m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MPoly operator-() const {
    MPoly r(vars_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
  }
  MPoly operator+(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }
  MPoly operator-(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
  }
  MPoly operator*(const MPoly& o) const {
    MPoly r(vars_);
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) {
        Mono m = ma;
        for (size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
        r.add_term(std::move(m), ca * cb);
      }
    return r;
  }
  MPoly operator*(const Scalar& c) const {
    MPoly r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_[m] = k * c;
    return r;
  }
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }

  bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  Scalar eval(const std::vector<Scalar>& point) const;
  double eval_double(const std::vector<double>& point) const;

  /// Substitute scalars for some variables (nullopt keeps the variable).
  MPoly substitute(const std::vector<std::optional<Scalar>>& values) const;
  /// Substitute polynomials for all variables (same VarSet for the results).
  MPoly compose(const std::vector<MPoly>& images) const;

  /// Partial derivative.
  MPoly derivative(int var) const;

  /// Canonical text: terms in key order, coefficients in canonical Scalar
  /// form, e.g. "z + z' + (1/2)x*y'".
  std::string str() const;

private:
  VarSetPtr vars_;
  std::map<Mono, Scalar> terms_;
};

inline MPoly operator*(const Scalar& c, const MPoly& p) { return p * c; }

}  // namespace nb

#endif
