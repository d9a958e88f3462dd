#include "nilbasis/symbolic.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <mutex>

#include "nilbasis/errors.hpp"

namespace nb {

namespace {

/// Dynkin-series summand: a bracket word over {x,y} (leftmost letter is the
/// outermost ad) and its rational coefficient
///   (-1)^(k-1) / (k * w * prod p_i! q_i!),  w = total weight.
struct DynkinTerm {
  std::string word;
  BigRat coeff;
};

BigRat factorial(int n) {
  BigRat f(1);
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// All block sequences ((p_i,q_i)) with p_i + q_i >= 1 and total weight <= step.
std::vector<DynkinTerm> dynkin_terms(int step) {
  std::vector<DynkinTerm> out;
  struct Block { int p, q; };
  std::vector<Block> seq;
  auto emit = [&]() {
    int k = static_cast<int>(seq.size());
    int w = 0;
    BigRat fact(1);
    std::string word;
    for (const auto& b : seq) {
      w += b.p + b.q;
      fact *= factorial(b.p) * factorial(b.q);
      word.append(static_cast<size_t>(b.p), 'x');
      word.append(static_cast<size_t>(b.q), 'y');
    }
    // Trailing letter of the word is the innermost operand; ad(z)z = 0 kills
    // words ending in a doubled letter, skip them early.
    size_t len = word.size();
    if (len >= 2 && word[len - 1] == word[len - 2]) return;
    BigRat c = BigRat((k % 2 == 1) ? 1 : -1) / (BigRat(k) * BigRat(w) * fact);
    out.push_back({std::move(word), std::move(c)});
  };
  std::function<void(int)> rec = [&](int weight_left) {
    if (!seq.empty()) emit();
    for (int w = 1; w <= weight_left; ++w)
      for (int p = 0; p <= w; ++p) {
        seq.push_back({p, w - p});
        rec(weight_left - w);
        seq.pop_back();
      }
  };
  rec(step);
  return out;
}

const std::vector<DynkinTerm>& dynkin_terms_cached(int step) {
  static std::map<int, std::vector<DynkinTerm>> cache;
  static std::mutex m;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(step);
  if (it == cache.end()) it = cache.emplace(step, dynkin_terms(step)).first;
  return it->second;
}

/// Shared BCH evaluation over any vector type with bracket/add/scale.
template <class V, class Bracket, class Axpy, class IsZero>
V bch_core(const std::vector<DynkinTerm>& terms, const V& x, const V& y, V acc,
           Bracket bracket, Axpy axpy, IsZero isz) {
  std::map<std::string, V> cache;
  std::function<const V&(const std::string&)> value = [&](const std::string& w) -> const V& {
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;
    V v = [&]() {
      if (w.size() == 1) return w[0] == 'x' ? x : y;
      const V& inner = value(w.substr(1));
      return bracket(w[0] == 'x' ? x : y, inner);
    }();
    return cache.emplace(w, std::move(v)).first->second;
  };
  for (const auto& t : terms) {
    const V& v = value(t.word);
    if (isz(v)) continue;
    axpy(acc, t.coeff, v);
  }
  return acc;
}

std::string lowercase(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return s;
}

void check_degree_guard(const LieAlgebra& alg, const SymVec& w) {
  int limit = 2 * alg.dim() * alg.step();
  for (const auto& p : w.comp)
    if (p.total_degree() > limit)
      throw DegreeOverflow("symbolic BCH exceeded total degree " + std::to_string(limit));
}

LieAlgebra reordered(const LieAlgebra& alg, const std::vector<int>& ordering) {
  if (!verify_strong_malcev(alg, ordering))
    throw NotStrongMalcev("ordering is not a strong Malcev ordering");
  std::vector<std::string> labels;
  for (int i : ordering) labels.push_back(alg.label(i));
  return change_basis(alg, BasisChange::permutation(ordering), std::move(labels));
}

std::vector<int> identity_ordering(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i;
  return v;
}

}  // namespace

SymVec bch(const LieAlgebra& alg, const SymVec& x, const SymVec& y) {
  const auto& terms = dynkin_terms_cached(alg.step());
  SymVec acc = SymVec::zero(x.vars, alg.dim());
  auto bracket = [&](const SymVec& a, const SymVec& b) {
    SymVec r = SymVec::zero(a.vars, alg.dim());
    for (int i = 0; i < alg.dim(); ++i) {
      if (a.comp[static_cast<size_t>(i)].is_zero()) continue;
      for (int j = 0; j < alg.dim(); ++j) {
        if (b.comp[static_cast<size_t>(j)].is_zero()) continue;
        const Vec& c = alg.bracket(i, j);
        MPoly prod = a.comp[static_cast<size_t>(i)] * b.comp[static_cast<size_t>(j)];
        for (int k = 0; k < alg.dim(); ++k)
          if (!c[static_cast<size_t>(k)].is_zero())
            r.comp[static_cast<size_t>(k)] += prod * c[static_cast<size_t>(k)];
      }
    }
    return r;
  };
  auto axpy = [&](SymVec& a, const BigRat& c, const SymVec& v) {
    Scalar s{c, BigRat(0), alg.radicand()};
    for (int k = 0; k < alg.dim(); ++k)
      a.comp[static_cast<size_t>(k)] += v.comp[static_cast<size_t>(k)] * s;
  };
  auto isz = [](const SymVec& v) { return v.is_zero(); };
  SymVec r = bch_core(terms, x, y, std::move(acc), bracket, axpy, isz);
  check_degree_guard(alg, r);
  return r;
}

Vec bch(const LieAlgebra& alg, const Vec& x, const Vec& y) {
  const auto& terms = dynkin_terms_cached(alg.step());
  auto bracket = [&](const Vec& a, const Vec& b) { return alg.bracket(a, b); };
  auto axpy = [&](Vec& a, const BigRat& c, const Vec& v) {
    Scalar s{c, BigRat(0), alg.radicand()};
    for (size_t k = 0; k < a.size(); ++k) a[k] += v[k] * s;
  };
  auto isz = [](const Vec& v) { return is_zero(v); };
  return bch_core(terms, x, y, zero_vec(alg.dim()), bracket, axpy, isz);
}

SymVec exp_from_second_kind(const LieAlgebra& alg, const std::vector<MPoly>& coords) {
  VarSetPtr vars = coords.at(0).vars();
  SymVec w = SymVec::basis_times(vars, alg.dim(), 0, coords[0]);
  for (int j = 1; j < alg.dim(); ++j) {
    SymVec f = SymVec::basis_times(vars, alg.dim(), j, coords[static_cast<size_t>(j)]);
    w = bch(alg, w, f);
  }
  return w;
}

Vec exp_from_second_kind(const LieAlgebra& alg, const Vec& coords) {
  Vec w = zero_vec(alg.dim());
  w[0] = coords[0];
  for (int j = 1; j < alg.dim(); ++j) {
    Vec f = zero_vec(alg.dim());
    f[static_cast<size_t>(j)] = coords[static_cast<size_t>(j)];
    w = bch(alg, w, f);
  }
  return w;
}

std::vector<MPoly> second_kind_from_exp(const LieAlgebra& alg, SymVec w) {
  int n = alg.dim();
  std::vector<MPoly> u(static_cast<size_t>(n), MPoly(w.vars));
  for (int j = n - 1; j >= 0; --j) {
    u[static_cast<size_t>(j)] = w.comp[static_cast<size_t>(j)];
    SymVec f = SymVec::basis_times(w.vars, n, j, -u[static_cast<size_t>(j)]);
    w = bch(alg, w, f);
  }
  if (!w.is_zero())
    throw NotStrongMalcev("exponential peeling did not terminate; basis order is not strong Malcev");
  return u;
}

Vec second_kind_from_exp(const LieAlgebra& alg, Vec w) {
  int n = alg.dim();
  Vec u = zero_vec(n);
  for (int j = n - 1; j >= 0; --j) {
    u[static_cast<size_t>(j)] = w[static_cast<size_t>(j)];
    Vec f = zero_vec(n);
    f[static_cast<size_t>(j)] = -u[static_cast<size_t>(j)];
    w = bch(alg, w, f);
  }
  if (!is_zero(w))
    throw NotStrongMalcev("exponential peeling did not terminate; basis order is not strong Malcev");
  return u;
}

Vec group_mul(const LieAlgebra& alg, const Vec& a, const Vec& b) {
  return second_kind_from_exp(
      alg, bch(alg, exp_from_second_kind(alg, a), exp_from_second_kind(alg, b)));
}

Vec group_inverse(const LieAlgebra& alg, const Vec& a) {
  return second_kind_from_exp(alg, neg(exp_from_second_kind(alg, a)));
}

VarSetPtr coordinate_vars(const LieAlgebra& alg, bool two_sided) {
  VarSet names;
  for (const auto& l : alg.labels()) names.push_back(lowercase(l));
  if (two_sided)
    for (const auto& l : alg.labels()) names.push_back(lowercase(l) + "'");
  return make_vars(std::move(names));
}

bool GroupLaw::triangular() const {
  for (int j = 0; j < n; ++j) {
    MPoly residual = polys[static_cast<size_t>(j)];
    residual.add_term([&] { Mono m(static_cast<size_t>(2 * n), 0); m[static_cast<size_t>(j)] = 1; return m; }(), Scalar(-1));
    residual.add_term([&] { Mono m(static_cast<size_t>(2 * n), 0); m[static_cast<size_t>(n + j)] = 1; return m; }(), Scalar(-1));
    if (j >= n - 2) {
      if (!residual.is_zero()) return false;
      continue;
    }
    for (int v : residual.support())
      if (v <= j || (v >= n && v <= n + j)) return false;
  }
  return true;
}

GroupLaw group_law(const LieAlgebra& alg) {
  int n = alg.dim();
  VarSetPtr vars = coordinate_vars(alg, true);
  std::vector<MPoly> factors;
  for (int j = 0; j < n; ++j) factors.push_back(MPoly::variable(vars, j));
  SymVec w = exp_from_second_kind(alg, factors);
  for (int j = 0; j < n; ++j) {
    SymVec f = SymVec::basis_times(vars, n, j, MPoly::variable(vars, n + j));
    w = bch(alg, w, f);
  }
  GroupLaw law{vars, second_kind_from_exp(alg, std::move(w)), n};
  return law;
}

GroupLaw group_law(const LieAlgebra& alg, const std::vector<int>& ordering) {
  return group_law(reordered(alg, ordering));
}

std::vector<MPoly> exp_coords(const LieAlgebra& alg) {
  VarSetPtr vars = coordinate_vars(alg, false);
  std::vector<MPoly> factors;
  for (int j = 0; j < alg.dim(); ++j) factors.push_back(MPoly::variable(vars, j));
  return exp_from_second_kind(alg, factors).comp;
}

std::vector<MPoly> exp_coords(const LieAlgebra& alg, const std::vector<int>& ordering) {
  return exp_coords(reordered(alg, ordering));
}

std::pair<std::vector<MPoly>, std::vector<MPoly>> st_polys(const LieAlgebra& alg) {
  int n = alg.dim();
  VarSetPtr vars = coordinate_vars(alg, true);
  // First half of the factor list carries t-variables, second half s-variables.
  auto fold = [&](const std::vector<int>& order) {
    SymVec w = SymVec::zero(vars, n);
    bool started = false;
    for (size_t idx = 0; idx < order.size(); ++idx) {
      int j = order[idx];
      int var = idx >= order.size() / 2 ? n + j : j;
      SymVec f = SymVec::basis_times(vars, n, j, MPoly::variable(vars, var));
      w = started ? bch(alg, w, f) : f;
      started = true;
    }
    return second_kind_from_exp(alg, std::move(w));
  };
  // S: exp(t_n X_n)...exp(t_1 X_1) * exp(s_1 X_1)...exp(s_n X_n)
  std::vector<int> s_order, t_order;
  for (int j = n - 1; j >= 0; --j) s_order.push_back(j);
  for (int j = 0; j < n; ++j) s_order.push_back(j);
  // T: exp(t_1 X_1)...exp(t_n X_n) * exp(s_n X_n)...exp(s_1 X_1)
  for (int j = 0; j < n; ++j) t_order.push_back(j);
  for (int j = n - 1; j >= 0; --j) t_order.push_back(j);
  return {fold(s_order), fold(t_order)};
}

std::pair<std::vector<MPoly>, std::vector<MPoly>> st_polys(const LieAlgebra& alg,
                                                           const std::vector<int>& ordering) {
  return st_polys(reordered(alg, ordering));
}

std::vector<std::vector<MPoly>> adjoint(const LieAlgebra& alg, const SymVec& x) {
  int n = alg.dim();
  // ad(x)_{kj} = sum_i x_i c_{ij}^k
  std::vector<std::vector<MPoly>> ad(static_cast<size_t>(n),
                                     std::vector<MPoly>(static_cast<size_t>(n), MPoly(x.vars)));
  for (int i = 0; i < n; ++i) {
    if (x.comp[static_cast<size_t>(i)].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      const Vec& c = alg.bracket(i, j);
      for (int k = 0; k < n; ++k)
        if (!c[static_cast<size_t>(k)].is_zero())
          ad[static_cast<size_t>(k)][static_cast<size_t>(j)] +=
              x.comp[static_cast<size_t>(i)] * c[static_cast<size_t>(k)];
    }
  }
  // Ad(exp x) = sum_{k <= step} ad(x)^k / k!
  auto mat_mul = [&](const std::vector<std::vector<MPoly>>& a,
                     const std::vector<std::vector<MPoly>>& b) {
    std::vector<std::vector<MPoly>> r(static_cast<size_t>(n),
                                      std::vector<MPoly>(static_cast<size_t>(n), MPoly(x.vars)));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (a[static_cast<size_t>(i)][static_cast<size_t>(k)].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
          if (b[static_cast<size_t>(k)][static_cast<size_t>(j)].is_zero()) continue;
          r[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
              a[static_cast<size_t>(i)][static_cast<size_t>(k)] *
              b[static_cast<size_t>(k)][static_cast<size_t>(j)];
        }
      }
    return r;
  };
  std::vector<std::vector<MPoly>> result(
      static_cast<size_t>(n), std::vector<MPoly>(static_cast<size_t>(n), MPoly(x.vars)));
  for (int i = 0; i < n; ++i)
    result[static_cast<size_t>(i)][static_cast<size_t>(i)] = MPoly::constant(x.vars, Scalar(1));
  std::vector<std::vector<MPoly>> power = result;
  BigRat fact(1);
  for (int k = 1; k < alg.step(); ++k) {
    power = mat_mul(power, ad);
    fact *= k;
    Scalar inv_fact{BigRat(1) / fact, BigRat(0), alg.radicand()};
    bool all_zero = true;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (power[static_cast<size_t>(i)][static_cast<size_t>(j)].is_zero()) continue;
        result[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
            power[static_cast<size_t>(i)][static_cast<size_t>(j)] * inv_fact;
        all_zero = false;
      }
    if (all_zero) break;
  }
  return result;
}

Mat adjoint(const LieAlgebra& alg, const Vec& x) {
  VarSetPtr vars = make_vars({});
  auto m = adjoint(alg, SymVec::constant(vars, x));
  Mat r(alg.dim(), alg.dim());
  for (int i = 0; i < alg.dim(); ++i)
    for (int j = 0; j < alg.dim(); ++j)
      r(i, j) = m[static_cast<size_t>(i)][static_cast<size_t>(j)].constant_term();
  return r;
}

}  // namespace nb
