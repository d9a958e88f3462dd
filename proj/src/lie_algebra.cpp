#include "nilbasis/lie_algebra.hpp"

#include <algorithm>
#include <sstream>

#include "nilbasis/errors.hpp"

namespace nb {

struct ValidationAccess {
  static void set_step(LieAlgebra& a, int s) { a.step_ = s; }
};

LieAlgebra::LieAlgebra(std::vector<std::string> labels,
                       std::vector<std::vector<Vec>> bracket_tensor, unsigned radicand)
    : n_(static_cast<int>(labels.size())),
      radicand_(radicand),
      labels_(std::move(labels)),
      c_(std::move(bracket_tensor)) {
  if (static_cast<int>(c_.size()) != n_)
    throw InputError("bracket tensor has wrong shape");
  for (const auto& row : c_) {
    if (static_cast<int>(row.size()) != n_) throw InputError("bracket tensor has wrong shape");
    for (const auto& v : row)
      if (static_cast<int>(v.size()) != n_) throw InputError("bracket tensor has wrong shape");
  }
}

int LieAlgebra::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InputError("unknown basis label: " + label);
  return static_cast<int>(it - labels_.begin());
}

Vec LieAlgebra::bracket(const Vec& u, const Vec& v) const {
  Vec r = zero_vec(n_);
  for (int i = 0; i < n_; ++i) {
    if (u[static_cast<size_t>(i)].is_zero()) continue;
    for (int j = 0; j < n_; ++j) {
      if (v[static_cast<size_t>(j)].is_zero()) continue;
      Scalar f = u[static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
      const Vec& b = bracket(i, j);
      for (int k = 0; k < n_; ++k)
        if (!b[static_cast<size_t>(k)].is_zero()) r[static_cast<size_t>(k)] += f * b[static_cast<size_t>(k)];
    }
  }
  return r;
}

int LieAlgebra::step() const {
  if (!step_) throw InputError("algebra not validated; call validate() first");
  return *step_;
}

Vec jacobi_residual(const LieAlgebra& alg, int i, int j, int k) {
  int n = alg.dim();
  Vec r = zero_vec(n);
  auto acc = [&](const Vec& inner, int outer) {
    // [inner, X_outer]
    for (int a = 0; a < n; ++a) {
      if (inner[static_cast<size_t>(a)].is_zero()) continue;
      const Vec& b = alg.bracket(a, outer);
      for (int t = 0; t < n; ++t)
        if (!b[static_cast<size_t>(t)].is_zero())
          r[static_cast<size_t>(t)] += inner[static_cast<size_t>(a)] * b[static_cast<size_t>(t)];
    }
  };
  acc(alg.bracket(i, j), k);
  acc(alg.bracket(j, k), i);
  acc(alg.bracket(k, i), j);
  return r;
}

namespace {

std::string vec_str(const LieAlgebra& alg, const Vec& v) {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < alg.dim(); ++k) {
    if (v[static_cast<size_t>(k)].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << v[static_cast<size_t>(k)].str() << ")" << alg.label(k);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

/// Lower central series g^(1) = g, g^(m+1) = [g, g^(m)] until stabilization.
std::vector<Subspace> lower_central_series(const LieAlgebra& alg) {
  int n = alg.dim();
  std::vector<Vec> full;
  for (int i = 0; i < n; ++i) full.push_back(unit_vec(n, i));
  Subspace g(n, full);
  std::vector<Subspace> series{g};
  for (int m = 0; m < n + 1; ++m) {
    Subspace next = bracket_span(alg, g, series.back());
    if (next.dim() == series.back().dim()) break;
    series.push_back(next);
    if (next.dim() == 0) break;
  }
  return series;
}

}  // namespace

ValidationReport validate(LieAlgebra& alg) {
  ValidationReport rep;
  int n = alg.dim();
  for (int i = 0; i < n && rep.antisymmetry_ok; ++i)
    for (int j = i; j < n && rep.antisymmetry_ok; ++j) {
      Vec s = add(alg.bracket(i, j), alg.bracket(j, i));
      if (!is_zero(s)) {
        rep.antisymmetry_ok = false;
        rep.failure = "antisymmetry fails at (" + alg.label(i) + "," + alg.label(j) + ")";
      }
    }
  if (rep.antisymmetry_ok) {
    for (int i = 0; i < n && rep.jacobi_ok; ++i)
      for (int j = i + 1; j < n && rep.jacobi_ok; ++j)
        for (int k = j + 1; k < n && rep.jacobi_ok; ++k) {
          Vec r = jacobi_residual(alg, i, j, k);
          if (!is_zero(r)) {
            rep.jacobi_ok = false;
            rep.failure = "JacobiFail(" + alg.label(i) + "," + alg.label(j) + "," +
                          alg.label(k) + ") residual = " + vec_str(alg, r);
          }
        }
  }
  if (rep.antisymmetry_ok && rep.jacobi_ok) {
    auto series = lower_central_series(alg);
    if (series.back().dim() != 0) {
      rep.nilpotent_ok = false;
      rep.failure = "NotNilpotent: lower central series stabilizes at dimension " +
                    std::to_string(series.back().dim());
    } else {
      rep.step = static_cast<int>(series.size()) - 1;
      ValidationAccess::set_step(alg, rep.step);
    }
  }
  return rep;
}

void ensure_validated(LieAlgebra& alg) {
  if (alg.validated()) return;
  ValidationReport rep = validate(alg);
  if (rep.ok()) return;
  if (!rep.jacobi_ok) throw JacobiFail(rep.failure);
  if (!rep.nilpotent_ok) throw NotNilpotent(rep.failure);
  throw InputError(rep.failure);
}

Subspace center(const LieAlgebra& alg) {
  int n = alg.dim();
  // v central  <=>  sum_j v_j c_{ij}^k = 0 for all i, k
  Mat m(n * n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec& b = alg.bracket(i, j);
      for (int k = 0; k < n; ++k) m(i * n + k, j) = b[static_cast<size_t>(k)];
    }
  return Subspace(n, kernel(std::move(m)));
}

Subspace bracket_span(const LieAlgebra& alg, const Subspace& a, const Subspace& b) {
  std::vector<Vec> gens;
  for (const auto& u : a.reduced_basis())
    for (const auto& v : b.reduced_basis()) {
      Vec w = alg.bracket(u, v);
      if (!is_zero(w)) gens.push_back(std::move(w));
    }
  return Subspace(alg.dim(), std::move(gens));
}

bool is_ideal(const LieAlgebra& alg, const Subspace& s) {
  for (int i = 0; i < alg.dim(); ++i) {
    Vec e = unit_vec(alg.dim(), i);
    for (const auto& v : s.reduced_basis())
      if (!s.contains(alg.bracket(e, v))) return false;
  }
  return true;
}

bool is_subalgebra(const LieAlgebra& alg, const Subspace& s) {
  for (const auto& u : s.reduced_basis())
    for (const auto& v : s.reduced_basis())
      if (!s.contains(alg.bracket(u, v))) return false;
  return true;
}

bool verify_strong_malcev(const LieAlgebra& alg, const std::vector<int>& ordering) {
  int n = alg.dim();
  if (static_cast<int>(ordering.size()) != n) throw InputError("ordering has wrong length");
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int i : ordering) {
    if (i < 0 || i >= n || seen[static_cast<size_t>(i)])
      throw InputError("ordering is not a permutation");
    seen[static_cast<size_t>(i)] = true;
  }
  std::vector<Vec> prefix;
  for (int m = 0; m < n; ++m) {
    prefix.push_back(unit_vec(n, ordering[static_cast<size_t>(m)]));
    if (!is_ideal(alg, Subspace(n, prefix))) return false;
  }
  return true;
}

LieAlgebra change_basis(const LieAlgebra& alg, const BasisChange& s,
                        std::vector<std::string> new_labels) {
  int n = alg.dim();
  if (s.dim() != n) throw InputError("basis change has wrong dimension");
  if (new_labels.empty()) new_labels = alg.labels();
  std::vector<std::vector<Vec>> c(static_cast<size_t>(n),
                                  std::vector<Vec>(static_cast<size_t>(n), zero_vec(n)));
  for (int a = 0; a < n; ++a) {
    Vec ea = s.new_basis_vector(a);
    for (int b = 0; b < n; ++b) {
      Vec eb = s.new_basis_vector(b);
      c[static_cast<size_t>(a)][static_cast<size_t>(b)] = s.to_new(alg.bracket(ea, eb));
    }
  }
  LieAlgebra out(std::move(new_labels), std::move(c), alg.radicand());
  if (alg.validated()) ValidationAccess::set_step(out, alg.step());
  return out;
}

Subspace span_of_indices(const LieAlgebra& alg, const std::vector<int>& idx) {
  std::vector<Vec> gens;
  for (int i : idx) gens.push_back(unit_vec(alg.dim(), i));
  return Subspace(alg.dim(), std::move(gens));
}

Subspace span_of_labels(const LieAlgebra& alg, const std::vector<std::string>& labels) {
  std::vector<int> idx;
  for (const auto& l : labels) idx.push_back(alg.index_of(l));
  return span_of_indices(alg, idx);
}

}  // namespace nb
