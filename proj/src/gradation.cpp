#include "nilbasis/gradation.hpp"

#include <algorithm>

#include "nilbasis/errors.hpp"

namespace nb {

Gradation validate_gradation(LieAlgebra& alg, const std::map<int, int>& weights) {
  ensure_validated(alg);
  int n = alg.dim();
  if (static_cast<int>(weights.size()) != n)
    throw GradationViolation("gradation must assign a weight to every basis vector");
  Gradation g;
  g.weight = weights;
  for (const auto& [i, w] : weights) {
    if (i < 0 || i >= n || w < 1)
      throw GradationViolation("weights must be >= 1 on valid basis indices");
    g.top = std::max(g.top, w);
    g.summand_dims[w] += 1;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec& b = alg.bracket(i, j);
      int target = g.weight.at(i) + g.weight.at(j);
      for (int k = 0; k < n; ++k)
        if (!b[static_cast<size_t>(k)].is_zero() && g.weight.at(k) != target)
          throw GradationViolation("[" + alg.label(i) + ", " + alg.label(j) +
                                   "] leaves weight " + std::to_string(target));
    }
  // g_N sits inside the center.
  Subspace z = center(alg);
  for (int i : g.indices_of(g.top))
    if (!z.contains(unit_vec(n, i)))
      throw GradationViolation("top-weight summand is not central");
  return g;
}

std::vector<int> weight_descending_ordering(const Gradation& grad, int n) {
  std::vector<int> order;
  for (int k = grad.top; k >= 1; --k)
    for (int i : grad.indices_of(k)) order.push_back(i);
  if (static_cast<int>(order.size()) != n)
    throw GradationViolation("gradation does not cover the basis");
  return order;
}

std::pair<std::vector<Vec>, std::vector<Vec>> symplectic_gram_schmidt(
    const LieAlgebra& alg, const Functional& l, const std::vector<int>& indices) {
  auto form = [&](const Vec& u, const Vec& v) { return l.pair(alg.bracket(u, v)); };
  std::vector<Vec> pool;
  for (int i : indices) pool.push_back(unit_vec(alg.dim(), i));
  std::vector<Vec> ys, xs;
  while (!pool.empty()) {
    int pi = -1, pj = -1;
    for (size_t i = 0; i < pool.size() && pi < 0; ++i)
      for (size_t j = i + 1; j < pool.size(); ++j)
        if (!form(pool[i], pool[j]).is_zero()) {
          pi = static_cast<int>(i);
          pj = static_cast<int>(j);
          break;
        }
    if (pi < 0)
      throw DegenerateForm("symplectic form is degenerate on the given summand");
    Vec u = pool[static_cast<size_t>(pi)];
    Vec v = scale(form(u, pool[static_cast<size_t>(pj)]).inverse(), pool[static_cast<size_t>(pj)]);
    std::vector<Vec> rest;
    for (size_t t = 0; t < pool.size(); ++t) {
      if (static_cast<int>(t) == pi || static_cast<int>(t) == pj) continue;
      const Vec& w = pool[t];
      Vec proj = add(sub(w, scale(form(w, v), u)), scale(form(w, u), v));
      rest.push_back(std::move(proj));
    }
    ys.push_back(std::move(u));
    xs.push_back(std::move(v));
    pool = std::move(rest);
  }
  return {ys, xs};
}

namespace {

void require_one_dim_center_rep(LieAlgebra& alg, const Functional& l) {
  ensure_validated(alg);
  Subspace z = center(alg);
  if (z.dim() != 1)
    throw CenterNotOneDim("graded polarization construction needs dim z(g) = 1");
  bool nonzero = false;
  for (int i = 0; i < alg.dim(); ++i) {
    Scalar li = l.coords()[static_cast<size_t>(i)];
    if (li.is_zero()) continue;
    nonzero = true;
    if (!z.contains(unit_vec(alg.dim(), i)))
      throw CenterMismatch("functional has coordinates outside z(g)*");
  }
  if (!nonzero) throw DegenerateForm("functional vanishes on the center");
}

}  // namespace

Subspace polarization_from_gradation(LieAlgebra& alg, const Gradation& grad,
                                     const Functional& l) {
  require_one_dim_center_rep(alg, l);
  if (!is_si_z(alg, l)) throw DegenerateForm("symplectic form is degenerate on g/z");
  int n = alg.dim();
  int n0 = grad.top / 2;  // N odd: m = levels > N0; N even: + Y-half of g_N0
  std::vector<Vec> gens;
  for (int k = n0 + 1; k <= grad.top; ++k)
    for (int i : grad.indices_of(k)) gens.push_back(unit_vec(n, i));
  if (grad.top % 2 == 0) {
    auto mid = grad.indices_of(n0);
    if (!mid.empty()) {
      auto [ys, xs] = symplectic_gram_schmidt(alg, l, mid);
      for (auto& y : ys) gens.push_back(std::move(y));
    }
  }
  Subspace m(n, std::move(gens));
  int d = (n - 1) / 2;
  if (m.dim() != d + 1 || !is_ideal(alg, m) || !is_polarization(alg, l, m))
    throw DegenerateForm("graded polarization construction failed");
  return m;
}

ChRBasis chr_basis_graded(LieAlgebra& alg, const Gradation& grad, const Functional& l) {
  require_one_dim_center_rep(alg, l);
  int n = alg.dim();
  int n0 = grad.top / 2;
  // Even N: replace the g_{N0} block by its symplectic basis first.
  BasisChange pre = BasisChange::identity(n);
  std::vector<std::string> labels = alg.labels();
  LieAlgebra work = alg;
  std::vector<int> mid_y, mid_x;  // indices (in `work`) of the split middle level
  if (grad.top % 2 == 0 && !grad.indices_of(n0).empty()) {
    auto mid = grad.indices_of(n0);
    auto [ys, xs] = symplectic_gram_schmidt(alg, l, mid);
    std::vector<Vec> cols;
    for (int i = 0; i < n; ++i) cols.push_back(unit_vec(n, i));
    for (size_t t = 0; t < ys.size(); ++t) {
      cols[static_cast<size_t>(mid[t])] = ys[t];
      cols[static_cast<size_t>(mid[ys.size() + t])] = xs[t];
      mid_y.push_back(mid[t]);
      mid_x.push_back(mid[ys.size() + t]);
    }
    pre = BasisChange(Mat::from_cols(cols));
    work = change_basis(alg, pre, labels);
  }
  Functional l_pre = l.in_basis(pre);
  // Weight-descending ordering; within the (even) middle level the Y-half
  // precedes the X-half so the prefix through m is contiguous.
  std::vector<int> order;
  for (int k = grad.top; k >= 1; --k) {
    if (k == n0 && grad.top % 2 == 0) {
      for (int i : mid_y) order.push_back(i);
      continue;  // x-half appended below, right after the rest of m
    }
    if (grad.top % 2 == 0 && k < n0) continue;
    if (grad.top % 2 == 1 && k <= n0) continue;
    for (int i : grad.indices_of(k)) order.push_back(i);
  }
  // h-part: descending weight from N0 downward (x-half of the middle first).
  if (grad.top % 2 == 0) {
    for (int i : mid_x) order.push_back(i);
    for (int k = n0 - 1; k >= 1; --k)
      for (int i : grad.indices_of(k)) order.push_back(i);
  } else {
    for (int k = n0; k >= 1; --k)
      for (int i : grad.indices_of(k)) order.push_back(i);
  }
  if (static_cast<int>(order.size()) != n)
    throw GradationViolation("gradation does not cover the basis");

  polarization_from_gradation(alg, grad, l);  // validates r = 1, SI/Z, m shape
  // The polarizing ideal in `work` coordinates is the order prefix of length
  // r + d (Z, higher levels, Y-half of the middle level).
  int d = (n - 1) / 2;
  Subspace m_work = span_of_indices(
      work, std::vector<int>(order.begin(), order.begin() + 1 + d));
  ChRBasis chr;
  try {
    chr = chr_basis(work, l_pre, m_work, order);
  } catch (const NotStrongMalcev& e) {
    throw NoChRBasis(std::string("graded ordering is not strong Malcev: ") + e.what());
  }
  // Report the change w.r.t. the ORIGINAL basis.
  BasisChange total(pre.matrix() * chr.change.matrix());
  chr.change = total;
  chr.h_basis.clear();
  for (int j = chr.d; j >= 1; --j)
    chr.h_basis.push_back(total.new_basis_vector(chr.xt_slot(j)));
  return chr;
}

Dilation dilate(const Gradation& grad, const Scalar& s) {
  if (s.is_zero()) throw InputError("dilation parameter must be nonzero");
  int n = static_cast<int>(grad.weight.size());
  Vec diag(static_cast<size_t>(n));
  for (const auto& [i, w] : grad.weight) {
    Scalar p(1);
    for (int t = 0; t < w; ++t) p *= s;
    diag[static_cast<size_t>(i)] = p;
  }
  return Dilation{s, std::move(diag)};
}

Functional dilate_functional(const Gradation& grad, const Scalar& s, const Functional& l) {
  Dilation d = dilate(grad, s);
  Vec coords = l.coords();
  for (size_t i = 0; i < coords.size(); ++i) coords[i] *= d.diagonal[i];
  return Functional(std::move(coords));
}

bool rational_compat_check(const LieAlgebra& alg, const Gradation& grad) {
  for (int i = 0; i < alg.dim(); ++i)
    for (int j = 0; j < alg.dim(); ++j)
      for (const auto& c : alg.bracket(i, j))
        if (!c.is_rational()) return false;
  return verify_strong_malcev(alg, weight_descending_ordering(grad, alg.dim()));
}

}  // namespace nb
