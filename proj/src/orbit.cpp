#include "nilbasis/orbit.hpp"

#include <string>

#include "nilbasis/errors.hpp"

namespace nb {

Scalar pfaffian(Mat a) {
  int n = a.rows();
  if (n != a.cols()) throw InputError("pfaffian of non-square matrix");
  if (n % 2 == 1) return Scalar(0);
  Scalar pf(1);
  for (int k = 0; k < n; k += 2) {
    int p = -1;
    for (int i = k + 1; i < n; ++i)
      if (!a(k, i).is_zero()) { p = i; break; }
    if (p < 0) return Scalar(0);
    if (p != k + 1) {
      for (int j = 0; j < n; ++j) std::swap(a(k + 1, j), a(p, j));
      for (int i = 0; i < n; ++i) std::swap(a(i, k + 1), a(i, p));
      pf = -pf;
    }
    Scalar pivot = a(k, k + 1);
    // Clear row k (and col k) beyond k+1 with row/col k+1, then row k+1 (and
    // col k+1) with row/col k. Unit-triangular congruences keep Pf.
    for (int j = k + 2; j < n; ++j) {
      if (!a(k, j).is_zero()) {
        Scalar f = a(k, j) / pivot;
        for (int t = 0; t < n; ++t) a(j, t) -= f * a(k + 1, t);
        for (int t = 0; t < n; ++t) a(t, j) -= f * a(t, k + 1);
      }
      if (!a(k + 1, j).is_zero()) {
        Scalar f = a(k + 1, j) / a(k + 1, k);  // a(k+1,k) = -pivot
        for (int t = 0; t < n; ++t) a(j, t) -= f * a(k, t);
        for (int t = 0; t < n; ++t) a(t, j) -= f * a(t, k);
      }
    }
    pf *= pivot;
  }
  return pf;
}

SymplecticData symplectic_form(const LieAlgebra& alg, const Functional& l,
                               const BasisChange& splitting, int r) {
  int n = alg.dim();
  int two_d = n - r;
  Subspace z = center(alg);
  if (z.dim() != r) throw CenterMismatch("splitting prefix length differs from dim z(g)");
  for (int i = 0; i < r; ++i)
    if (!z.contains(splitting.new_basis_vector(i)))
      throw CenterMismatch("splitting prefix does not span the center");
  for (int j = r; j < n; ++j)
    if (!l.pair(splitting.new_basis_vector(j)).is_zero())
      throw CenterMismatch("functional does not vanish on the complement of z(g)*");
  SymplecticData out;
  out.b = Mat(two_d, two_d);
  for (int i = 0; i < two_d; ++i)
    for (int j = 0; j < two_d; ++j)
      out.b(i, j) = l.pair(
          alg.bracket(splitting.new_basis_vector(r + i), splitting.new_basis_vector(r + j)));
  out.pfaffian = pfaffian(out.b);
  out.nondegenerate = !out.pfaffian.is_zero();
  return out;
}

namespace {

/// Completion of the center to a full splitting: center rref basis first, then
/// greedily independent unit vectors.
BasisChange center_first_splitting(const LieAlgebra& alg) {
  Subspace z = center(alg);
  std::vector<Vec> cols = z.reduced_basis();
  for (int i = 0; i < alg.dim() && static_cast<int>(cols.size()) < alg.dim(); ++i) {
    std::vector<Vec> trial = cols;
    trial.push_back(unit_vec(alg.dim(), i));
    if (Subspace(alg.dim(), trial).dim() > static_cast<int>(cols.size()))
      cols.push_back(unit_vec(alg.dim(), i));
  }
  return BasisChange(Mat::from_cols(cols));
}

}  // namespace

bool is_si_z(LieAlgebra& alg, const Functional& l) {
  ensure_validated(alg);
  int r = center(alg).dim();
  return symplectic_form(alg, l, center_first_splitting(alg), r).nondegenerate;
}

Scalar formal_degree(const LieAlgebra& alg, const Functional& l,
                     const BasisChange& measure_splitting, int r) {
  SymplecticData s = symplectic_form(alg, l, measure_splitting, r);
  if (!s.nondegenerate) throw DegenerateForm("formal degree of a degenerate form");
  return s.pfaffian.abs();
}

bool is_polarization(const LieAlgebra& alg, const Functional& l, const Subspace& s) {
  if (!is_subalgebra(alg, s)) throw NotSubalgebra("candidate polarization is not a subalgebra");
  for (const auto& u : s.reduced_basis())
    for (const auto& v : s.reduced_basis())
      if (!l.pair(alg.bracket(u, v)).is_zero()) return false;
  int r = center(alg).dim();
  int d = (alg.dim() - r) / 2;
  return s.dim() == r + d;
}

std::vector<MPoly> orbit_q_polys(const LieAlgebra& chr_alg, const Functional& l_chr,
                                 int r, int d) {
  int n = chr_alg.dim();
  VarSet names;
  for (int j = 1; j <= d; ++j) names.push_back("t" + std::to_string(j));
  VarSetPtr vars = make_vars(std::move(names));
  // Ad(exp(t_d X~_d)) ... Ad(exp(t_1 X~_1)), X~_j at slot r + 2d - j.
  std::vector<std::vector<MPoly>> m;
  for (int j = d; j >= 1; --j) {
    int slot = r + 2 * d - j;
    auto fac = adjoint(chr_alg,
                       SymVec::basis_times(vars, n, slot, MPoly::variable(vars, j - 1)));
    if (m.empty()) {
      m = std::move(fac);
      continue;
    }
    std::vector<std::vector<MPoly>> prod(static_cast<size_t>(n),
                                         std::vector<MPoly>(static_cast<size_t>(n), MPoly(vars)));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (m[static_cast<size_t>(i)][static_cast<size_t>(k)].is_zero()) continue;
        for (int jj = 0; jj < n; ++jj)
          prod[static_cast<size_t>(i)][static_cast<size_t>(jj)] +=
              m[static_cast<size_t>(i)][static_cast<size_t>(k)] *
              fac[static_cast<size_t>(k)][static_cast<size_t>(jj)];
      }
    m = std::move(prod);
  }
  // coadjoint covector: (l . h)_i = sum_k l_k M_{k,i}
  std::vector<MPoly> coadj(static_cast<size_t>(n), MPoly(vars));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (!l_chr.coords()[static_cast<size_t>(k)].is_zero())
        coadj[static_cast<size_t>(i)] +=
            m[static_cast<size_t>(k)][static_cast<size_t>(i)] * l_chr.coords()[static_cast<size_t>(k)];
  for (int i = 0; i < r; ++i) {
    MPoly dev = coadj[static_cast<size_t>(i)] -
                MPoly::constant(vars, l_chr.coords()[static_cast<size_t>(i)]);
    if (!dev.is_zero())
      throw NoChRBasis("coadjoint orbit is not flat over the center component " +
                       chr_alg.label(i));
  }
  std::vector<MPoly> q;
  for (int j = 1; j <= d; ++j) q.push_back(coadj[static_cast<size_t>(r + j - 1)]);
  return q;
}

bool orbit_flatness_check(const LieAlgebra& chr_alg, const Functional& l_chr, int r,
                          int d, const std::vector<MPoly>& q) {
  std::vector<MPoly> again;
  try {
    again = orbit_q_polys(chr_alg, l_chr, r, d);
  } catch (const NoChRBasis&) {
    return false;
  }
  for (int j = 0; j < d; ++j)
    if (!(again[static_cast<size_t>(j)] == q[static_cast<size_t>(j)])) return false;
  return true;
}

ChRBasis chr_basis(const LieAlgebra& alg, const Functional& l, const Subspace& m,
                   const std::vector<int>& malcev_ordering) {
  int n = alg.dim();
  Subspace z = center(alg);
  int r = z.dim();
  int d = (n - r) / 2;
  if (n != r + 2 * d) throw DegenerateForm("dim g - dim z(g) must be even for SI/Z");
  if (m.dim() != r + d || !is_ideal(alg, m))
    throw NotPolarizingIdeal("m must be an ideal of dimension r + d");
  if (!is_polarization(alg, l, m))
    throw NotPolarizingIdeal("l does not vanish on [m, m]");
  if (!verify_strong_malcev(alg, malcev_ordering))
    throw NotStrongMalcev("ordering is not strong Malcev");
  // ordering must pass through z and m
  std::vector<int> prefix_z(malcev_ordering.begin(), malcev_ordering.begin() + r);
  std::vector<int> prefix_m(malcev_ordering.begin(), malcev_ordering.begin() + r + d);
  Subspace span_z = span_of_indices(alg, prefix_z);
  Subspace span_m = span_of_indices(alg, prefix_m);
  if (!(z.contains(span_z) && span_z.contains(z)))
    throw CenterMismatch("Malcev ordering does not pass through z(g)");
  if (!(m.contains(span_m) && span_m.contains(m)))
    throw NotPolarizingIdeal("Malcev ordering does not pass through m");
  for (int j = r; j < n; ++j)
    if (!l.pair(unit_vec(n, malcev_ordering[static_cast<size_t>(j)])).is_zero())
      throw CenterMismatch("functional has coordinates outside z(g)*");

  // A_{jk} = l([X_j, Y_k]); X~_j = sum_m (A^{-1})_{jm} X_m.
  Mat a(d, d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      a(j, k) = l.pair(alg.bracket(unit_vec(n, malcev_ordering[static_cast<size_t>(r + d + j)]),
                                   unit_vec(n, malcev_ordering[static_cast<size_t>(r + k)])));
  Mat a_inv;
  try {
    a_inv = inverse(a);
  } catch (const SingularMatrix&) {
    throw DegenerateForm("pairing matrix l([X_j, Y_k]) is singular");
  }
  std::vector<Vec> xt(static_cast<size_t>(d));  // xt[j-1] = X~_j in original coords
  for (int j = 0; j < d; ++j) {
    Vec v = zero_vec(n);
    for (int mm = 0; mm < d; ++mm) {
      Vec base = unit_vec(n, malcev_ordering[static_cast<size_t>(r + d + mm)]);
      v = add(v, scale(a_inv(j, mm), base));
    }
    xt[static_cast<size_t>(j)] = std::move(v);
  }

  // Columns: Z's, Y's (original ordering), then X~_d ... X~_1.
  std::vector<Vec> cols;
  std::vector<std::string> labels;
  for (int i = 0; i < r + d; ++i) {
    cols.push_back(unit_vec(n, malcev_ordering[static_cast<size_t>(i)]));
    labels.push_back(alg.label(malcev_ordering[static_cast<size_t>(i)]));
  }
  for (int j = d; j >= 1; --j) {
    cols.push_back(xt[static_cast<size_t>(j - 1)]);
    labels.push_back("Xt" + std::to_string(j));
  }
  BasisChange change(Mat::from_cols(cols));

  // Prefix-ideal property of the new ordered list decides admissibility.
  std::vector<Vec> prefix;
  for (int i = 0; i < n; ++i) {
    prefix.push_back(cols[static_cast<size_t>(i)]);
    if (!is_ideal(alg, Subspace(n, prefix)))
      throw NoChRBasis("distinguished basis is not strong Malcev at prefix " +
                       std::to_string(i + 1));
  }

  ChRBasis out{change_basis(alg, change, labels), change, l.in_basis(change), r, d,
               Mat(d, d), {}, true, {}};
  for (int j = 1; j <= d; ++j) out.h_basis.push_back(xt[static_cast<size_t>(j - 1)]);
  std::reverse(out.h_basis.begin(), out.h_basis.end());
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      out.a_tilde(j, k) =
          l.pair(alg.bracket(xt[static_cast<size_t>(j)],
                             unit_vec(n, malcev_ordering[static_cast<size_t>(r + k)])));
      Scalar expect = (j == k) ? Scalar(1) : Scalar(0);
      if (out.a_tilde(j, k) != expect)
        throw NoChRBasis("distinguished normalization failed at (" + std::to_string(j + 1) +
                         "," + std::to_string(k + 1) + ")");
    }
  out.q = orbit_q_polys(out.chr_algebra, out.l_chr, r, d);
  return out;
}

}  // namespace nb
