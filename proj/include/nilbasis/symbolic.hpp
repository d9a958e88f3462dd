#ifndef NILBASIS_SYMBOLIC_HPP
#define NILBASIS_SYMBOLIC_HPP

#include <string>
#include <utility>
#include <vector>

#include "nilbasis/lie_algebra.hpp"
#include "nilbasis/mpoly.hpp"

namespace nb {

/// g-valued polynomial in coordinate variables.
struct SymVec {
  VarSetPtr vars;
  std::vector<MPoly> comp;

  static SymVec zero(VarSetPtr v, int n) {
    SymVec s{v, std::vector<MPoly>(static_cast<size_t>(n), MPoly(v))};
    return s;
  }
  static SymVec basis_times(VarSetPtr v, int n, int basis_index, const MPoly& coeff) {
    SymVec s = zero(std::move(v), n);
    s.comp[static_cast<size_t>(basis_index)] = coeff;
    return s;
  }
  static SymVec constant(VarSetPtr v, const Vec& x) {
    SymVec s = zero(v, static_cast<int>(x.size()));
    for (size_t i = 0; i < x.size(); ++i) s.comp[i] = MPoly::constant(v, x[i]);
    return s;
  }
  bool is_zero() const {
    for (const auto& p : comp)
      if (!p.is_zero()) return false;
    return true;
  }
  int dim() const { return static_cast<int>(comp.size()); }
};

/// Exact BCH product log(exp(x) exp(y)) via the Dynkin series truncated at
/// commutator weight = nilpotency step (exact: all higher brackets vanish).
SymVec bch(const LieAlgebra& alg, const SymVec& x, const SymVec& y);
Vec bch(const LieAlgebra& alg, const Vec& x, const Vec& y);

/// log(exp(c_1 X_1) ... exp(c_n X_n)): exponential coordinates from
/// coordinates of the second kind, as one g-valued polynomial/vector.
SymVec exp_from_second_kind(const LieAlgebra& alg, const std::vector<MPoly>& coords);
Vec exp_from_second_kind(const LieAlgebra& alg, const Vec& coords);

/// Inverse conversion: peel exp(W) into exp(u_1 X_1)...exp(u_n X_n). Requires
/// the stored basis order to be strong Malcev.
std::vector<MPoly> second_kind_from_exp(const LieAlgebra& alg, SymVec w);
Vec second_kind_from_exp(const LieAlgebra& alg, Vec w);

/// Group operations on second-kind coordinates of the stored basis order.
Vec group_mul(const LieAlgebra& alg, const Vec& a, const Vec& b);
Vec group_inverse(const LieAlgebra& alg, const Vec& a);

/// The multiplication polynomials P_{X_j}(t, s) for the stored basis order:
/// phi(t) phi(s) = phi(P_{X_1}, ..., P_{X_n}).
struct GroupLaw {
  VarSetPtr vars;  // t-coordinates then s-coordinates (primed labels)
  std::vector<MPoly> polys;
  int n = 0;

  /// P_{X_n} and P_{X_{n-1}} additive; for j <= n-2 the non-additive part
  /// depends only on variables of index > j. Checked on variable support.
  bool triangular() const;
};

/// Throws NotStrongMalcev unless the ordering (a permutation, new-to-old) is
/// strong Malcev; returns the law in the ordered coordinates.
GroupLaw group_law(const LieAlgebra& alg, const std::vector<int>& ordering);
GroupLaw group_law(const LieAlgebra& alg);  // stored order

/// Exponential-coordinate polynomials R_{X_j}: phi(t) = exp(sum R_j(t) X_j).
std::vector<MPoly> exp_coords(const LieAlgebra& alg, const std::vector<int>& ordering);
std::vector<MPoly> exp_coords(const LieAlgebra& alg);

/// The reversed-product polynomials:
///   exp(t_n X_n)...exp(t_1 X_1) exp(s_1 X_1)...exp(s_n X_n)
///     = exp(S_1 X_1)...exp(S_n X_n),
///   exp(t_1 X_1)...exp(t_n X_n) exp(s_n X_n)...exp(s_1 X_1)
///     = exp(T_1 X_1)...exp(T_n X_n).
std::pair<std::vector<MPoly>, std::vector<MPoly>> st_polys(const LieAlgebra& alg,
                                                           const std::vector<int>& ordering);
std::pair<std::vector<MPoly>, std::vector<MPoly>> st_polys(const LieAlgebra& alg);

/// Ad(exp x) = sum_k ad(x)^k / k! as an exact polynomial matrix (column j is
/// the image of X_j).
std::vector<std::vector<MPoly>> adjoint(const LieAlgebra& alg, const SymVec& x);
Mat adjoint(const LieAlgebra& alg, const Vec& x);

/// Variable names for group coordinates: lowercased labels, primed copy for
/// the second factor when two_sided.
VarSetPtr coordinate_vars(const LieAlgebra& alg, bool two_sided);

}  // namespace nb

#endif
