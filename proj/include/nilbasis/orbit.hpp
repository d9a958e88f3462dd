#ifndef NILBASIS_ORBIT_HPP
#define NILBASIS_ORBIT_HPP

#include <vector>

#include "nilbasis/lie_algebra.hpp"
#include "nilbasis/symbolic.hpp"

namespace nb {

/// Exact Pfaffian of a skew-symmetric matrix by skew elimination
/// (Parlett-Reid style congruences). Pf^2 = det.
Scalar pfaffian(Mat skew);

struct SymplecticData {
  Mat b;             // 2d x 2d matrix of B_l over g/z in the splitting order
  Scalar pfaffian;   // signed
  bool nondegenerate = false;
};

/// B_l(u, v) = l([u, v]) on the complement of the center. The splitting's
/// first r columns must span z(g) and l must vanish on the remaining columns
/// (z* representative) — else CenterMismatch.
SymplecticData symplectic_form(const LieAlgebra& alg, const Functional& l,
                               const BasisChange& splitting, int r);

/// Flat-orbit / square-integrability test: B_l nondegenerate on g/z.
bool is_si_z(LieAlgebra& alg, const Functional& l);

/// d_pi = |Pf(l)| in the Haar normalization fixed by the splitting's unit
/// cube. Throws DegenerateForm when the form is singular.
Scalar formal_degree(const LieAlgebra& alg, const Functional& l,
                     const BasisChange& measure_splitting, int r);

/// True iff s is an isotropic subalgebra of maximal dimension r + d.
bool is_polarization(const LieAlgebra& alg, const Functional& l, const Subspace& s);

/// Chevalley-Rosenlicht-admissible data subordinate to l, in the distinguished
/// normalization l([X~_j, Y_k]) = delta_{jk}.
struct ChRBasis {
  LieAlgebra chr_algebra;   // basis (Z_1..Z_r, Y_1..Y_d, X~_d, ..., X~_1)
  BasisChange change;       // columns = Ch-R basis vectors in original coordinates
  Functional l_chr;         // l in Ch-R dual coordinates
  int r = 0, d = 0;
  Mat a_tilde;              // l([X~_j, Y_k]), identity by construction
  std::vector<MPoly> q;     // orbit polynomials Q_j(t_1..t_d), unscaled chart
  bool distinguished = true;
  std::vector<Vec> h_basis; // X~_d, ..., X~_1 in original coordinates

  /// Basis index of X~_j (j = 1..d) inside chr_algebra.
  int xt_slot(int j) const { return r + 2 * d - j; }
  /// Basis index of Y_k (k = 1..d).
  int y_slot(int k) const { return r + k - 1; }
};

/// Builds the distinguished Ch-R basis for a polarizing ideal m and a strong
/// Malcev ordering passing through z(g) and m. Throws NotPolarizingIdeal,
/// CenterMismatch, DegenerateForm, NoChRBasis.
ChRBasis chr_basis(const LieAlgebra& alg, const Functional& l, const Subspace& m,
                   const std::vector<int>& malcev_ordering);

/// Orbit polynomials of l . exp(t_d X~_d) ... exp(t_1 X~_1) extracted from the
/// coadjoint action on an algebra already in Ch-R order (works for rescaled
/// bases too). Returns the Y*-components; the Z*-components are checked to be
/// constant.
std::vector<MPoly> orbit_q_polys(const LieAlgebra& chr_alg, const Functional& l_chr,
                                 int r, int d);

/// Symbolic verification that the coadjoint orbit through l is the flat affine
/// space: Z*-components of l . exp(t . X~) are constant and the Y*-components
/// are exactly the Q_j.
bool orbit_flatness_check(const LieAlgebra& chr_alg, const Functional& l_chr, int r,
                          int d, const std::vector<MPoly>& q);

}  // namespace nb

#endif
