#ifndef NILBASIS_GRADATION_HPP
#define NILBASIS_GRADATION_HPP

#include <map>
#include <vector>

#include "nilbasis/orbit.hpp"

namespace nb {

/// Validated gradation g = (+)_k g_k adapted to the stored basis: every basis
/// vector is homogeneous of weight >= 1.
struct Gradation {
  std::map<int, int> weight;           // basis index -> k
  int top = 0;                         // N: highest nonempty weight
  std::map<int, int> summand_dims;     // k -> dim g_k
  std::vector<int> indices_of(int k) const {
    std::vector<int> v;
    for (const auto& [i, w] : weight)
      if (w == k) v.push_back(i);
    return v;
  }
};

/// Checks [g_k, g_k'] subset g_{k+k'} exactly on basis pairs and g_N subset
/// z(g). Throws GradationViolation with the offending bracket.
Gradation validate_gradation(LieAlgebra& alg, const std::map<int, int>& weights);

/// Polarizing ideal subordinate to every l = lambda Z* (lambda != 0) of a
/// graded algebra with one-dimensional center. N odd: m = (+)_{k > N/2} g_k;
/// N even: the Y-half of a symplectic basis of g_{N/2} w.r.t. B_l joins the
/// higher levels. Throws CenterNotOneDim, DegenerateForm.
Subspace polarization_from_gradation(LieAlgebra& alg, const Gradation& grad,
                                     const Functional& l);

/// Symplectic basis of the span of `indices` w.r.t. B_l(u,v) = l([u,v]):
/// returns (ys, xs) with l([ys_j, xs_k]) = delta_{jk} and both halves
/// isotropic. First-nonzero pivot scan, second vector normalized.
std::pair<std::vector<Vec>, std::vector<Vec>> symplectic_gram_schmidt(
    const LieAlgebra& alg, const Functional& l, const std::vector<int>& indices);

/// Distinguished Ch-R basis for a graded algebra with one-dimensional center,
/// built level by level (weight-descending ordering). Rational data stays
/// rational.
ChRBasis chr_basis_graded(LieAlgebra& alg, const Gradation& grad, const Functional& l);

/// Dilation delta_s: diagonal s^{weight(i)}; an exact Lie-algebra automorphism.
struct Dilation {
  Scalar s;
  Vec diagonal;
  Vec apply(const Vec& x) const {
    Vec r = x;
    for (size_t i = 0; i < r.size(); ++i) r[i] *= diagonal[i];
    return r;
  }
};

Dilation dilate(const Gradation& grad, const Scalar& s);
/// Transported functional (delta_s)* l: coords l_i * s^{weight(i)}.
Functional dilate_functional(const Gradation& grad, const Scalar& s, const Functional& l);

/// True iff all structure constants are rational and the weight-descending
/// ordering (through the tail ideals (+)_{k>=l} g_k) is strong Malcev.
bool rational_compat_check(const LieAlgebra& alg, const Gradation& grad);

/// Basis indices sorted by descending weight (ties by index); the tail-ideal
/// ordering used throughout the graded pipeline.
std::vector<int> weight_descending_ordering(const Gradation& grad, int n);

}  // namespace nb

#endif
