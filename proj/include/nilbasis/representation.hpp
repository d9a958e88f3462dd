#ifndef NILBASIS_REPRESENTATION_HPP
#define NILBASIS_REPRESENTATION_HPP

#include <vector>

#include "nilbasis/lattice.hpp"

namespace nb {

/// The induced representation as an explicit symbolic operator on the
/// quotient chart: (pi(g) f)(t) = e^{2 pi i phase(g; t)} f(arg_map(g; t)).
/// Variables: the n group coordinates of the lattice basis followed by the
/// quotient coordinates t_1..t_d; h'(t) = exp(t_d W_{r+d+1})...exp(t_1 W_n).
struct RepFormula {
  VarSetPtr vars;            // size n + d
  MPoly phase;               // real polynomial, multiplied by 2*pi*i
  std::vector<MPoly> arg_map;  // t'_j, j = 1..d; triangular with unit diagonal
  Vec central_coeffs;        // coefficient of each central variable in phase
  int n = 0, r = 0, d = 0;

  int t_var(int j) const { return n + j - 1; }         // variable index of t_j
  int xt_var(int j) const { return r + 2 * d - j; }    // variable index of the X~_j coordinate
  Scalar central_coeff() const { return central_coeffs.empty() ? Scalar(0) : central_coeffs[0]; }
};

/// Builds the representation induced from the polarizing ideal (the first
/// r + d coordinates of the lattice basis), with the Malcev-coordinate
/// cross-section. Throws NotPolarizingIdeal if l does not vanish on [m, m].
RepFormula induce(const LatticeSpec& spec, const Functional& l_scaled);

/// One family member pi(gamma) 1_F for gamma = theta . eta^{-1} with central
/// coordinates zeroed; phase and shifts have all group variables substituted,
/// so only t-variables remain.
struct OnbMember {
  std::vector<long> theta, eta;
  MPoly phase;                 // in t-variables
  std::vector<MPoly> shifts;   // member support = { t : shifts(t) in [0,1)^d }
};

struct OnbFamily {
  RepFormula rep;
  LatticeSpec spec;
  long radius = 0;
  Scalar mu_f;                // mu(F) = d_pi^{-1} C^2, exact
  double normalization = 1;   // mu(F)^{-1/2}
  std::vector<OnbMember> members;
};

/// All members with |theta_j|, |eta_j| <= radius. `modulation_scale` is the
/// --scale test hook: it divides the modulation lattice step (1 = honest
/// construction).
OnbFamily onb_family(const RepFormula& rep, const LatticeSpec& spec, const Scalar& d_pi,
                     long radius, const Scalar& modulation_scale = Scalar(1));

/// mu(F) = d_pi^{-1} C^2 and the member normalization mu(F)^{-1/2}.
struct Normalization {
  Scalar mu_f;            // exact
  double normalization;   // mu(F)^{-1/2}
  double norm_1f;         // ||1_F|| = mu(F)^{1/2}
};
Normalization normalization(const LatticeSpec& spec, const Scalar& d_pi);

}  // namespace nb

#endif
