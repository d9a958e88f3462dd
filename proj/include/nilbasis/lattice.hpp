#ifndef NILBASIS_LATTICE_HPP
#define NILBASIS_LATTICE_HPP

#include <string>
#include <vector>

#include "nilbasis/orbit.hpp"
#include "nilbasis/symbolic.hpp"

namespace nb {

/// A quasi-lattice or uniform subgroup built over a rescaled strong Malcev
/// basis W_j = q_j V_j of a Ch-R-ordered algebra.
struct LatticeSpec {
  enum class Kind { quasi_lattice, uniform_subgroup };

  std::string basis_id;       // tag; group points carry it to catch mismatches
  LieAlgebra scaled_algebra;  // structure constants in the W-basis
  BasisChange to_original;    // columns: W_j in the input algebra's coordinates
  Vec scales;                 // q_j
  BigInt k_factor{1};         // K (1 for a quasi-lattice)
  BigInt c_factor{1};         // C = K^(2^d - 1)
  Kind kind = Kind::quasi_lattice;
  int r = 0, d = 0;
  GroupLaw law;               // multiplication polynomials P' of the W-basis

  int dim() const { return scaled_algebra.dim(); }
};

/// Group element in second-kind coordinates of a named basis.
struct GroupPoint {
  std::string basis_id;
  Vec coords;
};

/// Fundamental domain bookkeeping: Sigma is parameterized by reversed-order
/// exponentials psi(t) = exp(t_n W_n)...exp(t_1 W_1), t in [0,1)^n; the
/// projected chart psi_H covers F in M\G with t in [0,1)^d.
struct FundamentalDomain {
  std::string basis_id;
  int n = 0, r = 0, d = 0;
  std::vector<std::string> labels;
};

/// Gamma = exp(Z W_1)...exp(Z W_n) over the given Ch-R-ordered algebra;
/// K = 1. `to_original` records the basis for measure bookkeeping.
std::pair<LatticeSpec, FundamentalDomain> build_quasi_lattice(const LieAlgebra& chr_alg,
                                                              const BasisChange& to_original,
                                                              int r, int d,
                                                              const std::string& basis_id);

/// Rescales by the doubling scheme with K = lcm of the multiplication
/// polynomials' coefficient denominators, escalating until all rescaled
/// coefficients are integers. Throws IrrationalScaling for surd coefficients.
std::pair<LatticeSpec, FundamentalDomain> uniformize(const LieAlgebra& chr_alg,
                                                     const BasisChange& to_original,
                                                     int r, int d,
                                                     const std::string& basis_id);

/// Unique decomposition g = exp(t_n W_n)...exp(t_1 W_1) gamma_1^{k_1} ...
/// gamma_n^{k_n} with t in [0,1)^n, k integer; exact.
struct Decomposition {
  Vec t;                    // fractional chart coordinates, each in [0,1)
  std::vector<BigInt> k;    // lattice indices
};
Decomposition decompose(const LatticeSpec& spec, const GroupPoint& g);

/// Coordinates of sigma(t) = exp(t_n W_n)...exp(t_1 W_1).
Vec sigma_coords(const LieAlgebra& alg, const Vec& t);
/// Coordinates of gamma(k) = exp(k_1 W_1)...exp(k_n W_n) (= k itself).
Vec gamma_coords(const LieAlgebra& alg, const std::vector<BigInt>& k);

/// Quotient lattice and domain by the ideal spanned by the first `n_ideal`
/// basis vectors. Throws BasisNotThroughIdeal when `ideal` is not that span.
std::pair<LatticeSpec, FundamentalDomain> project_quotient(const LatticeSpec& spec,
                                                           const FundamentalDomain& domain,
                                                           const Subspace& ideal);

/// Generator lists of Definition (discrete set): modulation generators from
/// the Y-block, translation generators from the X~-block, and the chart data
/// of F.
struct DiscreteSetReport {
  struct Generator {
    std::string label;
    Scalar scale;   // exact scale on the underlying Ch-R vector
  };
  std::vector<Generator> gamma_m;  // exp(Z q_{r+1} Y_1) ... exp(Z q_{r+d} Y_d)
  std::vector<Generator> gamma_h;  // exp(Z q_{r+d+1} X~_d) ... exp(Z q_n X~_1)
  BigInt k_factor, c_factor;
  int d = 0;
};
DiscreteSetReport discrete_set(const LatticeSpec& spec);

/// mu_{G/Z}(Sigma), exact, from the measure-basis -> W-basis change restricted
/// to g/z. Asserts covolume * d_pi = 1 (CovolumeMismatch otherwise).
Scalar covolume(const LatticeSpec& spec, const BasisChange& measure_splitting,
                const Scalar& d_pi);
/// The measure itself, no assertion.
Scalar quotient_covolume(const LatticeSpec& spec, const BasisChange& measure_splitting);

}  // namespace nb

#endif
