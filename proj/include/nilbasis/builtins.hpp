#ifndef NILBASIS_BUILTINS_HPP
#define NILBASIS_BUILTINS_HPP

#include <string>
#include <vector>

#include "nilbasis/lie_algebra.hpp"

namespace nb {

/// (2d+1)-dimensional Heisenberg algebra, basis (Z, Y_1..Y_d, X_1..X_d) with
/// [X_i, Y_i] = Z. Carries the gradation Z -> 2, others -> 1.
LieAlgebra heisenberg(int d);

/// 7-dimensional 3-step Dynin-Folland algebra, basis
/// (Z, Y1, Y2, Y3, X1, X2, X3); the polarizing ideal span{Z,Y1,Y2,Y3} is the
/// default m for the analysis pipeline.
LieAlgebra dynin_folland();

/// Dynin-Folland algebra in the relabeled weight-descending basis
/// (Z, Y1, Y2, Yp3, Xp1, X2, X3) with Xp1 := Y3 and Yp3 := X1 of the basis
/// above; carries the gradation (3 | 2,2,2 | 1,1,1).
LieAlgebra dynin_folland_graded();

/// 7-dimensional 6-step algebra over Q(sqrt 2) without rational structure,
/// basis ordered (X7, X6, ..., X1); default polarizing ideal
/// span{X7, X6, X5, X4} for l = lambda X7*.
LieAlgebra example_7dim_sqrt2();

struct BuiltinInfo {
  std::string name;
  std::string description;
};
std::vector<BuiltinInfo> builtin_list();

/// Resolve "heisenberg:d", "dynin-folland", "dynin-folland-graded",
/// "example-7dim-sqrt2". Throws InputError for unknown names.
LieAlgebra builtin_algebra(const std::string& name);

/// Default polarizing-ideal labels for a builtin (empty when the pipeline
/// should construct one from the gradation).
std::vector<std::string> builtin_default_polarization(const std::string& name);

}  // namespace nb

#endif
