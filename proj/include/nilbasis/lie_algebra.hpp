#ifndef NILBASIS_LIE_ALGEBRA_HPP
#define NILBASIS_LIE_ALGEBRA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilbasis/linalg.hpp"

namespace nb {

/// Nilpotent Lie algebra given by structure constants over an ordered basis:
/// [X_i, X_j] = sum_k c_{ij}^k X_k. Immutable after construction.
class LieAlgebra {
public:
  LieAlgebra(std::vector<std::string> labels,
             std::vector<std::vector<Vec>> bracket_tensor, unsigned radicand = 1);

  int dim() const { return n_; }
  unsigned radicand() const { return radicand_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[static_cast<size_t>(i)]; }
  int index_of(const std::string& label) const;

  /// [X_i, X_j] as a coordinate vector.
  const Vec& bracket(int i, int j) const {
    return c_[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  /// Bilinear extension.
  Vec bracket(const Vec& u, const Vec& v) const;

  /// Nilpotency step (computed by validate(); throws if not yet validated).
  int step() const;
  bool validated() const { return step_.has_value(); }

  const std::optional<std::map<int, int>>& gradation_weights() const { return gradation_; }
  void attach_gradation(std::map<int, int> weights) { gradation_ = std::move(weights); }

private:
  friend struct ValidationAccess;
  int n_;
  unsigned radicand_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Vec>> c_;
  std::optional<int> step_;
  std::optional<std::map<int, int>> gradation_;
};

/// Covector in g* with respect to the dual of the algebra's current basis.
class Functional {
public:
  Functional() = default;
  explicit Functional(Vec coords) : coords_(std::move(coords)) {}
  static Functional dual_basis_vector(int n, int i, const Scalar& coeff) {
    Vec v = zero_vec(n);
    v[static_cast<size_t>(i)] = coeff;
    return Functional(v);
  }
  const Vec& coords() const { return coords_; }
  int dim() const { return static_cast<int>(coords_.size()); }
  Scalar pair(const Vec& x) const { return dot(coords_, x); }
  /// Coordinates w.r.t. the dual of a new basis: l~ = l o S.
  Functional in_basis(const BasisChange& s) const {
    return Functional(s.matrix().transpose().apply(coords_));
  }

private:
  Vec coords_;
};

struct ValidationReport {
  bool shape_ok = true;
  bool antisymmetry_ok = true;
  bool jacobi_ok = true;
  bool nilpotent_ok = true;
  int step = 0;
  // witness for the first failure, if any
  std::string failure;
  std::vector<std::string> notes;
  bool ok() const { return shape_ok && antisymmetry_ok && jacobi_ok && nilpotent_ok; }
};

/// Checks antisymmetry, the Jacobi identity on all basis triples, and that the
/// lower central series terminates; on success caches the step N in `alg`.
ValidationReport validate(LieAlgebra& alg);
/// Throwing variant for pipelines: JacobiFail / NotNilpotent.
void ensure_validated(LieAlgebra& alg);

/// Jacobi residual [[i,j],k] + [[j,k],i] + [[k,i],j], exact.
Vec jacobi_residual(const LieAlgebra& alg, int i, int j, int k);

/// Exact center z(g): kernel of the joint adjoint maps.
Subspace center(const LieAlgebra& alg);

/// Span of iterated brackets [g, s].
Subspace bracket_span(const LieAlgebra& alg, const Subspace& a, const Subspace& b);

bool is_ideal(const LieAlgebra& alg, const Subspace& s);
bool is_subalgebra(const LieAlgebra& alg, const Subspace& s);

/// True iff span{X_{ordering[0]}, ..., X_{ordering[m-1]}} is an ideal for
/// every prefix length m.
bool verify_strong_malcev(const LieAlgebra& alg, const std::vector<int>& ordering);

/// Structure constants transformed by S (columns = new basis in old
/// coordinates); exact. New labels optional, defaults to old labels permuted
/// through nothing (kept as-is).
LieAlgebra change_basis(const LieAlgebra& alg, const BasisChange& s,
                        std::vector<std::string> new_labels = {});

Subspace span_of_indices(const LieAlgebra& alg, const std::vector<int>& idx);
Subspace span_of_labels(const LieAlgebra& alg, const std::vector<std::string>& labels);

}  // namespace nb

#endif
