#include "nilbasis/builtins.hpp"

#include <map>

#include "nilbasis/errors.hpp"

namespace nb {

namespace {

class TableBuilder {
public:
  TableBuilder(std::vector<std::string> labels, unsigned radicand = 1)
      : labels_(std::move(labels)), radicand_(radicand) {
    int n = static_cast<int>(labels_.size());
    c_.assign(static_cast<size_t>(n), std::vector<Vec>(static_cast<size_t>(n), zero_vec(n)));
  }

  /// Sets [a, b] += coeff * target and the antisymmetric counterpart.
  TableBuilder& set(const std::string& a, const std::string& b, const Scalar& coeff,
                    const std::string& target) {
    int i = index(a), j = index(b), k = index(target);
    c_[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)] += coeff;
    c_[static_cast<size_t>(j)][static_cast<size_t>(i)][static_cast<size_t>(k)] -= coeff;
    return *this;
  }

  LieAlgebra build() const { return LieAlgebra(labels_, c_, radicand_); }

private:
  int index(const std::string& l) const {
    for (size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == l) return static_cast<int>(i);
    throw InputError("unknown label " + l);
  }
  std::vector<std::string> labels_;
  unsigned radicand_;
  std::vector<std::vector<Vec>> c_;
};

}  // namespace

LieAlgebra heisenberg(int d) {
  if (d < 1) throw InputError("heisenberg:d requires d >= 1");
  std::vector<std::string> labels{"Z"};
  for (int i = 1; i <= d; ++i) labels.push_back("Y" + std::to_string(i));
  for (int i = 1; i <= d; ++i) labels.push_back("X" + std::to_string(i));
  TableBuilder t(labels);
  for (int i = 1; i <= d; ++i)
    t.set("X" + std::to_string(i), "Y" + std::to_string(i), Scalar(1), "Z");
  LieAlgebra alg = t.build();
  std::map<int, int> weights;
  weights[0] = 2;
  for (int i = 1; i <= 2 * d; ++i) weights[i] = 1;
  alg.attach_gradation(std::move(weights));
  return alg;
}

LieAlgebra dynin_folland() {
  TableBuilder t({"Z", "Y1", "Y2", "Y3", "X1", "X2", "X3"});
  t.set("X1", "Y3", Scalar(1), "Z")
      .set("X2", "Y2", Scalar(1), "Z")
      .set("X3", "Y1", Scalar(1), "Z")
      .set("X2", "Y3", Scalar::ratio(1, 2), "Y1")
      .set("X3", "Y3", Scalar::ratio(-1, 2), "Y2")
      .set("X3", "X2", Scalar(1), "X1");
  return t.build();
}

LieAlgebra dynin_folland_graded() {
  // Relabeling Xp1 := Y3, Yp3 := X1 of the table above; weights 3|2,2,2|1,1,1.
  TableBuilder t({"Z", "Y1", "Y2", "Yp3", "Xp1", "X2", "X3"});
  t.set("Xp1", "Yp3", Scalar(-1), "Z")
      .set("X2", "Y2", Scalar(1), "Z")
      .set("X3", "Y1", Scalar(1), "Z")
      .set("X2", "Xp1", Scalar::ratio(1, 2), "Y1")
      .set("X3", "Xp1", Scalar::ratio(-1, 2), "Y2")
      .set("X3", "X2", Scalar(1), "Yp3");
  LieAlgebra alg = t.build();
  alg.attach_gradation({{0, 3}, {1, 2}, {2, 2}, {3, 2}, {4, 1}, {5, 1}, {6, 1}});
  return alg;
}

LieAlgebra example_7dim_sqrt2() {
  // Basis ordered center-first: (X7, X6, X5, X4, X3, X2, X1). The sqrt(2) in
  // [X2,X3] forces sqrt(2) in [X2,X4] as well, else the Jacobi identity fails
  // on (X1,X2,X3).
  std::vector<std::string> labels{"X7", "X6", "X5", "X4", "X3", "X2", "X1"};
  TableBuilder t(labels, 2);
  Scalar rt2 = Scalar::sqrt_of(2);
  for (int j = 2; j <= 6; ++j)
    t.set("X1", "X" + std::to_string(j), Scalar(1), "X" + std::to_string(j + 1));
  t.set("X2", "X3", rt2, "X6");
  t.set("X2", "X4", rt2, "X7");
  t.set("X5", "X2", Scalar(1), "X7");
  t.set("X3", "X4", Scalar(1), "X7");
  return t.build();
}

std::vector<BuiltinInfo> builtin_list() {
  return {
      {"heisenberg:d", "(2d+1)-dimensional Heisenberg algebra, any d >= 1"},
      {"dynin-folland", "7-dimensional 3-step Dynin-Folland algebra"},
      {"dynin-folland-graded", "Dynin-Folland algebra in the weight-descending graded basis"},
      {"example-7dim-sqrt2", "7-dimensional 6-step algebra over Q(sqrt 2), no rational structure"},
  };
}

LieAlgebra builtin_algebra(const std::string& name) {
  if (name.rfind("heisenberg:", 0) == 0) {
    int d = std::stoi(name.substr(std::string("heisenberg:").size()));
    return heisenberg(d);
  }
  if (name == "dynin-folland") return dynin_folland();
  if (name == "dynin-folland-graded") return dynin_folland_graded();
  if (name == "example-7dim-sqrt2") return example_7dim_sqrt2();
  throw InputError("unknown builtin algebra: " + name);
}

std::vector<std::string> builtin_default_polarization(const std::string& name) {
  if (name == "dynin-folland") return {"Z", "Y1", "Y2", "Y3"};
  if (name == "example-7dim-sqrt2") return {"X7", "X6", "X5", "X4"};
  return {};
}

}  // namespace nb
