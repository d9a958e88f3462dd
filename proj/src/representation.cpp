#include "nilbasis/representation.hpp"

#include <cmath>
#include <string>

#include "nilbasis/errors.hpp"

namespace nb {

namespace {

std::string lowercase(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return s;
}

}  // namespace

RepFormula induce(const LatticeSpec& spec, const Functional& l_scaled) {
  const LieAlgebra& alg = spec.scaled_algebra;
  int n = alg.dim(), r = spec.r, d = spec.d;
  if (d < 1) throw InputError("induced representation needs d >= 1");

  // l must vanish on [m, m] for the character on M to be well defined.
  Subspace m_span = span_of_indices(alg, [&] {
    std::vector<int> idx;
    for (int i = 0; i < r + d; ++i) idx.push_back(i);
    return idx;
  }());
  if (!is_ideal(alg, m_span) || !is_polarization(alg, l_scaled, m_span))
    throw NotPolarizingIdeal("leading r+d block is not a polarizing ideal for l");

  VarSet names;
  for (const auto& l : alg.labels()) names.push_back(lowercase(l));
  for (int j = 1; j <= d; ++j) names.push_back("t" + std::to_string(j));
  VarSetPtr vars = make_vars(std::move(names));

  RepFormula rep;
  rep.vars = vars;
  rep.n = n;
  rep.r = r;
  rep.d = d;

  // log m for the M-part of g (coordinates z_1..y_d).
  std::vector<MPoly> m_coords;
  for (int i = 0; i < n; ++i)
    m_coords.push_back(i < r + d ? MPoly::variable(vars, i) : MPoly(vars));
  SymVec log_m = exp_from_second_kind(alg, m_coords);

  // Ad(h') for h'(t) = exp(t_d W_{r+d+1}) ... exp(t_1 W_n).
  std::vector<std::vector<MPoly>> ad_h;
  for (int j = d; j >= 1; --j) {
    auto fac = adjoint(alg, SymVec::basis_times(vars, n, rep.xt_var(j),
                                                MPoly::variable(vars, rep.t_var(j))));
    if (ad_h.empty()) {
      ad_h = std::move(fac);
      continue;
    }
    std::vector<std::vector<MPoly>> prod(static_cast<size_t>(n),
                                         std::vector<MPoly>(static_cast<size_t>(n), MPoly(vars)));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (ad_h[static_cast<size_t>(i)][static_cast<size_t>(k)].is_zero()) continue;
        for (int jj = 0; jj < n; ++jj)
          prod[static_cast<size_t>(i)][static_cast<size_t>(jj)] +=
              ad_h[static_cast<size_t>(i)][static_cast<size_t>(k)] *
              fac[static_cast<size_t>(k)][static_cast<size_t>(jj)];
      }
    ad_h = std::move(prod);
  }

  // phase_1 = < l, Ad(h') log m >
  MPoly phase(vars);
  for (int k = 0; k < n; ++k) {
    const Scalar& lk = l_scaled.coords()[static_cast<size_t>(k)];
    if (lk.is_zero()) continue;
    MPoly comp(vars);
    for (int j = 0; j < n; ++j) {
      if (log_m.comp[static_cast<size_t>(j)].is_zero()) continue;
      comp += ad_h[static_cast<size_t>(k)][static_cast<size_t>(j)] *
              log_m.comp[static_cast<size_t>(j)];
    }
    phase += comp * lk;
  }

  // h' h in second-kind coordinates: fold the 2d H-factors and peel.
  SymVec w = SymVec::zero(vars, n);
  bool started = false;
  for (int j = d; j >= 1; --j) {
    SymVec f = SymVec::basis_times(vars, n, rep.xt_var(j), MPoly::variable(vars, rep.t_var(j)));
    w = started ? bch(alg, w, f) : f;
    started = true;
  }
  for (int j = d; j >= 1; --j) {
    SymVec f = SymVec::basis_times(vars, n, rep.xt_var(j), MPoly::variable(vars, rep.xt_var(j)));
    w = bch(alg, w, f);
  }
  std::vector<MPoly> hh = second_kind_from_exp(alg, std::move(w));

  // phase_2 = < l, log p(h'h) > with p(h'h) the M-part of h'h.
  std::vector<MPoly> p_coords;
  for (int i = 0; i < n; ++i)
    p_coords.push_back(i < r + d ? hh[static_cast<size_t>(i)] : MPoly(vars));
  SymVec log_p = exp_from_second_kind(alg, p_coords);
  for (int k = 0; k < r + d; ++k) {
    const Scalar& lk = l_scaled.coords()[static_cast<size_t>(k)];
    if (lk.is_zero()) continue;
    phase += log_p.comp[static_cast<size_t>(k)] * lk;
  }
  rep.phase = std::move(phase);

  // arg map t'_j = (h'h)-coordinate on the X~_j slot; triangular with unit
  // diagonal in (t_j, x~_j).
  for (int j = 1; j <= d; ++j) rep.arg_map.push_back(hh[static_cast<size_t>(rep.xt_var(j))]);
  for (int j = 1; j <= d; ++j) {
    MPoly residual = rep.arg_map[static_cast<size_t>(j - 1)];
    residual.add_term([&] { Mono m(vars->size(), 0); m[static_cast<size_t>(rep.t_var(j))] = 1; return m; }(), Scalar(-1));
    residual.add_term([&] { Mono m(vars->size(), 0); m[static_cast<size_t>(rep.xt_var(j))] = 1; return m; }(), Scalar(-1));
    for (int v : residual.support()) {
      bool ok = false;
      for (int i = 1; i < j; ++i)
        if (v == rep.t_var(i) || v == rep.xt_var(i)) ok = true;
      if (!ok)
        throw NoChRBasis("argument map is not triangular at t'_" + std::to_string(j));
    }
  }

  rep.central_coeffs = zero_vec(r);
  for (int i = 0; i < r; ++i) {
    Mono m(vars->size(), 0);
    m[static_cast<size_t>(i)] = 1;
    rep.central_coeffs[static_cast<size_t>(i)] = rep.phase.coefficient(m);
  }
  return rep;
}

Normalization normalization(const LatticeSpec& spec, const Scalar& d_pi) {
  if (d_pi.sign() <= 0) throw DegenerateForm("formal degree must be positive");
  Scalar c2{BigRat(spec.c_factor * spec.c_factor), BigRat(0), 1};
  Scalar mu_f = c2 / d_pi;
  double nf = std::sqrt(mu_f.to_double());
  return Normalization{mu_f, 1.0 / nf, nf};
}

OnbFamily onb_family(const RepFormula& rep, const LatticeSpec& spec, const Scalar& d_pi,
                     long radius, const Scalar& modulation_scale) {
  if (radius < 0) throw InputError("radius must be >= 0");
  const LieAlgebra& alg = spec.scaled_algebra;
  int n = rep.n, r = rep.r, d = rep.d;
  OnbFamily fam{rep, spec, radius, Scalar(1), 1.0, {}};
  Normalization nz = normalization(spec, d_pi);
  fam.mu_f = nz.mu_f;
  fam.normalization = nz.normalization;

  long width = 2 * radius + 1;
  long total = 1;
  for (int j = 0; j < 2 * d; ++j) total *= width;
  fam.members.reserve(static_cast<size_t>(total));

  std::vector<long> idx(static_cast<size_t>(2 * d), -radius);
  for (long count = 0; count < total; ++count) {
    std::vector<long> theta(idx.begin(), idx.begin() + d);
    std::vector<long> eta(idx.begin() + d, idx.end());

    Vec theta_coords = zero_vec(n);
    for (int j = 1; j <= d; ++j)
      theta_coords[static_cast<size_t>(r + j - 1)] =
          Scalar(theta[static_cast<size_t>(j - 1)]) / modulation_scale;
    Vec eta_coords = zero_vec(n);
    for (int j = 1; j <= d; ++j)
      eta_coords[static_cast<size_t>(rep.xt_var(j))] = Scalar(eta[static_cast<size_t>(j - 1)]);

    Vec gamma = group_mul(alg, theta_coords, group_inverse(alg, eta_coords));
    for (int i = 0; i < r; ++i) gamma[static_cast<size_t>(i)] = Scalar(0);  // mod Z(G)

    std::vector<std::optional<Scalar>> subst(rep.vars->size(), std::nullopt);
    for (int i = 0; i < n; ++i) subst[static_cast<size_t>(i)] = gamma[static_cast<size_t>(i)];

    OnbMember mem;
    mem.theta = std::move(theta);
    mem.eta = std::move(eta);
    mem.phase = rep.phase.substitute(subst);
    for (int j = 1; j <= d; ++j)
      mem.shifts.push_back(rep.arg_map[static_cast<size_t>(j - 1)].substitute(subst));
    fam.members.push_back(std::move(mem));

    for (size_t pos = 0; pos < idx.size(); ++pos) {
      if (idx[pos] < radius) {
        ++idx[pos];
        break;
      }
      idx[pos] = -radius;
    }
  }
  return fam;
}

}  // namespace nb
