#include "nilbasis/lattice.hpp"

#include <algorithm>

#include "nilbasis/errors.hpp"

namespace nb {

namespace {

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return a / boost::multiprecision::gcd(a, b) * b;
}

BigInt pow_bigint(const BigInt& base, unsigned e) {
  BigInt r(1);
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

/// Doubling-scheme scale exponents: q_j = K^{-2^{d+1}} on the Z-block,
/// K^{-2^{d+1-j}} on Y_j, K^{2^j} on the X~-block read bottom-up
/// (X~_d gets K^2, ..., X~_1 gets K^{2^d}).
Vec doubling_scales(const BigInt& k, int r, int d, int n) {
  Vec q(static_cast<size_t>(n), Scalar(1));
  auto kpow = [&](unsigned e, bool inverse_scale) {
    BigRat v(pow_bigint(k, e));
    if (inverse_scale) v = BigRat(1) / v;
    return Scalar(v);
  };
  for (int j = 0; j < r; ++j) q[static_cast<size_t>(j)] = kpow(1u << (d + 1), true);
  for (int j = 1; j <= d; ++j)
    q[static_cast<size_t>(r + j - 1)] = kpow(1u << (d + 1 - j), true);
  for (int j = 1; j <= d; ++j)  // slot r+d+ (d-j) holds X~_j... bottom-up: X~_d first
    q[static_cast<size_t>(r + d + j - 1)] = kpow(1u << j, false);
  return q;
}

LatticeSpec make_spec(const LieAlgebra& chr_alg, const BasisChange& to_original, int r,
                      int d, const std::string& basis_id, const Vec& q, const BigInt& k,
                      LatticeSpec::Kind kind) {
  int n = chr_alg.dim();
  Mat diag(n, n);
  for (int i = 0; i < n; ++i) diag(i, i) = q[static_cast<size_t>(i)];
  BasisChange scale_change(diag);
  LieAlgebra scaled = change_basis(chr_alg, scale_change, chr_alg.labels());
  LatticeSpec spec{basis_id,
                   std::move(scaled),
                   BasisChange(to_original.matrix() * diag),
                   q,
                   k,
                   pow_bigint(k, (1u << d) - 1),
                   kind,
                   r,
                   d,
                   GroupLaw{}};
  spec.law = group_law(spec.scaled_algebra);
  return spec;
}

FundamentalDomain make_domain(const LatticeSpec& spec) {
  return FundamentalDomain{spec.basis_id, spec.dim(), spec.r, spec.d,
                           spec.scaled_algebra.labels()};
}

}  // namespace

std::pair<LatticeSpec, FundamentalDomain> build_quasi_lattice(const LieAlgebra& chr_alg,
                                                              const BasisChange& to_original,
                                                              int r, int d,
                                                              const std::string& basis_id) {
  Vec q(static_cast<size_t>(chr_alg.dim()), Scalar(1));
  LatticeSpec spec = make_spec(chr_alg, to_original, r, d, basis_id, q, BigInt(1),
                               LatticeSpec::Kind::quasi_lattice);
  FundamentalDomain dom = make_domain(spec);
  return {std::move(spec), std::move(dom)};
}

std::pair<LatticeSpec, FundamentalDomain> uniformize(const LieAlgebra& chr_alg,
                                                     const BasisChange& to_original,
                                                     int r, int d,
                                                     const std::string& basis_id) {
  GroupLaw base_law = group_law(chr_alg);
  BigInt k(1);
  for (const auto& p : base_law.polys)
    for (const auto& [mono, coeff] : p.terms()) {
      if (!coeff.is_rational())
        throw IrrationalScaling("multiplication polynomial coefficient " + coeff.str() +
                                " is irrational; no uniform subgroup on this basis");
      k = lcm(k, coeff.denominator());
    }
  for (int attempt = 0; attempt < 8; ++attempt) {
    LatticeSpec spec = make_spec(chr_alg, to_original, r, d, basis_id,
                                 doubling_scales(k, r, d, chr_alg.dim()), k,
                                 LatticeSpec::Kind::uniform_subgroup);
    BigInt escalate(1);
    for (const auto& p : spec.law.polys)
      for (const auto& [mono, coeff] : p.terms())
        if (!coeff.is_integer()) escalate = lcm(escalate, coeff.denominator());
    if (escalate == 1) {
      FundamentalDomain dom = make_domain(spec);
      return {std::move(spec), std::move(dom)};
    }
    k *= escalate;
  }
  throw IrrationalScaling("rescaled group law did not become integral");
}

Vec sigma_coords(const LieAlgebra& alg, const Vec& t) {
  int n = alg.dim();
  Vec w = zero_vec(n);
  bool started = false;
  for (int j = n - 1; j >= 0; --j) {
    Vec f = zero_vec(n);
    f[static_cast<size_t>(j)] = t[static_cast<size_t>(j)];
    w = started ? bch(alg, w, f) : f;
    started = true;
  }
  return second_kind_from_exp(alg, w);
}

Vec gamma_coords(const LieAlgebra& alg, const std::vector<BigInt>& k) {
  Vec v = zero_vec(alg.dim());
  for (size_t i = 0; i < k.size(); ++i) v[i] = Scalar(BigRat(k[i]));
  return v;
}

Decomposition decompose(const LatticeSpec& spec, const GroupPoint& g) {
  if (g.basis_id != spec.basis_id)
    throw InputError("group point is in basis '" + g.basis_id + "', lattice is over '" +
                     spec.basis_id + "'");
  const LieAlgebra& alg = spec.scaled_algebra;
  int n = alg.dim();
  Decomposition out;
  out.t = zero_vec(n);
  out.k.assign(static_cast<size_t>(n), BigInt(0));
  // Top-down peeling: split the top coordinate, conjugate the remainder back
  // into G_{n-1}, recurse.
  Vec cur = g.coords;
  for (int j = n - 1; j >= 0; --j) {
    Scalar x = cur[static_cast<size_t>(j)];
    BigInt flr = x.floor();
    Scalar frac = x - Scalar(BigRat(flr));
    out.t[static_cast<size_t>(j)] = frac;
    out.k[static_cast<size_t>(j)] = flr;
    // cur = g_{j-1} * exp(x_j W_j); conjugate: exp(-frac W_j) g_{j-1} exp(frac W_j)
    Vec rest = cur;
    rest[static_cast<size_t>(j)] = Scalar(0);
    Vec e_frac = zero_vec(n);
    e_frac[static_cast<size_t>(j)] = frac;
    Vec conj = group_mul(alg, group_mul(alg, group_inverse(alg, e_frac), rest), e_frac);
    if (!conj[static_cast<size_t>(j)].is_zero())
      throw NotStrongMalcev("decomposition peeling left a top coordinate");
    cur = std::move(conj);
  }
  return out;
}

std::pair<LatticeSpec, FundamentalDomain> project_quotient(const LatticeSpec& spec,
                                                           const FundamentalDomain& domain,
                                                           const Subspace& ideal) {
  int n = spec.dim();
  int m = ideal.dim();
  Subspace prefix = span_of_indices(spec.scaled_algebra, [&] {
    std::vector<int> idx;
    for (int i = 0; i < m; ++i) idx.push_back(i);
    return idx;
  }());
  if (!(prefix.contains(ideal) && ideal.contains(prefix)))
    throw BasisNotThroughIdeal("ideal is not the span of the leading basis vectors");
  if (!is_ideal(spec.scaled_algebra, ideal))
    throw BasisNotThroughIdeal("quotient by a non-ideal");
  int nq = n - m;
  std::vector<std::string> labels(spec.scaled_algebra.labels().begin() + m,
                                  spec.scaled_algebra.labels().end());
  std::vector<std::vector<Vec>> c(static_cast<size_t>(nq),
                                  std::vector<Vec>(static_cast<size_t>(nq), zero_vec(nq)));
  for (int i = 0; i < nq; ++i)
    for (int j = 0; j < nq; ++j) {
      const Vec& b = spec.scaled_algebra.bracket(m + i, m + j);
      for (int k = 0; k < nq; ++k) c[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)] = b[static_cast<size_t>(m + k)];
    }
  LieAlgebra quotient(labels, std::move(c), spec.scaled_algebra.radicand());
  ensure_validated(quotient);

  // Quotient bookkeeping: scales and measure change keep the trailing block.
  Mat to_orig(nq, nq);
  for (int i = 0; i < nq; ++i)
    for (int j = 0; j < nq; ++j) to_orig(i, j) = spec.to_original.matrix()(m + i, m + j);
  int r_rem = std::max(0, spec.r - m);
  int d_rem = (m <= spec.r) ? spec.d : std::max(0, spec.d - (m - spec.r));
  LatticeSpec q{spec.basis_id + "/q" + std::to_string(m),
                std::move(quotient),
                BasisChange(std::move(to_orig)),
                Vec(spec.scales.begin() + m, spec.scales.end()),
                spec.k_factor,
                spec.c_factor,
                spec.kind,
                r_rem,
                d_rem,
                GroupLaw{}};
  q.law = group_law(q.scaled_algebra);
  FundamentalDomain dom{q.basis_id, nq, q.r, q.d, q.scaled_algebra.labels()};
  (void)domain;
  return {std::move(q), std::move(dom)};
}

DiscreteSetReport discrete_set(const LatticeSpec& spec) {
  DiscreteSetReport rep;
  rep.k_factor = spec.k_factor;
  rep.c_factor = spec.c_factor;
  rep.d = spec.d;
  for (int j = 1; j <= spec.d; ++j)
    rep.gamma_m.push_back({spec.scaled_algebra.label(spec.r + j - 1),
                           spec.scales[static_cast<size_t>(spec.r + j - 1)]});
  for (int j = 0; j < spec.d; ++j)
    rep.gamma_h.push_back({spec.scaled_algebra.label(spec.r + spec.d + j),
                           spec.scales[static_cast<size_t>(spec.r + spec.d + j)]});
  return rep;
}

Scalar quotient_covolume(const LatticeSpec& spec, const BasisChange& measure_splitting) {
  // W-basis in measure coordinates; the quotient block (indices >= r) carries
  // the G/Z measure.
  Mat w_in_meas = measure_splitting.inverse_matrix() * spec.to_original.matrix();
  int n = spec.dim(), r = spec.r;
  Mat block(n - r, n - r);
  for (int i = r; i < n; ++i)
    for (int j = r; j < n; ++j) block(i - r, j - r) = w_in_meas(i, j);
  return det(block).abs();
}

Scalar covolume(const LatticeSpec& spec, const BasisChange& measure_splitting,
                const Scalar& d_pi) {
  Scalar vol = quotient_covolume(spec, measure_splitting);
  if (vol * d_pi != Scalar(1))
    throw CovolumeMismatch("covolume * d_pi = " + (vol * d_pi).str() + ", expected 1");
  return vol;
}

}  // namespace nb
