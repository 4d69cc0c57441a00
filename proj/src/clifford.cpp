#include "twistcat/clifford.hpp"

#include <bit>
#include <mutex>
#include <stdexcept>

#include "twistcat/rng.hpp"

namespace twistcat {

namespace {

int popcount_sign(std::size_t a) { return (std::popcount(a) & 1) ? -1 : 1; }

std::vector<PhasedPerm> build_gammas(unsigned n) {
  const unsigned m = n / 2;
  const std::size_t dim = std::size_t{1} << m;
  std::vector<PhasedPerm> gammas;
  auto place = [&](const PhasedPerm& p, unsigned slot) {
    // s3^(slot) (x) p (x) 1^(m-slot-1)
    PhasedPerm out = PhasedPerm::identity(1);
    for (unsigned k = 0; k < slot; ++k) out = out.tensor(pauli3());
    out = out.tensor(p);
    for (unsigned k = slot + 1; k < m; ++k) out = out.tensor(PhasedPerm::identity(2));
    return out;
  };
  for (unsigned k = 0; k < m; ++k) {
    gammas.push_back(place(pauli1(), k));
    gammas.push_back(place(pauli2(), k));
  }
  if (n % 2 == 1) {
    // gamma_n = s3^m
    PhasedPerm raw(dim);
    for (std::size_t a = 0; a < dim; ++a) raw.set(a, static_cast<std::uint32_t>(a), popcount_sign(a) == 1 ? 0 : 2);
    gammas.push_back(raw);
  }
  return gammas;
}

}  // namespace

std::vector<std::vector<unsigned>> index_subsets(unsigned n, unsigned p) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  // lexicographic enumeration of p-subsets of {1..n}
  auto rec = [&](auto&& self, unsigned start) -> void {
    if (cur.size() == p) {
      out.push_back(cur);
      return;
    }
    for (unsigned v = start; v <= n; ++v) {
      if (n - v + 1 < p - cur.size()) break;
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

ExactMatrix normalize_first_entry(const ExactMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m.at(r, c).is_zero()) return m.scaled(m.at(r, c).inv());
  return m;
}

std::optional<ExactMatrix> gamma_intertwiner(const std::vector<PhasedPerm>& rho1,
                                             const std::vector<PhasedPerm>& rho2) {
  if (rho1.empty() || rho1.size() != rho2.size()) throw std::invalid_argument("intertwiner: bad reps");
  const std::size_t d1 = rho1[0].dim(), d2 = rho2[0].dim();
  if (d1 != d2) return std::nullopt;
  const unsigned n = static_cast<unsigned>(rho1.size());
  const std::size_t count = std::size_t{1} << n;

  // Character test over the gamma group decides equivalence first.
  {
    PhasedPerm g1 = PhasedPerm::identity(d1), g2 = PhasedPerm::identity(d2);
    for (std::size_t code = 1; code < count; ++code) {
      unsigned j = static_cast<unsigned>(std::countr_zero(code));  // Gray-code toggle
      g1 = rho1[j] * g1;
      g2 = rho2[j] * g2;
      if (g1.trace() != g2.trace()) return std::nullopt;
    }
  }

  auto average = [&](std::size_t a, std::size_t b) {
    ExactMatrix acc(d2, d1);
    PhasedPerm g1 = PhasedPerm::identity(d1), g2 = PhasedPerm::identity(d2);
    auto add_term = [&]() {
      // rho2(g) E_ab rho1(g)^-1 = i^(phi2(a) - phi1(b)) E_{p2(a), p1(b)}.
      acc.at(g2.perm(a), g1.perm(b)) +=
          quarter_phase(static_cast<std::uint8_t>((g2.phase(a) + 4u - g1.phase(b)) & 3u));
    };
    add_term();
    for (std::size_t code = 1; code < count; ++code) {
      unsigned j = static_cast<unsigned>(std::countr_zero(code));
      g1 = rho1[j] * g1;
      g2 = rho2[j] * g2;
      add_term();
    }
    return acc;
  };

  for (std::size_t a = 0; a < d1; ++a)
    for (std::size_t b = 0; b < d1; ++b) {
      ExactMatrix t = average(a, b);
      if (t.is_zero()) continue;
      t = normalize_first_entry(t);
      // Schur: nonzero projection of a seed is a scalar multiple of the
      // (unique up to scale, invertible) intertwiner; replay the relations.
      for (unsigned j = 0; j < n; ++j) {
        if (!(t * rho1[j].to_matrix() == rho2[j].to_matrix() * t))
          throw InternalConsistencyError("averaged intertwiner fails its defining relation");
      }
      if (!t.inverse()) throw InternalConsistencyError("averaged intertwiner is singular");
      return t;
    }
  return std::nullopt;
}

CliffordModel::CliffordModel(unsigned n) : n_(n) {
  if (n < 1 || n > 10) throw std::invalid_argument("Clifford dimension must be 1..10");
  gammas_ = build_gammas(n);
  dim_ = gammas_[0].dim();
  raw_sign_.resize(dim_);
  for (std::size_t a = 0; a < dim_; ++a) raw_sign_[a] = popcount_sign(a);
  full_idx_.resize(dim_);
  for (std::size_t a = 0; a < dim_; ++a) full_idx_[a] = a;
  if (n % 2 == 0) {
    // chirality = i^{n/2} gamma_1..gamma_n = (-1)^{n/2} s3^m
    PhasedPerm w = PhasedPerm::identity(dim_);
    for (unsigned i = 0; i < n; ++i) w = gammas_[i] * w;
    const unsigned m = n / 2;
    chirality_ = w.scaled_by_i(static_cast<std::uint8_t>(m & 3u));
    for (std::size_t a = 0; a < dim_; ++a) {
      bool plus = quarter_phase(chirality_->phase(a)) == gq(1);
      (plus ? plus_idx_ : minus_idx_).push_back(a);
    }
  }
  build_conjugation_intertwiners();
  select_pairing();
}

void CliffordModel::build_conjugation_intertwiners() {
  std::vector<PhasedPerm> transposed, neg_transposed;
  for (const auto& g : gammas_) {
    transposed.push_back(g.transpose());
    neg_transposed.push_back(g.transpose().negated());
  }
  conj_plus_ = gamma_intertwiner(gammas_, transposed);
  conj_minus_ = gamma_intertwiner(gammas_, neg_transposed);
  if (!conj_plus_ && !conj_minus_)
    throw InternalConsistencyError("no conjugation intertwiner found");
  if (n_ % 2 == 0 && (!conj_plus_ || !conj_minus_))
    throw InternalConsistencyError("even dimension must admit both intertwiners");
}

namespace {

bool pairing_matches(const CliffordModel& model, const ExactMatrix& c, GammaKind expected) {
  const std::size_t d = model.spinor_dim();
  for (unsigned mu = 1; mu <= model.n(); ++mu) {
    ExactMatrix b = c * model.gamma_matrix(mu);
    switch (expected) {
      case GammaKind::sym2:
        if (!(b.transpose() == b)) return false;
        break;
      case GammaKind::wedge2:
        if (!(b.transpose() == b.scaled(gq(-1)))) return false;
        break;
      case GammaKind::plus_minus:
        break;
    }
    if (model.n() % 2 == 0) {
      // Block support against chirality: same-sector for 2,6 mod 8,
      // cross-sector for 0,4 mod 8.
      bool want_cross = (model.n() % 8 == 0 || model.n() % 8 == 4);
      ExactMatrix w = model.chirality_matrix();
      ExactMatrix lhs = w.transpose() * b * w;
      // b(wx, wy) = b(x,y) iff same-sector support; = -b iff cross support.
      if (want_cross) {
        if (!(lhs == b.scaled(gq(-1)))) return false;
      } else {
        if (!(lhs == b)) return false;
      }
    }
  }
  return true;
}

GammaKind required_kind(unsigned n) {
  switch (n % 8) {
    case 1:
    case 2:
    case 3:
      return GammaKind::sym2;
    case 5:
    case 6:
    case 7:
      return GammaKind::wedge2;
    default:
      return GammaKind::plus_minus;
  }
}

}  // namespace

void CliffordModel::select_pairing() {
  GammaKind kind = required_kind(n_);
  auto try_c = [&](const std::optional<ExactMatrix>& c, int sign) {
    if (!c) return false;
    if (!pairing_matches(*this, *c, kind)) return false;
    pairing_c_ = *c;
    pairing_kind_ = PairingKind{kind, sign};
    return true;
  };
  if (try_c(conj_plus_, +1)) return;
  if (try_c(conj_minus_, -1)) return;
  throw InternalConsistencyError("no intertwiner induces the required pairing symmetry");
}

std::string PairingKind::describe() const {
  std::string k = kind == GammaKind::sym2 ? "sym2" : kind == GammaKind::wedge2 ? "wedge2" : "plus_minus";
  return k + (conj_sign > 0 ? "/C+" : "/C-");
}

std::size_t CliffordModel::sector_dim(ChiralitySector s) const {
  return s == ChiralitySector::full ? dim_ : dim_ / 2;
}

const PhasedPerm& CliffordModel::gamma(unsigned i) const {
  if (i < 1 || i > n_) throw std::invalid_argument("gamma index out of range");
  return gammas_[i - 1];
}

ExactMatrix CliffordModel::gamma_matrix(unsigned i) const { return gamma(i).to_matrix(); }

const PhasedPerm* CliffordModel::chirality() const { return chirality_ ? &*chirality_ : nullptr; }

ExactMatrix CliffordModel::chirality_matrix() const {
  if (!chirality_) throw std::invalid_argument("chirality exists only in even dimensions");
  return chirality_->to_matrix();
}

const std::vector<std::size_t>& CliffordModel::sector_indices(ChiralitySector s) const {
  switch (s) {
    case ChiralitySector::plus:
      if (n_ % 2) throw std::invalid_argument("no chirality sectors in odd dimensions");
      return plus_idx_;
    case ChiralitySector::minus:
      if (n_ % 2) throw std::invalid_argument("no chirality sectors in odd dimensions");
      return minus_idx_;
    default:
      return full_idx_;
  }
}

Vec CliffordModel::to_full(const Vec& coeffs, ChiralitySector s) const {
  const auto& idx = sector_indices(s);
  if (coeffs.size() != idx.size()) throw std::invalid_argument("sector coefficient length mismatch");
  Vec full(dim_);
  for (std::size_t k = 0; k < idx.size(); ++k) full[idx[k]] = coeffs[k];
  return full;
}

Vec CliffordModel::from_full(const Vec& full, ChiralitySector s) const {
  if (full.size() != dim_) throw std::invalid_argument("spinor length mismatch");
  if (!in_sector(full, s)) throw std::invalid_argument("spinor is not in the stated chirality sector");
  const auto& idx = sector_indices(s);
  Vec out(idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) out[k] = full[idx[k]];
  return out;
}

bool CliffordModel::in_sector(const Vec& full, ChiralitySector s) const {
  if (full.size() != dim_) return false;
  if (s == ChiralitySector::full) return true;
  if (n_ % 2) return false;
  const auto& other = sector_indices(s == ChiralitySector::plus ? ChiralitySector::minus
                                                                : ChiralitySector::plus);
  for (auto a : other)
    if (!full[a].is_zero()) return false;
  return true;
}

Vec CliffordModel::clifford_apply(const Vec& v, const Vec& spinor) const {
  if (v.size() != n_) throw std::invalid_argument("vector length mismatch");
  Vec out(dim_);
  for (unsigned i = 0; i < n_; ++i) {
    if (v[i].is_zero()) continue;
    Vec gx = gammas_[i].apply(spinor);
    for (std::size_t a = 0; a < dim_; ++a) out[a] += v[i] * gx[a];
  }
  return out;
}

Vec CliffordModel::spin_apply(unsigned i, unsigned j, const Vec& spinor) const {
  if (i == j) throw std::invalid_argument("spin generator needs distinct axes");
  Vec x = gamma(j).apply(spinor);
  x = gamma(i).apply(x);
  Scalar half = gq(1, 2);
  for (auto& e : x) e *= half;
  return x;
}

ExactMatrix CliffordModel::spin_generator(unsigned i, unsigned j) const {
  return (gamma(i) * gamma(j)).to_matrix().scaled(gq(1, 2));
}

Scalar CliffordModel::scalar_pairing(const Vec& x, const Vec& y) const {
  return dot(x, pairing_c_.apply(y));
}

Vec CliffordModel::vector_pairing(const Vec& x, const Vec& y) const {
  Vec out(n_);
  for (unsigned mu = 1; mu <= n_; ++mu) {
    out[mu - 1] = dot(x, pairing_c_.apply(gamma(mu).apply(y)));
  }
  return out;
}

std::vector<Vec> CliffordModel::nullspace(const Vec& spinor) const {
  if (is_zero_vec(spinor)) throw std::invalid_argument("nullspace of the zero spinor");
  ExactMatrix m(dim_, n_);
  for (unsigned i = 0; i < n_; ++i) {
    Vec col = gammas_[i].apply(spinor);
    for (std::size_t a = 0; a < dim_; ++a) m.at(a, i) = col[a];
  }
  auto basis = span_basis(m.kernel(), n_);
  for (const auto& u : basis)
    for (const auto& v : basis)
      if (!dot(u, v).is_zero()) throw InternalConsistencyError("nullspace is not isotropic");
  return basis;
}

std::vector<Vec> CliffordModel::pairing_image(const Vec& spinor) const {
  if (is_zero_vec(spinor)) throw std::invalid_argument("pairing image of the zero spinor");
  // Row mu of R is gamma_mu^T C^T Q; image of s -> (Q^T C gamma_mu s)_mu is
  // the column space of R.
  ExactMatrix r(n_, dim_);
  Vec w = pairing_c_.transpose().apply(spinor);
  for (unsigned mu = 1; mu <= n_; ++mu) {
    Vec row = gamma(mu).transpose().apply(w);
    for (std::size_t a = 0; a < dim_; ++a) r.at(mu - 1, a) = row[a];
  }
  return span_basis(r.image_basis(), n_);
}

std::vector<std::vector<Scalar>> CliffordModel::fierz_components(const Vec& spinor) const {
  if (is_zero_vec(spinor)) throw std::invalid_argument("Fierz decomposition of the zero spinor");
  const unsigned m = n_ / 2;
  const unsigned top_independent = (n_ % 2 == 0) ? n_ : m;
  Vec w = pairing_c_.transpose().apply(spinor);
  Scalar dinv = gq(1, static_cast<long>(dim_));

  std::vector<std::vector<Scalar>> comps(n_ + 1);
  std::vector<std::vector<PhasedPerm>> basis_elems(n_ + 1);
  for (unsigned p = 0; p <= n_; ++p) {
    auto subsets = index_subsets(n_, p);
    comps[p].resize(subsets.size());
    if (p > top_independent) continue;
    for (std::size_t s = 0; s < subsets.size(); ++s) {
      PhasedPerm g = PhasedPerm::identity(dim_);
      for (unsigned idx : subsets[s]) g = g * gammas_[idx - 1];
      long k = static_cast<long>(p) * (static_cast<long>(p) - 1) / 2;
      Scalar sign = (k % 2 == 0) ? gq(1) : gq(-1);
      comps[p][s] = sign * dot(w, g.apply(spinor)) * dinv;
    }
  }
  if (n_ % 2 == 1) {
    // Duality gamma_I = nu * gamma_{I^c} fills the dependent components.
    for (unsigned p = top_independent + 1; p <= n_; ++p) {
      auto subsets = index_subsets(n_, p);
      auto co_subsets = index_subsets(n_, n_ - p);
      for (std::size_t s = 0; s < subsets.size(); ++s) {
        std::vector<bool> in(n_ + 1, false);
        for (unsigned idx : subsets[s]) in[idx] = true;
        std::vector<unsigned> comp;
        for (unsigned idx = 1; idx <= n_; ++idx)
          if (!in[idx]) comp.push_back(idx);
        std::size_t cs = 0;
        while (co_subsets[cs] != comp) ++cs;
        PhasedPerm gI = PhasedPerm::identity(dim_), gC = PhasedPerm::identity(dim_);
        for (unsigned idx : subsets[s]) gI = gI * gammas_[idx - 1];
        for (unsigned idx : comp) gC = gC * gammas_[idx - 1];
        if (gI.perm(0) != gC.perm(0)) throw InternalConsistencyError("odd-dimension gamma duality failed");
        Scalar nu = quarter_phase(static_cast<std::uint8_t>((gI.phase(0) + 4u - gC.phase(0)) & 3u));
        comps[p][s] = nu.inv() * comps[n_ - p][cs];
      }
    }
  }
  return comps;
}

bool CliffordModel::is_pure(const Vec& spinor, ChiralitySector declared_sector) const {
  if (is_zero_vec(spinor)) throw std::invalid_argument("purity of the zero spinor");
  if (n_ % 2 == 0) {
    if (declared_sector == ChiralitySector::full)
      throw std::invalid_argument("purity in even dimensions requires a Weyl spinor");
    if (!in_sector(spinor, declared_sector))
      throw std::invalid_argument("spinor is not in its declared chirality sector");
  }

  bool by_nullspace = span_rank(nullspace(spinor), n_) == n_ / 2;

  bool by_fierz = true;
  if (n_ % 2 == 0) {
    auto comps = fierz_components(spinor);
    for (unsigned p = 0; p < n_ / 2 && by_fierz; ++p)
      for (const auto& c : comps[p])
        if (!c.is_zero()) {
          by_fierz = false;
          break;
        }
  } else {
    const CliffordModel& up = clifford_model(n_ + 1);
    Vec lifted = embed_in_even(spinor);
    auto comps = up.fierz_components(lifted);
    for (unsigned p = 0; p < (n_ + 1) / 2 && by_fierz; ++p)
      for (const auto& c : comps[p])
        if (!c.is_zero()) {
          by_fierz = false;
          break;
        }
  }

  if (by_nullspace != by_fierz)
    throw InternalConsistencyError("purity criteria disagree (nullspace vs Fierz)");
  return by_nullspace;
}

Vec CliffordModel::embed_in_even(const Vec& spinor) const {
  if (n_ % 2 == 0) throw std::invalid_argument("embed_in_even expects an odd dimension");
  if (spinor.size() != dim_) throw std::invalid_argument("spinor length mismatch");
  Vec out(2 * dim_);
  for (std::size_t a = 0; a < dim_; ++a) {
    std::size_t b = raw_sign_[a] == 1 ? 0 : 1;
    out[2 * a + b] = spinor[a];
  }
  return out;
}

Vec CliffordModel::restrict_raw_plus(const Vec& full) const {
  if (n_ % 2 == 1) throw std::invalid_argument("restriction maps live on even dimensions");
  Vec out(dim_ / 2);
  for (std::size_t a = 0; a < dim_ / 2; ++a) {
    std::size_t b = popcount_sign(a) == 1 ? 0 : 1;
    out[a] = full[2 * a + b];
  }
  return out;
}

Vec CliffordModel::restrict_raw_minus(const Vec& full) const {
  if (n_ % 2 == 1) throw std::invalid_argument("restriction maps live on even dimensions");
  Vec out(dim_ / 2);
  for (std::size_t a = 0; a < dim_ / 2; ++a) {
    std::size_t b = popcount_sign(a) == 1 ? 1 : 0;
    out[a] = full[2 * a + b];
  }
  return out;
}

Vec gamma_pairing(const CliffordModel& model, const Spinor& q1, const Spinor& q2) {
  if (q1.n != model.n() || q2.n != model.n())
    throw std::invalid_argument("spinor dimension mismatch");
  const unsigned r = model.n() % 8;
  if (r == 0 || r == 4) {
    bool ok = (q1.sector == ChiralitySector::plus && q2.sector == ChiralitySector::minus) ||
              (q1.sector == ChiralitySector::minus && q2.sector == ChiralitySector::plus);
    if (!ok) throw std::invalid_argument("this dimension pairs opposite Weyl sectors");
  } else if (r == 2 || r == 6) {
    bool ok = q1.sector == q2.sector && q1.sector != ChiralitySector::full;
    if (!ok) throw std::invalid_argument("this dimension pairs within a Weyl sector");
  } else {
    if (q1.sector != ChiralitySector::full || q2.sector != ChiralitySector::full)
      throw std::invalid_argument("odd dimensions pair full spinors");
  }
  return model.vector_pairing(model.to_full(q1.coeffs, q1.sector),
                              model.to_full(q2.coeffs, q2.sector));
}

Vec sample_spinor(const CliffordModel& model, Rng& rng, long bound) {
  Vec v(model.spinor_dim());
  for (auto& e : v) e = rng.small_gaussian(bound);
  return v;
}

Vec sample_pure_spinor(const CliffordModel& model, Rng& rng, int transports) {
  const unsigned n = model.n();
  Vec q(model.spinor_dim());
  q[0] = gq(1);
  const unsigned blocks = n / 2;
  for (int t = 0; t < transports && blocks >= 2; ++t) {
    unsigned j = static_cast<unsigned>(rng.range(1, blocks));
    unsigned k = static_cast<unsigned>(rng.range(1, blocks));
    if (j == k) continue;
    // u = e_{2j-1} + s_j i e_{2j}, v = e_{2k-1} + s_k i e_{2k}: isotropic and
    // mutually orthogonal, so gamma(u) gamma(v) squares to zero.
    Scalar sj = rng.range(0, 1) ? GaussianRational::i() : -GaussianRational::i();
    Scalar sk = rng.range(0, 1) ? GaussianRational::i() : -GaussianRational::i();
    Vec u(n), v(n);
    u[2 * j - 2] = gq(1);
    u[2 * j - 1] = sj;
    v[2 * k - 2] = gq(1);
    v[2 * k - 1] = sk;
    Scalar tt = GaussianRational(Rational(rng.small_int(3)), Rational(rng.small_int(2)));
    Vec shift = model.clifford_apply(u, model.clifford_apply(v, q));
    for (std::size_t a = 0; a < q.size(); ++a) q[a] += tt * shift[a];
  }
  return q;
}

const CliffordModel& clifford_model(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<CliffordModel>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(n);
  if (it == registry.end()) it = registry.emplace(n, std::make_unique<CliffordModel>(n)).first;
  return *it->second;
}

}  // namespace twistcat
