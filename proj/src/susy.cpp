#include "twistcat/susy.hpp"

#include <mutex>

namespace twistcat {

ExactMatrix hyperbolic_form(unsigned dim) {
  ExactMatrix h(dim, dim);
  unsigned k = 0;
  for (; k + 1 < dim; k += 2) {
    h.at(k, k + 1) = gq(1);
    h.at(k + 1, k) = gq(1);
  }
  if (k < dim) h.at(k, k) = gq(1);
  return h;
}

ExactMatrix symplectic_form(unsigned dim) {
  if (dim % 2) throw std::invalid_argument("symplectic forms need even dimension");
  ExactMatrix w(dim, dim);
  for (unsigned k = 0; k + 1 < dim; k += 2) {
    w.at(k, k + 1) = gq(1);
    w.at(k + 1, k) = gq(-1);
  }
  return w;
}

std::size_t AuxSpace::dim_plus() const { return form_plus.rows(); }

std::size_t AuxSpace::dim_minus() const {
  if (kind == AuxKind::dual_pair) return form_plus.rows();
  return two_sector ? form_minus.rows() : 0;
}

std::string AuxSpace::describe() const {
  switch (kind) {
    case AuxKind::symmetric:
      return two_sector ? "N=(" + std::to_string(script_n_plus) + "," + std::to_string(script_n_minus) + ") symmetric"
                        : "N=" + std::to_string(script_n_plus) + " symmetric";
    case AuxKind::symplectic:
      return two_sector ? "N=(" + std::to_string(script_n_plus) + "," + std::to_string(script_n_minus) + ") symplectic"
                        : "N=" + std::to_string(script_n_plus) + " symplectic";
    default:
      return "N=" + std::to_string(script_n_plus) + " dual pair";
  }
}

AuxSpace AuxSpace::symmetric(unsigned script_n) {
  AuxSpace a{AuxKind::symmetric, false, script_n, 0, hyperbolic_form(script_n), ExactMatrix()};
  return a;
}

AuxSpace AuxSpace::symplectic(unsigned script_n) {
  AuxSpace a{AuxKind::symplectic, false, script_n, 0, symplectic_form(2 * script_n), ExactMatrix()};
  return a;
}

AuxSpace AuxSpace::dual(unsigned script_n) {
  AuxSpace a{AuxKind::dual_pair, false, script_n, 0, ExactMatrix::identity(script_n), ExactMatrix()};
  return a;
}

AuxSpace AuxSpace::two_symmetric(unsigned np, unsigned nm) {
  AuxSpace a{AuxKind::symmetric, true, np, nm, hyperbolic_form(np), hyperbolic_form(nm)};
  return a;
}

AuxSpace AuxSpace::two_symplectic(unsigned np, unsigned nm) {
  AuxSpace a{AuxKind::symplectic, true, np, nm, symplectic_form(2 * np), symplectic_form(2 * nm)};
  return a;
}

AuxSpace AuxSpace::standard_for(unsigned n, unsigned np, unsigned nm) {
  switch (n % 8) {
    case 1:
    case 3:
      return symmetric(np);
    case 5:
    case 7:
      return symplectic(np);
    case 2:
      return two_symmetric(np, nm);
    case 6:
      return two_symplectic(np, nm);
    default:
      return dual(np);
  }
}

std::string label_name(ClassLabel l) {
  switch (l) {
    case ClassLabel::zero: return "zero";
    case ClassLabel::not_square_zero: return "not_square_zero";
    case ClassLabel::holomorphic: return "holomorphic";
    case ClassLabel::holomorphic_topological: return "holomorphic_topological";
    default: return "topological";
  }
}

namespace {

void require_kind(bool ok, unsigned n, const char* expected) {
  if (!ok)
    throw IllegalAux("dimension " + std::to_string(n) + " requires a " + expected + " auxiliary space");
}

bool is_symmetric_form(const ExactMatrix& h) {
  return h.rows() == h.cols() && h.transpose() == h && (h.rows() == 0 || h.inverse().has_value());
}

bool is_symplectic_form(const ExactMatrix& w) {
  return w.rows() == w.cols() && w.transpose() == w.scaled(gq(-1)) && (w.rows() == 0 || w.inverse().has_value());
}

}  // namespace

SusyAlgebra::SusyAlgebra(unsigned n, AuxSpace aux) : n_(n), aux_(std::move(aux)), model_(&clifford_model(n)) {
  const unsigned r = n % 8;
  switch (r) {
    case 1:
    case 3:
      require_kind(aux_.kind == AuxKind::symmetric && !aux_.two_sector, n, "symmetric");
      require_kind(is_symmetric_form(aux_.form_plus), n, "nondegenerate symmetric");
      break;
    case 5:
    case 7:
      require_kind(aux_.kind == AuxKind::symplectic && !aux_.two_sector, n, "symplectic");
      require_kind(is_symplectic_form(aux_.form_plus), n, "nondegenerate symplectic");
      break;
    case 2:
      require_kind(aux_.kind == AuxKind::symmetric && aux_.two_sector, n, "pair-of-symmetric");
      require_kind(is_symmetric_form(aux_.form_plus) && is_symmetric_form(aux_.form_minus), n,
                   "nondegenerate symmetric");
      break;
    case 6:
      require_kind(aux_.kind == AuxKind::symplectic && aux_.two_sector, n, "pair-of-symplectic");
      require_kind(is_symplectic_form(aux_.form_plus) && is_symplectic_form(aux_.form_minus), n,
                   "nondegenerate symplectic");
      break;
    default:
      require_kind(aux_.kind == AuxKind::dual_pair, n, "dual-pair");
      break;
  }

  if (n_ % 2 == 1) {
    plus_sector_ = minus_sector_ = ChiralitySector::full;
    s_plus_dim_ = model_->spinor_dim();
    s_minus_dim_ = 0;
    w_plus_dim_ = aux_.form_plus.rows();
    w_minus_dim_ = 0;
  } else {
    plus_sector_ = ChiralitySector::plus;
    minus_sector_ = ChiralitySector::minus;
    s_plus_dim_ = model_->sector_dim(ChiralitySector::plus);
    s_minus_dim_ = model_->sector_dim(ChiralitySector::minus);
    if (aux_.kind == AuxKind::dual_pair) {
      w_plus_dim_ = w_minus_dim_ = aux_.form_plus.rows();
    } else {
      w_plus_dim_ = aux_.form_plus.rows();
      w_minus_dim_ = aux_.form_minus.rows();
    }
  }
  plus_dim_ = s_plus_dim_ * w_plus_dim_;
  minus_dim_ = s_minus_dim_ * w_minus_dim_;
  sigma_dim_ = plus_dim_ + minus_dim_;
  if (sigma_dim_ == 0) throw IllegalAux("the odd part Sigma must be nonzero");

  build_bracket();
}

std::size_t SusyAlgebra::sigma_index(bool minus_block, std::size_t s, std::size_t w) const {
  return minus_block ? plus_dim_ + s * w_minus_dim_ + w : s * w_plus_dim_ + w;
}

void SusyAlgebra::build_bracket() {
  bracket_.assign(n_, ExactMatrix(sigma_dim_, sigma_dim_));
  const auto& plus_idx = model_->sector_indices(plus_sector_);
  const auto& minus_idx = n_ % 2 ? plus_idx : model_->sector_indices(minus_sector_);

  for (unsigned mu = 1; mu <= n_; ++mu) {
    ExactMatrix p = model_->pairing_intertwiner() * model_->gamma_matrix(mu);
    ExactMatrix& b = bracket_[mu - 1];
    if (n_ % 2 == 1) {
      for (std::size_t s = 0; s < s_plus_dim_; ++s)
        for (std::size_t t = 0; t < s_plus_dim_; ++t) {
          const Scalar& g = p.at(s, t);
          if (g.is_zero()) continue;
          for (std::size_t w = 0; w < w_plus_dim_; ++w)
            for (std::size_t u = 0; u < w_plus_dim_; ++u) {
              const Scalar& h = aux_.form_plus.at(w, u);
              if (!h.is_zero()) b.at(sigma_index(false, s, w), sigma_index(false, t, u)) += g * h;
            }
        }
    } else if (aux_.kind == AuxKind::dual_pair) {
      for (std::size_t s = 0; s < s_plus_dim_; ++s)
        for (std::size_t t = 0; t < s_minus_dim_; ++t) {
          const Scalar& g = p.at(plus_idx[s], minus_idx[t]);
          if (g.is_zero()) continue;
          for (std::size_t w = 0; w < w_plus_dim_; ++w) {
            b.at(sigma_index(false, s, w), sigma_index(true, t, w)) += g;
            b.at(sigma_index(true, t, w), sigma_index(false, s, w)) += g;
          }
        }
    } else {
      for (std::size_t s = 0; s < s_plus_dim_; ++s)
        for (std::size_t t = 0; t < s_plus_dim_; ++t) {
          const Scalar& g = p.at(plus_idx[s], plus_idx[t]);
          if (g.is_zero()) continue;
          for (std::size_t w = 0; w < w_plus_dim_; ++w)
            for (std::size_t u = 0; u < w_plus_dim_; ++u) {
              const Scalar& h = aux_.form_plus.at(w, u);
              if (!h.is_zero()) b.at(sigma_index(false, s, w), sigma_index(false, t, u)) += g * h;
            }
        }
      for (std::size_t s = 0; s < s_minus_dim_; ++s)
        for (std::size_t t = 0; t < s_minus_dim_; ++t) {
          const Scalar& g = p.at(minus_idx[s], minus_idx[t]);
          if (g.is_zero()) continue;
          for (std::size_t w = 0; w < w_minus_dim_; ++w)
            for (std::size_t u = 0; u < w_minus_dim_; ++u) {
              const Scalar& h = aux_.form_minus.at(w, u);
              if (!h.is_zero()) b.at(sigma_index(true, s, w), sigma_index(true, t, u)) += g * h;
            }
        }
    }
    if (!(b.transpose() == b)) throw InternalConsistencyError("bracket tensor must be symmetric");
  }

  // nondegeneracy: Sigma -> Hom(Sigma, V) is injective
  ExactMatrix stacked(n_ * sigma_dim_, sigma_dim_);
  for (unsigned mu = 0; mu < n_; ++mu)
    for (std::size_t r = 0; r < sigma_dim_; ++r)
      for (std::size_t c = 0; c < sigma_dim_; ++c)
        stacked.at(mu * sigma_dim_ + r, c) = bracket_[mu].at(r, c);
  if (stacked.rank() != sigma_dim_) throw InternalConsistencyError("bracket tensor is degenerate");
}

Vec SusyAlgebra::bracket(const Vec& q1, const Vec& q2) const {
  if (q1.size() != sigma_dim_ || q2.size() != sigma_dim_)
    throw std::invalid_argument("supercharge has the wrong length for this algebra");
  Vec out(n_);
  for (unsigned mu = 0; mu < n_; ++mu) out[mu] = dot(q1, bracket_[mu].apply(q2));
  return out;
}

ExactMatrix SusyAlgebra::plus_coefficients(const Vec& q) const {
  ExactMatrix m(w_plus_dim_, s_plus_dim_);
  for (std::size_t s = 0; s < s_plus_dim_; ++s)
    for (std::size_t w = 0; w < w_plus_dim_; ++w) m.at(w, s) = q[sigma_index(false, s, w)];
  return m;
}

ExactMatrix SusyAlgebra::minus_coefficients(const Vec& q) const {
  ExactMatrix m(w_minus_dim_, s_minus_dim_);
  for (std::size_t s = 0; s < s_minus_dim_; ++s)
    for (std::size_t w = 0; w < w_minus_dim_; ++w) m.at(w, s) = q[sigma_index(true, s, w)];
  return m;
}

std::vector<std::size_t> SusyAlgebra::rank(const Vec& q) const {
  if (n_ % 2 == 1) return {plus_coefficients(q).rank()};
  return {plus_coefficients(q).rank(), minus_coefficients(q).rank()};
}

std::vector<Vec> SusyAlgebra::image_subspace(const Vec& q) const {
  if (is_zero_vec(q)) throw std::invalid_argument("image of the zero supercharge");
  std::vector<Vec> cols;
  for (std::size_t k = 0; k < sigma_dim_; ++k) {
    Vec basis(sigma_dim_);
    basis[k] = gq(1);
    cols.push_back(bracket(q, basis));
  }
  return span_basis(cols, n_);
}

std::size_t SusyAlgebra::invariant_directions(const Vec& q) const {
  return image_subspace(q).size();
}

ExactMatrix SusyAlgebra::vector_action(unsigned i, unsigned j) const {
  ExactMatrix m(n_, n_);
  m.at(i - 1, j - 1) = gq(1);
  m.at(j - 1, i - 1) = gq(-1);
  return m;
}

ExactMatrix SusyAlgebra::spin_action(unsigned i, unsigned j) const {
  ExactMatrix out(sigma_dim_, sigma_dim_);
  auto fill_block = [&](bool minus_block, ChiralitySector sec, std::size_t sdim, std::size_t wdim) {
    if (sdim == 0 || wdim == 0) return;
    const auto& idx = model_->sector_indices(sec);
    for (std::size_t b = 0; b < sdim; ++b) {
      Vec col(model_->spinor_dim());
      col[idx[b]] = gq(1);
      Vec image = model_->spin_apply(i, j, col);
      for (std::size_t a = 0; a < sdim; ++a) {
        if (image[idx[a]].is_zero()) continue;
        for (std::size_t w = 0; w < wdim; ++w)
          out.at(sigma_index(minus_block, a, w), sigma_index(minus_block, b, w)) = image[idx[a]];
      }
    }
  };
  fill_block(false, plus_sector_, s_plus_dim_, w_plus_dim_);
  fill_block(true, n_ % 2 ? ChiralitySector::full : minus_sector_, s_minus_dim_, w_minus_dim_);
  return out;
}

ExactMatrix SusyAlgebra::r_action(const RElement& g) const {
  ExactMatrix out(sigma_dim_, sigma_dim_);
  // plus block: w-space action by g.plus
  if (w_plus_dim_) {
    if (g.plus.rows() != w_plus_dim_) throw std::invalid_argument("R-element has the wrong plus shape");
    for (std::size_t s = 0; s < s_plus_dim_; ++s)
      for (std::size_t u = 0; u < w_plus_dim_; ++u)
        for (std::size_t w = 0; w < w_plus_dim_; ++w)
          if (!g.plus.at(u, w).is_zero())
            out.at(sigma_index(false, s, u), sigma_index(false, s, w)) = g.plus.at(u, w);
  }
  if (minus_dim_) {
    if (aux_.kind == AuxKind::dual_pair) {
      // on W*: minus transpose of the plus action
      for (std::size_t s = 0; s < s_minus_dim_; ++s)
        for (std::size_t u = 0; u < w_minus_dim_; ++u)
          for (std::size_t w = 0; w < w_minus_dim_; ++w)
            if (!g.plus.at(w, u).is_zero())
              out.at(sigma_index(true, s, u), sigma_index(true, s, w)) = -g.plus.at(w, u);
    } else {
      if (g.minus.rows() != w_minus_dim_) throw std::invalid_argument("R-element has the wrong minus shape");
      for (std::size_t s = 0; s < s_minus_dim_; ++s)
        for (std::size_t u = 0; u < w_minus_dim_; ++u)
          for (std::size_t w = 0; w < w_minus_dim_; ++w)
            if (!g.minus.at(u, w).is_zero())
              out.at(sigma_index(true, s, u), sigma_index(true, s, w)) = g.minus.at(u, w);
    }
  }
  return out;
}

namespace {

// basis of { M : M^T F + F M = 0 }
std::vector<ExactMatrix> form_preserving_basis(const ExactMatrix& f) {
  const std::size_t d = f.rows();
  if (d == 0) return {};
  ExactMatrix sys(d * d, d * d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      for (std::size_t k = 0; k < d; ++k) {
        // (M^T F)_{rc} = sum_k M_{kr} F_{kc}; (F M)_{rc} = sum_k F_{rk} M_{kc}
        sys.at(r * d + c, k * d + r) += f.at(k, c);
        sys.at(r * d + c, k * d + c) += f.at(r, k);
      }
  std::vector<ExactMatrix> basis;
  for (const auto& v : sys.kernel()) {
    ExactMatrix m(d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) m.at(r, c) = v[r * d + c];
    basis.push_back(std::move(m));
  }
  return basis;
}

}  // namespace

std::vector<RElement> SusyAlgebra::r_symmetry_basis() const {
  std::vector<RElement> out;
  if (aux_.kind == AuxKind::dual_pair) {
    const std::size_t d = w_plus_dim_;
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        ExactMatrix m(d, d);
        m.at(a, b) = gq(1);
        out.push_back(RElement{m, ExactMatrix()});
      }
    return out;
  }
  for (const auto& m : form_preserving_basis(aux_.form_plus))
    out.push_back(RElement{m, ExactMatrix(w_minus_dim_, w_minus_dim_)});
  if (aux_.two_sector)
    for (const auto& m : form_preserving_basis(aux_.form_minus))
      out.push_back(RElement{ExactMatrix(w_plus_dim_, w_plus_dim_), m});
  return out;
}

Vec SusyAlgebra::from_blocks(const ExactMatrix& plus, const ExactMatrix& minus) const {
  Vec q(sigma_dim_);
  if (plus.rows() != w_plus_dim_ || plus.cols() != s_plus_dim_)
    throw std::invalid_argument("plus block shape mismatch");
  for (std::size_t s = 0; s < s_plus_dim_; ++s)
    for (std::size_t w = 0; w < w_plus_dim_; ++w) q[sigma_index(false, s, w)] = plus.at(w, s);
  if (minus_dim_) {
    if (minus.rows() != w_minus_dim_ || minus.cols() != s_minus_dim_)
      throw std::invalid_argument("minus block shape mismatch");
    for (std::size_t s = 0; s < s_minus_dim_; ++s)
      for (std::size_t w = 0; w < w_minus_dim_; ++w) q[sigma_index(true, s, w)] = minus.at(w, s);
  }
  return q;
}

namespace {

// spinor columns (full coordinates) of one block of a supercharge
std::vector<Vec> block_spinor_columns(const CliffordModel& model, ChiralitySector sec,
                                      const ExactMatrix& coeffs) {
  const auto& idx = model.sector_indices(sec);
  std::vector<Vec> cols;
  for (std::size_t w = 0; w < coeffs.rows(); ++w) {
    Vec full(model.spinor_dim());
    bool nonzero = false;
    for (std::size_t s = 0; s < coeffs.cols(); ++s) {
      full[idx[s]] = coeffs.at(w, s);
      nonzero = nonzero || !coeffs.at(w, s).is_zero();
    }
    if (nonzero) cols.push_back(std::move(full));
  }
  return cols;
}

// every element of the span is pure (quadratic criteria: basis and sums)
bool subspace_all_pure(const CliffordModel& model, ChiralitySector sec, const std::vector<Vec>& span) {
  auto basis = span_basis(span, model.spinor_dim());
  if (basis.empty()) return true;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    if (!model.is_pure(basis[a], sec)) return false;
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      Vec sum = basis[a] + basis[b];
      if (!is_zero_vec(sum) && !model.is_pure(sum, sec)) return false;
    }
  }
  return true;
}

}  // namespace

TwistClass SusyAlgebra::classify(const Vec& q) const {
  TwistClass out;
  out.rank = n_ % 2 ? std::vector<std::size_t>{0} : std::vector<std::size_t>{0, 0};
  if (is_zero_vec(q)) {
    out.label = ClassLabel::zero;
    return out;
  }
  out.rank = rank(q);
  out.invariant_directions = invariant_directions(q);
  if (!is_square_zero(q)) {
    out.label = ClassLabel::not_square_zero;
  } else if (out.invariant_directions == n_) {
    out.label = ClassLabel::topological;
  } else if (n_ % 2 == 0 && out.invariant_directions == n_ / 2) {
    out.label = ClassLabel::holomorphic;
  } else {
    out.label = ClassLabel::holomorphic_topological;
  }

  // purity, attached for minimal auxiliary data in dimensions >= 7
  bool minimal = false;
  if (n_ == 7) minimal = aux_.script_n_plus == 1;
  if (n_ >= 8) minimal = aux_.script_n_plus + aux_.script_n_minus == 1;
  if (n_ >= 7 && minimal) {
    bool pure = true;
    auto plus_cols = block_spinor_columns(*model_, plus_sector_, plus_coefficients(q));
    pure = pure && subspace_all_pure(*model_, plus_sector_, plus_cols);
    if (minus_dim_) {
      auto minus_cols = block_spinor_columns(*model_, minus_sector_, minus_coefficients(q));
      pure = pure && subspace_all_pure(*model_, minus_sector_, minus_cols);
    }
    out.pure = pure;
  }

  // dimension-specific orbit discriminators
  if (n_ == 5 && out.rank[0] == 2 && out.label != ClassLabel::not_square_zero) {
    auto cols = block_spinor_columns(*model_, ChiralitySector::full, plus_coefficients(q));
    auto basis = span_basis(cols, model_->spinor_dim());
    bool lagrangian = true;
    for (std::size_t a = 0; a < basis.size() && lagrangian; ++a)
      for (std::size_t b = 0; b < basis.size(); ++b)
        if (!model_->scalar_pairing(basis[a], basis[b]).is_zero()) {
          lagrangian = false;
          break;
        }
    out.extra["dual_image"] = lagrangian ? "lagrangian" : "symplectic";
  }
  if (n_ == 6 && out.rank == std::vector<std::size_t>{1, 1}) {
    auto pc = block_spinor_columns(*model_, plus_sector_, plus_coefficients(q));
    auto mc = block_spinor_columns(*model_, minus_sector_, minus_coefficients(q));
    bool zero = true;
    for (const auto& u : mc)
      for (const auto& v : pc)
        if (!model_->scalar_pairing(u, v).is_zero()) zero = false;
    out.extra["sector_pairing"] = zero ? "zero" : "nonzero";
  }
  if (n_ == 3 && w_plus_dim_ == 4 && out.rank[0] == 2 && out.label == ClassLabel::topological) {
    // self-duality type of the Lagrangian image in W under the Hodge star of
    // the hyperbolic form; separates the two special-orthogonal orbits
    ExactMatrix m = plus_coefficients(q);
    auto im = m.image_basis();
    if (im.size() == 2) {
      auto pair_index = [](unsigned a, unsigned b) {
        static const int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
        return table[a][b];
      };
      Vec p(6);
      for (unsigned a = 0; a < 4; ++a)
        for (unsigned b = a + 1; b < 4; ++b)
          p[pair_index(a, b)] = im[0][a] * im[1][b] - im[0][b] * im[1][a];
      ExactMatrix hinv = *aux_.form_plus.inverse();
      Vec praised(6);
      for (unsigned a = 0; a < 4; ++a)
        for (unsigned b = a + 1; b < 4; ++b) {
          Scalar acc;
          for (unsigned c = 0; c < 4; ++c)
            for (unsigned d = 0; d < 4; ++d) {
              if (c == d) continue;
              Scalar val = hinv.at(a, c) * hinv.at(b, d);
              if (val.is_zero()) continue;
              int ci = pair_index(std::min(c, d), std::max(c, d));
              Scalar comp = p[ci];
              if (c > d) comp = -comp;
              acc += val * comp;
            }
          praised[pair_index(a, b)] = acc;
        }
      // (*p)_{ab} = 1/2 eps_{abcd} p^{cd}
      auto eps_term = [&](unsigned a, unsigned b, unsigned c, unsigned d, int sign) {
        Scalar comp = praised[pair_index(std::min(c, d), std::max(c, d))];
        if (c > d) comp = -comp;
        return sign > 0 ? comp : -comp;
      };
      Vec star(6);
      star[pair_index(0, 1)] = eps_term(0, 1, 2, 3, +1);
      star[pair_index(0, 2)] = eps_term(0, 2, 1, 3, -1);
      star[pair_index(0, 3)] = eps_term(0, 3, 1, 2, +1);
      star[pair_index(1, 2)] = eps_term(1, 2, 0, 3, +1);
      star[pair_index(1, 3)] = eps_term(1, 3, 0, 2, -1);
      star[pair_index(2, 3)] = eps_term(2, 3, 0, 1, +1);
      // star p = lambda p on Lagrangian bivectors
      Scalar lambda;
      bool proportional = true;
      for (unsigned k = 0; k < 6 && proportional; ++k) {
        if (p[k].is_zero()) {
          if (!star[k].is_zero()) proportional = false;
        } else {
          Scalar ratio = star[k] / p[k];
          if (lambda.is_zero())
            lambda = ratio;
          else if (!(lambda == ratio))
            proportional = false;
        }
      }
      out.extra["volume_sign"] = proportional ? lambda.str() : "indefinite";
    }
  }
  if (n_ == 4 && out.rank == std::vector<std::size_t>{2, 2} && out.label == ClassLabel::topological) {
    // ratio of volume forms from 0 -> S+* -> W -> S- -> 0 in the standard bases
    ExactMatrix mp = plus_coefficients(q);   // W x S+
    ExactMatrix mm = minus_coefficients(q);  // W* x S-
    ExactMatrix t(s_minus_dim_, w_plus_dim_);
    for (std::size_t tt = 0; tt < s_minus_dim_; ++tt)
      for (std::size_t w = 0; w < w_plus_dim_; ++w) t.at(tt, w) = mm.at(w, tt);
    std::vector<Vec> cols;
    cols.push_back(mp.col(0));
    cols.push_back(mp.col(1));
    for (std::size_t k = 0; k < s_minus_dim_; ++k) {
      Vec e(s_minus_dim_);
      e[k] = gq(1);
      auto x = t.solve(e);
      if (!x) {
        cols.clear();
        break;
      }
      cols.push_back(*x);
    }
    if (cols.size() == 4) {
      ExactMatrix d = ExactMatrix::from_cols(cols);
      // 4x4 determinant via elimination: product of pivots
      Scalar det = gq(1);
      std::vector<Vec> rows;
      for (std::size_t r = 0; r < 4; ++r) rows.push_back(d.row(r));
      for (std::size_t c = 0; c < 4; ++c) {
        std::size_t piv = c;
        while (piv < 4 && rows[piv][c].is_zero()) ++piv;
        if (piv == 4) {
          det = Scalar{};
          break;
        }
        if (piv != c) {
          std::swap(rows[piv], rows[c]);
          det = -det;
        }
        det *= rows[c][c];
        for (std::size_t r2 = c + 1; r2 < 4; ++r2) {
          Scalar f = rows[r2][c] / rows[c][c];
          for (std::size_t k = c; k < 4; ++k) rows[r2][k] -= f * rows[c][k];
        }
      }
      out.extra["c_invariant"] = det.str();
    }
  }
  return out;
}

std::shared_ptr<const SusyAlgebra> susy_algebra(unsigned n, unsigned np, unsigned nm) {
  static std::mutex mu;
  static std::map<std::tuple<unsigned, unsigned, unsigned>, std::shared_ptr<const SusyAlgebra>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(n, np, nm);
  auto it = registry.find(key);
  if (it == registry.end())
    it = registry.emplace(key, std::make_shared<SusyAlgebra>(n, AuxSpace::standard_for(n, np, nm))).first;
  return it->second;
}

// ---------------------------------------------------------------------------
// square-zero oracles

bool oracle_isotropic_image(const SusyAlgebra& alg, const Vec& q) {
  auto isotropic = [](const ExactMatrix& coeffs, const ExactMatrix& form) {
    auto image = coeffs.image_basis();
    for (const auto& v : image)
      for (const auto& w : image)
        if (!dot(v, form.apply(w)).is_zero()) return false;
    return true;
  };
  unsigned r = alg.n() % 8;
  if (r != 1 && r != 2 && r != 3) throw std::invalid_argument("isotropy oracle applies to n = 1,2,3 mod 8");
  bool ok = isotropic(alg.plus_coefficients(q), alg.aux().form_plus);
  if (alg.aux().two_sector) ok = ok && isotropic(alg.minus_coefficients(q), alg.aux().form_minus);
  return ok;
}

bool oracle_dual_pairing_zero(const SusyAlgebra& alg, const Vec& q) {
  if (alg.aux().kind != AuxKind::dual_pair)
    throw std::invalid_argument("dual-pairing oracle applies to n = 0,4 mod 8");
  auto wp = alg.plus_coefficients(q).image_basis();   // subspace of W
  auto wm = alg.minus_coefficients(q).image_basis();  // subspace of W*
  for (const auto& f : wm)
    for (const auto& w : wp)
      if (!dot(f, w).is_zero()) return false;
  return true;
}

bool oracle_bivector_proportional(const SusyAlgebra& alg, const Vec& q) {
  if (alg.n() % 8 != 5) throw std::invalid_argument("bivector oracle applies to n = 5 mod 8");
  // P = N pi_{W*} N^T with N : W* -> S the coefficient map; compare with pi_S
  ExactMatrix coeffs = alg.plus_coefficients(q);  // W x S
  ExactMatrix n_mat = coeffs.transpose();         // S x W
  ExactMatrix pi_wstar = *alg.aux().form_plus.inverse();
  ExactMatrix p = n_mat * pi_wstar * n_mat.transpose();
  ExactMatrix pi_s = *alg.model().pairing_intertwiner().inverse();
  // proportionality P = lambda pi_S
  Scalar lambda;
  for (std::size_t r = 0; r < p.rows(); ++r)
    for (std::size_t c = 0; c < p.cols(); ++c) {
      if (pi_s.at(r, c).is_zero()) {
        if (!p.at(r, c).is_zero()) return false;
        continue;
      }
      Scalar ratio = p.at(r, c) / pi_s.at(r, c);
      if (lambda.is_zero() && !ratio.is_zero())
        lambda = ratio;
      else if (!ratio.is_zero() && !(ratio == lambda))
        return false;
    }
  for (std::size_t r = 0; r < p.rows(); ++r)
    for (std::size_t c = 0; c < p.cols(); ++c)
      if (!(p.at(r, c) == lambda * pi_s.at(r, c))) return false;
  return true;
}

bool oracle_volume_exact(const SusyAlgebra& alg, const Vec& q) {
  if (alg.n() % 8 != 6) throw std::invalid_argument("volume oracle applies to n = 6 mod 8");
  if (alg.rank(q) != std::vector<std::size_t>{2, 2})
    throw std::invalid_argument("volume oracle applies to rank (2,2) supercharges");
  const CliffordModel& m = alg.model();
  ExactMatrix mp = alg.plus_coefficients(q);
  ExactMatrix mm = alg.minus_coefficients(q);
  const auto& pi = m.sector_indices(alg.plus_sector());
  const auto& mi = m.sector_indices(alg.minus_sector());

  // dual image of Q+ in S+ (sector coordinates), ordered by the W+ basis
  std::vector<Vec> u;
  for (std::size_t w = 0; w < 2; ++w) {
    Vec v(pi.size());
    for (std::size_t s = 0; s < pi.size(); ++s) v[s] = mp.at(w, s);
    u.push_back(v);
  }

  // phi : S+ -> W-, s |-> Q-( <s, -> ), through the cross-sector scalar pairing
  ExactMatrix phi(2, pi.size());
  for (std::size_t s = 0; s < pi.size(); ++s) {
    Vec full(m.spinor_dim());
    full[pi[s]] = gq(1);
    for (std::size_t w = 0; w < 2; ++w) {
      Scalar acc;
      for (std::size_t t = 0; t < mi.size(); ++t) {
        Vec tf(m.spinor_dim());
        tf[mi[t]] = gq(1);
        acc += mm.at(w, t) * m.scalar_pairing(full, tf);
      }
      phi.at(w, s) = acc;
    }
  }

  // exactness: ker phi = span(u)
  auto ker = phi.kernel();
  if (!same_span(ker, u, pi.size())) return false;

  // volume condition: det(u1, u2, p1, p2) with phi(p_k) = e_k must take the
  // fixed value matching the bracket normalization (determined once against
  // is_square_zero and frozen in the test suite); here we return the scalar
  // comparison with that constant.
  std::vector<Vec> cols = u;
  for (std::size_t k = 0; k < 2; ++k) {
    Vec e(2);
    e[k] = gq(1);
    auto x = phi.solve(e);
    if (!x) return false;
    cols.push_back(*x);
  }
  ExactMatrix d = ExactMatrix::from_cols(cols);
  Scalar det = gq(1);
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < 4; ++r) rows.push_back(d.row(r));
  for (std::size_t c = 0; c < 4; ++c) {
    std::size_t piv = c;
    while (piv < 4 && rows[piv][c].is_zero()) ++piv;
    if (piv == 4) return false;
    if (piv != c) {
      std::swap(rows[piv], rows[c]);
      det = -det;
    }
    det *= rows[c][c];
    for (std::size_t r2 = c + 1; r2 < 4; ++r2) {
      Scalar f = rows[r2][c] / rows[c][c];
      for (std::size_t k = c; k < 4; ++k) rows[r2][k] -= f * rows[c][k];
    }
  }
  return det == gq(-1);
}

}  // namespace twistcat
