#include "twistcat/susy.hpp"

namespace twistcat {

namespace {

std::shared_ptr<const SusyAlgebra> custom_algebra(unsigned n, AuxSpace aux) {
  return std::make_shared<const SusyAlgebra>(n, std::move(aux));
}

}  // namespace

Supercharge SusyAlgebra::reduce_dimension(const Vec& q) const {
  if (q.size() != sigma_dim_) throw std::invalid_argument("supercharge length mismatch");
  if (n_ < 2) throw std::invalid_argument("dimension 1 admits no reduction");
  const unsigned target_n = n_ - 1;

  if (n_ % 2 == 1) {
    // Odd to even: the spinor coordinates are shared (the target gammas are
    // a prefix of the source ones); the full spinor splits into the target
    // chirality sectors, and the auxiliary space splits per the dimension.
    std::shared_ptr<const SusyAlgebra> tgt;
    switch (n_ % 8) {
      case 1:  // W^(n-1) = W as a dual pair, identified by the symmetric form
        tgt = susy_algebra(target_n, aux_.script_n_plus);
        break;
      case 3:  // two symmetric copies of W
        tgt = susy_algebra(target_n, aux_.script_n_plus, aux_.script_n_plus);
        break;
      case 5:  // W^(n-1) = W as a dual pair, identified by the symplectic form
        tgt = susy_algebra(target_n, 2 * aux_.script_n_plus);
        break;
      default:  // 7: two symplectic copies of W
        tgt = susy_algebra(target_n, aux_.script_n_plus, aux_.script_n_plus);
        break;
    }
    const CliffordModel& tm = tgt->model();
    const auto& tplus = tm.sector_indices(tgt->plus_sector());
    const auto& tminus = tm.sector_indices(tgt->minus_sector());
    auto sector_pos = [](const std::vector<std::size_t>& idx, std::size_t s) {
      for (std::size_t k = 0; k < idx.size(); ++k)
        if (idx[k] == s) return k;
      return idx.size();
    };
    bool dual_target = tgt->aux().kind == AuxKind::dual_pair;
    const ExactMatrix& form = aux_.form_plus;

    Vec out(tgt->sigma_dim());
    for (std::size_t s = 0; s < s_plus_dim_; ++s)
      for (std::size_t w = 0; w < w_plus_dim_; ++w) {
        const Scalar& c = q[sigma_index(false, s, w)];
        if (c.is_zero()) continue;
        std::size_t p = sector_pos(tplus, s);
        if (p < tplus.size()) {
          out[tgt->sigma_index(false, p, w)] += c;
        } else {
          std::size_t mpos = sector_pos(tminus, s);
          if (dual_target) {
            // e_w viewed in W* through the pairing
            for (std::size_t f = 0; f < w_plus_dim_; ++f)
              if (!form.at(w, f).is_zero())
                out[tgt->sigma_index(true, mpos, f)] += c * form.at(w, f);
          } else {
            out[tgt->sigma_index(true, mpos, w)] += c;
          }
        }
      }
    return Supercharge{tgt, out};
  }

  // Even to odd: chirality sectors identify with the target spinor module
  // through the raw-grading restriction maps; auxiliary spaces concatenate.
  std::shared_ptr<const SusyAlgebra> tgt;
  auto block_diag = [](const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) m.at(a.rows() + r, a.cols() + c) = b.at(r, c);
    return m;
  };
  // target W-coordinates of (w in W+) and (f in W- or W*)
  std::size_t minus_offset = w_plus_dim_;
  switch (n_ % 8) {
    case 0: {  // W + W* with the standard symplectic pairing, interleaved
      tgt = susy_algebra(target_n, aux_.script_n_plus);
      minus_offset = 0;  // interleaving handled below
      break;
    }
    case 4: {  // W + W* with the hyperbolic pairing, interleaved
      tgt = susy_algebra(target_n, 2 * aux_.script_n_plus);
      minus_offset = 0;
      break;
    }
    case 2: {  // direct sum of the two symmetric spaces
      AuxSpace aux{AuxKind::symmetric, false,
                   static_cast<unsigned>(aux_.form_plus.rows() + aux_.form_minus.rows()), 0,
                   block_diag(aux_.form_plus, aux_.form_minus), ExactMatrix()};
      tgt = custom_algebra(target_n, std::move(aux));
      break;
    }
    default: {  // 6: direct sum of the two symplectic spaces
      tgt = susy_algebra(target_n, aux_.script_n_plus + aux_.script_n_minus);
      break;
    }
  }

  bool interleave = (n_ % 8 == 0 || n_ % 8 == 4);
  const CliffordModel& tm = tgt->model();
  auto down = [&](ChiralitySector sec, std::size_t s_sector_index) {
    const auto& idx = model_->sector_indices(sec);
    Vec full(model_->spinor_dim());
    full[idx[s_sector_index]] = gq(1);
    Vec a = model_->restrict_raw_plus(full);
    Vec b = model_->restrict_raw_minus(full);
    return is_zero_vec(a) ? b : a;
  };
  (void)tm;

  Vec out(tgt->sigma_dim());
  for (std::size_t s = 0; s < s_plus_dim_; ++s)
    for (std::size_t w = 0; w < w_plus_dim_; ++w) {
      const Scalar& c = q[sigma_index(false, s, w)];
      if (c.is_zero()) continue;
      Vec z = down(plus_sector_, s);
      std::size_t wt = interleave ? 2 * w : w;
      for (std::size_t a = 0; a < z.size(); ++a)
        if (!z[a].is_zero()) out[tgt->sigma_index(false, a, wt)] += c * z[a];
    }
  for (std::size_t s = 0; s < s_minus_dim_; ++s)
    for (std::size_t w = 0; w < w_minus_dim_; ++w) {
      const Scalar& c = q[sigma_index(true, s, w)];
      if (c.is_zero()) continue;
      Vec z = down(minus_sector_, s);
      std::size_t wt = interleave ? 2 * w + 1 : minus_offset + w;
      for (std::size_t a = 0; a < z.size(); ++a)
        if (!z[a].is_zero()) out[tgt->sigma_index(false, a, wt)] += c * z[a];
    }
  return Supercharge{tgt, out};
}

}  // namespace twistcat
