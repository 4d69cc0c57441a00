#include "twistcat/susy.hpp"

namespace twistcat {

namespace {

struct SectionContext {
  const SusyAlgebra* alg;
  Vec q;
  std::vector<Vec> target;  // basis of S_Q
  std::size_t budget = 6000;
};

// bracket(q, x) for a candidate, plus the linear "commutes with chosen" rows
Vec charge_image(const SusyAlgebra& alg, const Vec& q, const Vec& x) { return alg.bracket(q, x); }

bool extends_span(const SusyAlgebra& alg, const std::vector<Vec>& images, const Vec& candidate_image) {
  if (is_zero_vec(candidate_image)) return false;
  return !in_span(candidate_image, images);
}

bool dfs(SectionContext& ctx, std::vector<Vec>& chosen, std::vector<Vec>& images) {
  if (chosen.size() == ctx.target.size()) return true;
  if (ctx.budget == 0) return false;

  const std::size_t sigma = ctx.alg->sigma_dim();
  // linear constraints: bracket(a_i, x) = 0 for every already-chosen a_i
  ExactMatrix constraints(ctx.alg->n() * chosen.size(), sigma);
  for (std::size_t i = 0; i < chosen.size(); ++i)
    for (unsigned mu = 1; mu <= ctx.alg->n(); ++mu) {
      Vec row = ctx.alg->bracket_matrix(mu).apply(chosen[i]);  // symmetric tensor
      for (std::size_t c = 0; c < sigma; ++c)
        constraints.at((i * ctx.alg->n()) + mu - 1, c) = row[c];
    }
  std::vector<Vec> kernel = chosen.empty() ? std::vector<Vec>{} : constraints.kernel();
  if (chosen.empty()) {
    kernel.clear();
    for (std::size_t k = 0; k < sigma; ++k) {
      Vec e(sigma);
      e[k] = gq(1);
      kernel.push_back(std::move(e));
    }
  }

  std::vector<Vec> candidates;
  for (const auto& k : kernel) candidates.push_back(k);
  for (std::size_t a = 0; a < kernel.size(); ++a)
    for (std::size_t b = a + 1; b < kernel.size(); ++b) {
      candidates.push_back(kernel[a] + kernel[b]);
      candidates.push_back(kernel[a] - kernel[b]);
    }

  for (const auto& x : candidates) {
    if (ctx.budget == 0) return false;
    --ctx.budget;
    if (is_zero_vec(x) || !ctx.alg->is_square_zero(x)) continue;
    Vec img = charge_image(*ctx.alg, ctx.q, x);
    if (!extends_span(*ctx.alg, images, img)) continue;
    chosen.push_back(x);
    images.push_back(img);
    if (dfs(ctx, chosen, images)) return true;
    chosen.pop_back();
    images.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<Vec>> SusyAlgebra::structural_section(const Vec& q) const {
  if (aux_.kind != AuxKind::dual_pair) return std::nullopt;
  bool plus_only = minus_coefficients(q).is_zero();
  bool minus_only = plus_coefficients(q).is_zero();
  if (!plus_only && !minus_only) return std::nullopt;

  // The opposite block brackets to zero with itself, so any preimage set of
  // an S_Q basis inside it is an abelian section.
  std::size_t lo = minus_only ? 0 : plus_block_dim();
  std::size_t hi = minus_only ? plus_block_dim() : sigma_dim();
  std::vector<std::size_t> block_index;
  for (std::size_t k = lo; k < hi; ++k) block_index.push_back(k);
  if (block_index.empty()) return std::nullopt;

  ExactMatrix map(n_, block_index.size());
  for (std::size_t c = 0; c < block_index.size(); ++c) {
    Vec e(sigma_dim_);
    e[block_index[c]] = gq(1);
    Vec img = bracket(q, e);
    for (unsigned mu = 0; mu < n_; ++mu) map.at(mu, c) = img[mu];
  }
  std::vector<Vec> section;
  for (const auto& target : image_subspace(q)) {
    auto x = map.solve(target);
    if (!x) return std::nullopt;
    Vec lifted(sigma_dim_);
    for (std::size_t c = 0; c < block_index.size(); ++c) lifted[block_index[c]] = (*x)[c];
    section.push_back(std::move(lifted));
  }
  return section;
}

std::optional<std::vector<Vec>> SusyAlgebra::greedy_section(const Vec& q) const {
  SectionContext ctx{this, q, image_subspace(q)};
  std::vector<Vec> chosen, images;
  if (dfs(ctx, chosen, images)) return chosen;
  return std::nullopt;
}

std::optional<std::vector<Vec>> SusyAlgebra::abelian_section(const Vec& q) const {
  if (is_zero_vec(q)) throw std::invalid_argument("abelian section of the zero supercharge");
  if (!is_square_zero(q)) throw std::invalid_argument("abelian section needs a square-zero supercharge");

  auto replay = [&](const std::vector<Vec>& a) {
    auto s_q = image_subspace(q);
    if (a.size() != s_q.size()) return false;
    std::vector<Vec> images;
    for (const auto& x : a) {
      for (const auto& y : a)
        if (!is_zero_vec(bracket(x, y))) return false;
      images.push_back(bracket(q, x));
    }
    return span_rank(images, n_) == s_q.size() && same_span(images, s_q, n_);
  };

  if (auto s = structural_section(q)) {
    if (!replay(*s)) throw InternalConsistencyError("structural abelian section failed its replay");
    return s;
  }
  if (auto s = greedy_section(q)) {
    if (!replay(*s)) throw InternalConsistencyError("greedy abelian section failed its replay");
    return s;
  }
  return std::nullopt;
}

}  // namespace twistcat
