#include <doctest.h>

#include "twistcat/clifford.hpp"
#include "twistcat/rng.hpp"

using namespace twistcat;

namespace {

bool all_zero(const std::vector<Scalar>& v) {
  for (const auto& e : v)
    if (!e.is_zero()) return false;
  return true;
}

ChiralitySector weyl_sector_of(const CliffordModel& m, const Vec& full) {
  if (m.in_sector(full, ChiralitySector::plus)) return ChiralitySector::plus;
  if (m.in_sector(full, ChiralitySector::minus)) return ChiralitySector::minus;
  return ChiralitySector::full;
}

Vec sample_weyl(const CliffordModel& m, Rng& rng, ChiralitySector s) {
  Vec coeffs(m.sector_dim(s));
  for (auto& e : coeffs) e = rng.small_gaussian(3);
  Vec full = m.to_full(coeffs, s);
  if (is_zero_vec(full)) full[m.sector_indices(s)[0]] = gq(1);
  return full;
}

}  // namespace

TEST_CASE("gamma anticommutation relations for n = 1..10") {
  for (unsigned n = 1; n <= 10; ++n) {
    const CliffordModel& m = clifford_model(n);
    ExactMatrix two_id = ExactMatrix::identity(m.spinor_dim()).scaled(gq(2));
    for (unsigned i = 1; i <= n; ++i)
      for (unsigned j = i; j <= n; ++j) {
        ExactMatrix anti = (m.gamma(i) * m.gamma(j)).to_matrix() + (m.gamma(j) * m.gamma(i)).to_matrix();
        if (i == j) {
          CHECK(anti == two_id);
        } else {
          CHECK(anti.is_zero());
        }
      }
  }
}

TEST_CASE("n = 1 is the scalar representation") {
  const CliffordModel& m = clifford_model(1);
  CHECK(m.spinor_dim() == 1);
  CHECK(m.gamma_matrix(1) == ExactMatrix::identity(1));
  CHECK(m.conj_plus().has_value());
  CHECK(*m.conj_plus() == ExactMatrix::identity(1));
  CHECK(!m.conj_minus().has_value());
}

TEST_CASE("chirality squares to one, anticommutes, splits evenly") {
  for (unsigned n = 2; n <= 10; n += 2) {
    const CliffordModel& m = clifford_model(n);
    ExactMatrix w = m.chirality_matrix();
    CHECK(w * w == ExactMatrix::identity(m.spinor_dim()));
    for (unsigned i = 1; i <= n; ++i) {
      ExactMatrix g = m.gamma_matrix(i);
      CHECK((w * g + g * w).is_zero());
    }
    CHECK(m.sector_indices(ChiralitySector::plus).size() == m.spinor_dim() / 2);
    CHECK(m.sector_indices(ChiralitySector::minus).size() == m.spinor_dim() / 2);
  }
}

TEST_CASE("conjugation intertwiners satisfy their defining relations") {
  for (unsigned n = 1; n <= 10; ++n) {
    const CliffordModel& m = clifford_model(n);
    if (n % 2 == 0) {
      CHECK(m.conj_plus().has_value());
      CHECK(m.conj_minus().has_value());
    } else {
      // odd n admits exactly one sign: + for n = 1 mod 4, - for n = 3 mod 4
      CHECK(m.conj_plus().has_value() == (n % 4 == 1));
      CHECK(m.conj_minus().has_value() == (n % 4 == 3));
    }
    for (int sign : {+1, -1}) {
      const auto& c = sign > 0 ? m.conj_plus() : m.conj_minus();
      if (!c) continue;
      CHECK(c->inverse().has_value());
      for (unsigned i = 1; i <= n; ++i) {
        ExactMatrix g = m.gamma_matrix(i);
        ExactMatrix rhs = g.transpose().scaled(gq(sign)) * *c;
        CHECK(*c * g == rhs);
      }
    }
  }
}

TEST_CASE("intertwiner space dimensions agree with the stacked linear system") {
  // Independent route: kernel of the full intertwiner system, small n only.
  for (unsigned n : {2u, 3u, 4u}) {
    const CliffordModel& m = clifford_model(n);
    const std::size_t d = m.spinor_dim();
    for (int sign : {+1, -1}) {
      ExactMatrix sys(n * d * d, d * d);
      for (unsigned i = 0; i < n; ++i) {
        ExactMatrix g = m.gamma_matrix(i + 1);
        ExactMatrix gt = g.transpose();
        // X g - sign g^T X = 0, unknown X in row-major coordinates
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t c = 0; c < d; ++c) {
            std::size_t eq = (i * d + r) * d + c;
            for (std::size_t k = 0; k < d; ++k) {
              sys.at(eq, r * d + k) += g.at(k, c);
              sys.at(eq, k * d + c) -= gq(sign) * gt.at(r, k);
            }
          }
      }
      auto ker = sys.kernel();
      bool exists = sign > 0 ? m.conj_plus().has_value() : m.conj_minus().has_value();
      CHECK(ker.size() == (exists ? 1u : 0u));
      if (exists) {
        ExactMatrix x(d, d);
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t c = 0; c < d; ++c) x.at(r, c) = ker[0][r * d + c];
        const ExactMatrix& c = sign > 0 ? *m.conj_plus() : *m.conj_minus();
        CHECK(normalize_first_entry(x) == c);
      }
    }
  }
}

TEST_CASE("pairing kinds follow the mod-8 table") {
  auto kind_of = [](unsigned n) { return clifford_model(n).pairing_kind().kind; };
  CHECK(kind_of(1) == GammaKind::sym2);
  CHECK(kind_of(2) == GammaKind::sym2);
  CHECK(kind_of(3) == GammaKind::sym2);
  CHECK(kind_of(4) == GammaKind::plus_minus);
  CHECK(kind_of(5) == GammaKind::wedge2);
  CHECK(kind_of(6) == GammaKind::wedge2);
  CHECK(kind_of(7) == GammaKind::wedge2);
  CHECK(kind_of(8) == GammaKind::plus_minus);
  CHECK(kind_of(9) == GammaKind::sym2);
  CHECK(kind_of(10) == GammaKind::sym2);
}

TEST_CASE("vector pairing: frozen n = 3 diagonal value and symmetry properties") {
  const CliffordModel& m3 = clifford_model(3);
  Vec e1 = {gq(1), gq(0)};
  Vec g = m3.vector_pairing(e1, e1);
  CHECK(g == Vec{gq(1), GaussianRational::i(), gq(0)});

  // n = 7: wedge pairing, so the diagonal vanishes identically
  const CliffordModel& m7 = clifford_model(7);
  Rng rng(31);
  for (int t = 0; t < 10; ++t) {
    Vec q1 = sample_spinor(m7, rng);
    Vec q2 = sample_spinor(m7, rng);
    Vec a = m7.vector_pairing(q1, q2);
    Vec b = m7.vector_pairing(q2, q1);
    for (unsigned mu = 0; mu < 7; ++mu) CHECK(a[mu] == -b[mu]);
    CHECK(is_zero_vec(m7.vector_pairing(q1, q1)));
  }

  // bilinearity
  const CliffordModel& m4 = clifford_model(4);
  Vec q1 = sample_weyl(m4, rng, ChiralitySector::plus);
  Vec q1p = sample_weyl(m4, rng, ChiralitySector::plus);
  Vec q2 = sample_weyl(m4, rng, ChiralitySector::minus);
  Scalar a = rng.small_gaussian_nonzero(5);
  Vec left = m4.vector_pairing(a * q1 + q1p, q2);
  Vec right = a * m4.vector_pairing(q1, q2) + m4.vector_pairing(q1p, q2);
  CHECK(left == right);
}

TEST_CASE("gamma_pairing enforces the sector rules of the dimension") {
  const CliffordModel& m4 = clifford_model(4);
  Rng rng(17);
  Spinor plus{4, ChiralitySector::plus, {gq(1), gq(0)}};
  Spinor minus{4, ChiralitySector::minus, {gq(0), gq(1)}};
  CHECK_NOTHROW(gamma_pairing(m4, plus, minus));
  CHECK_THROWS_AS(gamma_pairing(m4, plus, plus), std::invalid_argument);

  Spinor full3{3, ChiralitySector::full, {gq(1), gq(1)}};
  CHECK_NOTHROW(gamma_pairing(clifford_model(3), full3, full3));

  const CliffordModel& m6 = clifford_model(6);
  Spinor p6{6, ChiralitySector::plus, {gq(1), gq(0), gq(0), gq(0)}};
  Spinor m6s{6, ChiralitySector::minus, {gq(1), gq(0), gq(0), gq(0)}};
  CHECK_NOTHROW(gamma_pairing(m6, p6, p6));
  CHECK_THROWS_AS(gamma_pairing(m6, p6, m6s), std::invalid_argument);
}

TEST_CASE("so action: closure, equivariance, chirality preservation") {
  Rng rng(41);
  for (unsigned n : {3u, 4u, 6u}) {
    const CliffordModel& m = clifford_model(n);
    Vec q = sample_spinor(m, rng);

    // [r12, r23] = r13
    Vec lhs = m.spin_apply(1, 2, m.spin_apply(2, 3, q)) - m.spin_apply(2, 3, m.spin_apply(1, 2, q));
    CHECK(lhs == m.spin_apply(1, 3, q));

    // equivariance: Gamma(r q1, q2) + Gamma(q1, r q2) = r_V Gamma(q1, q2),
    // where r = rho(r_ij) acts on V by (r_V g)_i = g_j, (r_V g)_j = -g_i
    Vec q2 = sample_spinor(m, rng);
    unsigned i = 1, j = 2;
    Vec lhs2 = m.vector_pairing(m.spin_apply(i, j, q), q2) + m.vector_pairing(q, m.spin_apply(i, j, q2));
    Vec rv = m.vector_pairing(q, q2);
    Vec rhs2(n);
    rhs2[i - 1] = rv[j - 1];
    rhs2[j - 1] = -rv[i - 1];
    CHECK(lhs2 == rhs2);
  }

  const CliffordModel& m4 = clifford_model(4);
  Vec wp = m4.to_full({gq(2), gq(-1)}, ChiralitySector::plus);
  CHECK(m4.in_sector(m4.spin_apply(2, 4, wp), ChiralitySector::plus));
}

TEST_CASE("nullspace dimensions on pinned spinors") {
  const CliffordModel& m2 = clifford_model(2);
  Vec q2 = m2.to_full({gq(1)}, ChiralitySector::plus);
  CHECK(span_rank(m2.nullspace(q2), 2) == 1);

  // n = 8: a Weyl spinor with nonzero scalar square has trivial nullspace
  const CliffordModel& m8 = clifford_model(8);
  Rng rng(5);
  Vec w8 = sample_weyl(m8, rng, ChiralitySector::plus);
  while (m8.scalar_pairing(w8, w8).is_zero()) w8 = sample_weyl(m8, rng, ChiralitySector::plus);
  CHECK(m8.nullspace(w8).empty());

  // n = 10: pure spinors have a maximal (5-dimensional) nullspace
  const CliffordModel& m10 = clifford_model(10);
  Vec p10 = sample_pure_spinor(m10, rng, 4);
  CHECK(span_rank(m10.nullspace(p10), 10) == 5);
}

TEST_CASE("purity: low dimensions are automatically pure") {
  Rng rng(77);
  for (unsigned n : {2u, 4u, 6u}) {
    const CliffordModel& m = clifford_model(n);
    for (int t = 0; t < 8; ++t) {
      ChiralitySector s = t % 2 ? ChiralitySector::plus : ChiralitySector::minus;
      Vec q = sample_weyl(m, rng, s);
      CHECK(m.is_pure(q, s));
    }
  }
  for (unsigned n : {1u, 3u, 5u}) {
    const CliffordModel& m = clifford_model(n);
    for (int t = 0; t < 8; ++t) {
      Vec q = sample_spinor(m, rng);
      if (is_zero_vec(q)) continue;
      CHECK(m.is_pure(q, ChiralitySector::full));
    }
  }
}

TEST_CASE("purity in high dimensions distinguishes the two orbits") {
  Rng rng(123);
  const CliffordModel& m7 = clifford_model(7);
  Vec p7 = sample_pure_spinor(m7, rng, 3);
  CHECK(m7.is_pure(p7, ChiralitySector::full));

  const CliffordModel& m8 = clifford_model(8);
  Vec w8 = sample_weyl(m8, rng, ChiralitySector::plus);
  while (m8.scalar_pairing(w8, w8).is_zero()) w8 = sample_weyl(m8, rng, ChiralitySector::plus);
  CHECK(!m8.is_pure(w8, ChiralitySector::plus));
  Vec p8 = sample_pure_spinor(m8, rng, 3);
  CHECK(m8.is_pure(p8, weyl_sector_of(m8, p8)));

  const CliffordModel& m9 = clifford_model(9);
  Vec p9 = sample_pure_spinor(m9, rng, 3);
  CHECK(m9.is_pure(p9, ChiralitySector::full));
  Vec g9 = sample_spinor(m9, rng);
  // generic spinors in dimension 9 are impure
  CHECK(!m9.is_pure(g9, ChiralitySector::full));
}

TEST_CASE("purity requires a Weyl spinor in even dimensions") {
  const CliffordModel& m4 = clifford_model(4);
  Vec full = {gq(1), gq(1), gq(1), gq(0)};
  CHECK_THROWS_AS(m4.is_pure(full, ChiralitySector::full), std::invalid_argument);
  CHECK_THROWS_AS(m4.nullspace(Vec(4)), std::invalid_argument);
}

TEST_CASE("Fierz decomposition reconstructs the spinor bilinear (n = 4)") {
  const CliffordModel& m = clifford_model(4);
  Rng rng(3);
  Vec q = sample_spinor(m, rng);
  auto comps = m.fierz_components(q);

  Vec w = m.pairing_intertwiner().transpose().apply(q);
  ExactMatrix outer(4, 4);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) outer.at(a, b) = q[a] * w[b];

  ExactMatrix sum(4, 4);
  for (unsigned p = 0; p <= 4; ++p) {
    auto subsets = index_subsets(4, p);
    for (std::size_t s = 0; s < subsets.size(); ++s) {
      PhasedPerm g = PhasedPerm::identity(4);
      for (unsigned idx : subsets[s]) g = g * m.gamma(idx);
      sum = sum + g.to_matrix().scaled(comps[p][s]);
    }
  }
  CHECK(sum == outer);
}

TEST_CASE("Fierz vanishing patterns in dimensions 8 and 10") {
  Rng rng(9);
  const CliffordModel& m8 = clifford_model(8);
  Vec p8 = sample_pure_spinor(m8, rng, 3);
  auto c8 = m8.fierz_components(p8);
  CHECK(all_zero(c8[0]));  // pure Weyl spinors in dimension 8 satisfy <Q,Q> = 0

  const CliffordModel& m10 = clifford_model(10);
  ChiralitySector s10 = ChiralitySector::plus;
  Vec w10 = sample_weyl(m10, rng, s10);
  auto c10 = m10.fierz_components(w10);
  for (unsigned p = 0; p <= 10; ++p) {
    bool allowed = (p % 4) == 1;  // p = 1, 5, 9
    if (!allowed) CHECK(all_zero(c10[p]));
  }
}

TEST_CASE("image of the pairing equals the orthogonal of the nullspace") {
  Rng rng(55);
  for (unsigned n = 2; n <= 10; ++n) {
    const CliffordModel& m = clifford_model(n);
    for (int t = 0; t < 4; ++t) {
      Vec q = t % 2 ? sample_pure_spinor(m, rng, 2) : sample_spinor(m, rng);
      if (is_zero_vec(q)) continue;
      auto t_q = m.nullspace(q);
      auto s_q = m.pairing_image(q);
      // orthogonal complement of T_Q under the complexified Euclidean form
      std::vector<Vec> perp;
      if (t_q.empty()) {
        perp = ExactMatrix(0, n).kernel();
        perp.clear();
        for (unsigned k = 0; k < n; ++k) {
          Vec e(n);
          e[k] = gq(1);
          perp.push_back(e);
        }
      } else {
        perp = ExactMatrix::from_rows(t_q).kernel();
      }
      CHECK(same_span(s_q, perp, n));
      CHECK(span_rank(s_q, n) >= (n + 1) / 2);
    }
  }
}

TEST_CASE("odd-to-even embedding is equivariant and restricts back") {
  Rng rng(19);
  for (unsigned n : {3u, 5u, 7u, 9u}) {
    const CliffordModel& m = clifford_model(n);
    const CliffordModel& up = clifford_model(n + 1);
    Vec x = sample_spinor(m, rng);
    Vec lifted = m.embed_in_even(x);
    CHECK(weyl_sector_of(up, lifted) != ChiralitySector::full);
    for (auto [i, j] : {std::pair<unsigned, unsigned>{1, 2}, {2, 3}, {1, 3}}) {
      CHECK(m.embed_in_even(m.spin_apply(i, j, x)) == up.spin_apply(i, j, lifted));
    }
    CHECK(up.restrict_raw_plus(lifted) == x);
  }
}

TEST_CASE("purity lifts along the odd-to-even identification") {
  Rng rng(29);
  const CliffordModel& m7 = clifford_model(7);
  const CliffordModel& m8 = clifford_model(8);
  for (int t = 0; t < 6; ++t) {
    Vec q = t % 2 ? sample_pure_spinor(m7, rng, 2) : sample_spinor(m7, rng);
    if (is_zero_vec(q)) continue;
    Vec lifted = m7.embed_in_even(q);
    CHECK(m7.is_pure(q, ChiralitySector::full) == m8.is_pure(lifted, weyl_sector_of(m8, lifted)));
  }
}
