#include <doctest.h>

#include "twistcat/octonion.hpp"

using namespace twistcat;

namespace {

ChiralitySector sector_of(const CliffordModel& m, const Vec& full) {
  if (m.in_sector(full, ChiralitySector::plus)) return ChiralitySector::plus;
  if (m.in_sector(full, ChiralitySector::minus)) return ChiralitySector::minus;
  return ChiralitySector::full;
}

}  // namespace

TEST_CASE("multiplication table conventions") {
  auto e = [](unsigned k) { return ComplexOctonion::unit(k); };
  CHECK(e(1) * e(2) == e(4));
  CHECK(e(2) * e(1) == e(4).scaled(gq(-1)));
  CHECK(e(2) * e(3) == e(5));
  CHECK(e(7) * e(1) == e(3));
  for (unsigned k = 1; k < 8; ++k) CHECK(e(k) * e(k) == e(0).scaled(gq(-1)));
}

TEST_CASE("alternativity and norm composition") {
  Rng rng(11);
  for (int t = 0; t < 60; ++t) {
    ComplexOctonion a = sample_octonion(rng);
    ComplexOctonion b = sample_octonion(rng);
    CHECK(a * (a * b) == (a * a) * b);
    CHECK((a * b) * b == a * (b * b));
    CHECK((a * b).norm() == a.norm() * b.norm());
    CHECK(a * a.conj() == ComplexOctonion::unit(0).scaled(a.norm()));
    CHECK(a.trace() == a[0] + a[0]);
  }
}

TEST_CASE("complexified zero divisors") {
  ComplexOctonion z = ComplexOctonion::unit(0) + ComplexOctonion::unit(1).scaled(GaussianRational::i());
  CHECK(z.norm().is_zero());
  CHECK(!z.is_zero());

  Rng rng(23);
  for (int t = 0; t < 20; ++t) {
    ComplexOctonion s = sample_zero_divisor(rng);
    CHECK(s.norm().is_zero());
    CHECK(!s.is_zero());
    CHECK(s.left_mult_matrix().rank() == 4);
  }
}

TEST_CASE("cross7 is the antisymmetric seven-dimensional pairing") {
  Rng rng(37);
  for (int t = 0; t < 20; ++t) {
    ComplexOctonion a = sample_octonion(rng);
    ComplexOctonion b = sample_octonion(rng);
    CHECK(is_zero_vec(ComplexOctonion::cross7(a, a)));
    Vec ab = ComplexOctonion::cross7(a, b);
    Vec ba = ComplexOctonion::cross7(b, a);
    for (unsigned k = 0; k < 7; ++k) CHECK(ab[k] == -ba[k]);
    // bilinearity
    ComplexOctonion c = sample_octonion(rng);
    Scalar s = rng.small_gaussian_nonzero(4);
    Vec lhs = ComplexOctonion::cross7(a.scaled(s) + c, b);
    Vec rhs = s * ComplexOctonion::cross7(a, b) + ComplexOctonion::cross7(c, b);
    CHECK(lhs == rhs);
  }
  // real octonions have vanishing cross with real octonions
  ComplexOctonion r0 = ComplexOctonion::unit(0).scaled(gq(3));
  ComplexOctonion r1 = ComplexOctonion::unit(0).scaled(gq(-2));
  CHECK(is_zero_vec(ComplexOctonion::cross7(r0, r1)));
}

TEST_CASE("gamma10: printed diagonal structure and the square-zero family") {
  Rng rng(41);
  ComplexOctonion q = sample_octonion(rng);
  OctoPair p{q, ComplexOctonion{}};
  Vec diag = gamma10(p, p);
  for (unsigned k = 0; k < 8; ++k) CHECK(diag[k].is_zero());
  CHECK(diag[8] == (q * q.conj()).trace());
  CHECK(diag[9] == (q * q.conj()).trace());

  // witness family: Q a zero divisor, Q' = conj(Q) x
  for (int t = 0; t < 25; ++t) {
    ComplexOctonion zq = sample_zero_divisor(rng);
    ComplexOctonion x = sample_octonion(rng);
    OctoPair w{zq, zq.conj() * x};
    CHECK(is_zero_vec(gamma10(w, w)));
    CHECK((zq * (zq.conj() * x)).is_zero());
  }

  // symmetry
  for (int t = 0; t < 10; ++t) {
    OctoPair a{sample_octonion(rng), sample_octonion(rng)};
    OctoPair b{sample_octonion(rng), sample_octonion(rng)};
    CHECK(gamma10(a, b) == gamma10(b, a));
  }
}

TEST_CASE("octonionic gammas satisfy the Clifford relations") {
  for (unsigned n : {7u, 8u, 9u, 10u}) {
    auto g = octonion_gammas(n);
    REQUIRE(g.size() == n);
    ExactMatrix two_id = ExactMatrix::identity(g[0].dim()).scaled(gq(2));
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = i; j < n; ++j) {
        ExactMatrix anti = (g[i] * g[j]).to_matrix() + (g[j] * g[i]).to_matrix();
        if (i == j) {
          CHECK(anti == two_id);
        } else {
          CHECK(anti.is_zero());
        }
      }
  }
}

TEST_CASE("octonionic and tensor models are exactly intertwined") {
  for (unsigned n : {7u, 8u, 9u, 10u}) {
    const ExactMatrix& t = octonion_to_clifford(n);
    const CliffordModel& m = clifford_model(n);
    auto oct = octonion_gammas(n);
    CHECK(t.inverse().has_value());
    for (unsigned i = 0; i < n; ++i) CHECK(t * oct[i].to_matrix() == m.gamma_matrix(i + 1) * t);
  }
}

TEST_CASE("pair coordinates in dimension 10 fill one chirality sector") {
  Rng rng(3);
  const CliffordModel& m10 = clifford_model(10);
  const ExactMatrix& t = octonion_to_clifford(10);
  ChiralitySector found = ChiralitySector::full;
  for (int k = 0; k < 8; ++k) {
    OctoPair p{sample_octonion(rng), sample_octonion(rng)};
    Vec transported = t.apply(octo_spinor_coords(10, p));
    ChiralitySector s = sector_of(m10, transported);
    CHECK(s != ChiralitySector::full);
    if (found == ChiralitySector::full) found = s;
    CHECK(s == found);
  }
}

TEST_CASE("closed-form pairings match the tensor-model pairing up to a fixed change of basis") {
  Rng rng(7);
  struct Case {
    unsigned n;
    bool pairs;  // arguments are OctoPairs (else single octonions)
  };
  for (Case c : {Case{7, false}, Case{8, true}, Case{9, true}, Case{10, true}}) {
    const CliffordModel& m = clifford_model(c.n);
    const ExactMatrix& t = octonion_to_clifford(c.n);
    // Solve M * g_oct = g_tensor for one matrix M from many samples; the
    // system is consistent and M invertible iff the closed form is a valid
    // equivariant pairing in the model's coordinates.
    std::vector<Vec> eqs;  // rows: (g_oct part, one-hot component) -> value
    ExactMatrix sys(0, 0);
    std::vector<Vec> rows;
    Vec rhs_all;
    for (int s = 0; s < 40; ++s) {
      OctoPair p{sample_octonion(rng, 2), c.n == 7 ? ComplexOctonion{} : sample_octonion(rng, 2)};
      OctoPair q{sample_octonion(rng, 2), c.n == 7 ? ComplexOctonion{} : sample_octonion(rng, 2)};
      Vec g_oct;
      if (c.n == 7) {
        g_oct = ComplexOctonion::cross7(p.a, q.a);
      } else {
        g_oct = gamma10(p, q);
        g_oct.resize(c.n);
      }
      Vec g_ten = m.vector_pairing(t.apply(octo_spinor_coords(c.n, p)),
                                   t.apply(octo_spinor_coords(c.n, q)));
      // rows for each target component mu: sum_k M[mu][k] g_oct[k] = g_ten[mu]
      for (unsigned mu = 0; mu < c.n; ++mu) {
        Vec row(c.n * c.n);
        for (unsigned k = 0; k < c.n; ++k) row[mu * c.n + k] = g_oct[k];
        rows.push_back(row);
        rhs_all.push_back(g_ten[mu]);
      }
    }
    ExactMatrix a = ExactMatrix::from_rows(rows);
    auto sol = a.solve(rhs_all);
    REQUIRE(sol.has_value());
    ExactMatrix mmat(c.n, c.n);
    for (unsigned r = 0; r < c.n; ++r)
      for (unsigned k = 0; k < c.n; ++k) mmat.at(r, k) = (*sol)[r * c.n + k];
    CHECK(mmat.inverse().has_value());
  }
}

TEST_CASE("projection remark: the 9- and 8-dimensional pairings are truncations") {
  Rng rng(19);
  for (int t = 0; t < 15; ++t) {
    OctoPair p{sample_octonion(rng), sample_octonion(rng)};
    OctoPair q{sample_octonion(rng), sample_octonion(rng)};
    Vec ten = gamma10(p, q);
    Vec nine = gamma9(p, q);
    Vec eight = gamma8(p, q);
    for (unsigned k = 0; k < 9; ++k) CHECK(nine[k] == ten[k]);
    for (unsigned k = 0; k < 8; ++k) CHECK(eight[k] == ten[k]);
  }
}

TEST_CASE("octonionic invariants on the catalogue representatives") {
  Rng rng(91);

  // dim 8, rank (1,0) with nonzero norm: topological
  ComplexOctonion q8 = sample_octonion(rng);
  while (q8.norm().is_zero()) q8 = sample_octonion(rng);
  auto inv8 = octonionic_invariants(8, OctoPair{q8, ComplexOctonion{}});
  CHECK(inv8.square_zero);
  CHECK(inv8.image_dim == 8);
  CHECK(!inv8.pure);

  // dim 8, pure rank (1,0): holomorphic
  auto inv8p = octonionic_invariants(8, OctoPair{sample_zero_divisor(rng), ComplexOctonion{}});
  CHECK(inv8p.square_zero);
  CHECK(inv8p.image_dim == 4);
  CHECK(inv8p.pure);

  // dim 9: square-zero pairs have 5 invariant directions and are pure
  for (int t = 0; t < 10; ++t) {
    ComplexOctonion z = sample_zero_divisor(rng);
    OctoPair p{z, z.conj() * sample_octonion(rng)};
    auto inv9 = octonionic_invariants(9, p);
    CHECK(inv9.square_zero);
    CHECK(inv9.image_dim == 5);
    CHECK(inv9.pure);
    auto inv10 = octonionic_invariants(10, p);
    CHECK(inv10.square_zero);
    CHECK(inv10.image_dim == 5);
    CHECK(inv10.pure);
  }

  // dim 9 equivalence: QQ' = 0 and N(Q) = N(Q') iff square-zero as written
  for (int t = 0; t < 10; ++t) {
    ComplexOctonion z = sample_zero_divisor(rng);
    OctoPair p{z, z.conj() * sample_octonion(rng)};
    bool lhs = (p.a * p.b).is_zero() && p.a.norm() == p.b.norm();
    CHECK(lhs == octonionic_invariants(9, p).square_zero);
  }

  // dim 7: rank 1 pure has 4 directions, impure is topological
  ComplexOctonion s7 = sample_zero_divisor(rng);
  auto inv7 = octonionic_invariants(7, OctoPair{s7, ComplexOctonion{}});
  CHECK(inv7.square_zero);
  CHECK(inv7.image_dim == 4);
  CHECK(inv7.pure);
  ComplexOctonion s7i = sample_octonion(rng);
  while (s7i.norm().is_zero()) s7i = sample_octonion(rng);
  auto inv7i = octonionic_invariants(7, OctoPair{s7i, ComplexOctonion{}});
  CHECK(inv7i.square_zero);
  CHECK(inv7i.image_dim == 7);
  CHECK(!inv7i.pure);
}

TEST_CASE("cross-model invariants agree through the intertwiner") {
  Rng rng(101);

  auto clifford_square_zero = [](unsigned n, const Vec& full) {
    const CliffordModel& m = clifford_model(n);
    if (n == 8) {
      Vec plus = full, minus = full;
      for (auto idx : m.sector_indices(ChiralitySector::minus)) plus[idx] = Scalar{};
      for (auto idx : m.sector_indices(ChiralitySector::plus)) minus[idx] = Scalar{};
      return is_zero_vec(m.vector_pairing(plus, minus));
    }
    return is_zero_vec(m.vector_pairing(full, full));
  };

  for (unsigned n : {8u, 9u, 10u}) {
    const CliffordModel& m = clifford_model(n);
    const ExactMatrix& t = octonion_to_clifford(n);
    for (int trial = 0; trial < 25; ++trial) {
      OctoPair p;
      switch (trial % 4) {
        case 0:
          p = OctoPair{sample_octonion(rng, 2), sample_octonion(rng, 2)};
          break;
        case 1: {
          ComplexOctonion z = sample_zero_divisor(rng);
          p = OctoPair{z, z.conj() * sample_octonion(rng, 2)};
          break;
        }
        case 2:
          p = OctoPair{sample_octonion(rng, 2), ComplexOctonion{}};
          break;
        default: {
          ComplexOctonion z = sample_zero_divisor(rng);
          p = OctoPair{z, ComplexOctonion{}};
          break;
        }
      }
      if (p.a.is_zero() && p.b.is_zero()) continue;
      auto inv = octonionic_invariants(n, p);
      Vec transported = t.apply(octo_spinor_coords(n, p));
      CHECK(inv.square_zero == clifford_square_zero(n, transported));
      CHECK(inv.image_dim == span_rank(m.pairing_image(transported), n));
    }
  }
}
