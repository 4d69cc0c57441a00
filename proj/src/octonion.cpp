#include "twistcat/octonion.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace twistcat {

namespace {

struct MulTable {
  // target index and sign of e_i e_j
  std::array<std::array<int, 8>, 8> idx{};
  std::array<std::array<int, 8>, 8> sign{};

  MulTable() {
    constexpr int lines[7][3] = {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7},
                                 {5, 6, 1}, {6, 7, 2}, {7, 1, 3}};
    for (int j = 0; j < 8; ++j) {
      idx[0][j] = j;
      sign[0][j] = 1;
      idx[j][0] = j;
      sign[j][0] = 1;
    }
    for (int k = 1; k < 8; ++k) {
      idx[k][k] = 0;
      sign[k][k] = -1;
    }
    for (const auto& l : lines) {
      const int a = l[0], b = l[1], c = l[2];
      auto put = [&](int x, int y, int z) {
        idx[x][y] = z;
        sign[x][y] = 1;
        idx[y][x] = z;
        sign[y][x] = -1;
      };
      put(a, b, c);
      put(b, c, a);
      put(c, a, b);
    }
  }
};

const MulTable& table() {
  static MulTable t;
  return t;
}

}  // namespace

ComplexOctonion ComplexOctonion::unit(unsigned k) {
  if (k > 7) throw std::invalid_argument("octonion basis index out of range");
  ComplexOctonion o;
  o.c_[k] = gq(1);
  return o;
}

ComplexOctonion ComplexOctonion::from_vec(const Vec& v) {
  if (v.size() != 8) throw std::invalid_argument("octonion needs 8 coefficients");
  ComplexOctonion o;
  for (unsigned k = 0; k < 8; ++k) o.c_[k] = v[k];
  return o;
}

bool ComplexOctonion::is_zero() const {
  for (const auto& e : c_)
    if (!e.is_zero()) return false;
  return true;
}

ComplexOctonion ComplexOctonion::operator+(const ComplexOctonion& o) const {
  ComplexOctonion r;
  for (unsigned k = 0; k < 8; ++k) r.c_[k] = c_[k] + o.c_[k];
  return r;
}

ComplexOctonion ComplexOctonion::operator-(const ComplexOctonion& o) const {
  ComplexOctonion r;
  for (unsigned k = 0; k < 8; ++k) r.c_[k] = c_[k] - o.c_[k];
  return r;
}

ComplexOctonion ComplexOctonion::operator*(const ComplexOctonion& o) const {
  const MulTable& t = table();
  ComplexOctonion r;
  for (unsigned a = 0; a < 8; ++a) {
    if (c_[a].is_zero()) continue;
    for (unsigned b = 0; b < 8; ++b) {
      if (o.c_[b].is_zero()) continue;
      Scalar term = c_[a] * o.c_[b];
      if (t.sign[a][b] < 0) term = -term;
      r.c_[t.idx[a][b]] += term;
    }
  }
  return r;
}

ComplexOctonion ComplexOctonion::scaled(const Scalar& s) const {
  ComplexOctonion r;
  for (unsigned k = 0; k < 8; ++k) r.c_[k] = c_[k] * s;
  return r;
}

ComplexOctonion ComplexOctonion::conj() const {
  ComplexOctonion r;
  r.c_[0] = c_[0];
  for (unsigned k = 1; k < 8; ++k) r.c_[k] = -c_[k];
  return r;
}

Scalar ComplexOctonion::norm() const {
  Scalar n;
  for (unsigned k = 0; k < 8; ++k) n += c_[k] * c_[k];
  return n;
}

Scalar ComplexOctonion::trace() const { return c_[0] + c_[0]; }

Vec ComplexOctonion::cross7(const ComplexOctonion& x, const ComplexOctonion& y) {
  ComplexOctonion p = x * y.conj();
  Vec v(7);
  for (unsigned k = 1; k < 8; ++k) v[k - 1] = p[k];
  return v;
}

ExactMatrix ComplexOctonion::left_mult_matrix() const {
  const MulTable& t = table();
  ExactMatrix m(8, 8);
  for (unsigned a = 0; a < 8; ++a)
    for (unsigned b = 0; b < 8; ++b) {
      if (c_[a].is_zero()) continue;
      Scalar term = t.sign[a][b] < 0 ? -c_[a] : c_[a];
      m.at(t.idx[a][b], b) += term;
    }
  return m;
}

ExactMatrix ComplexOctonion::right_mult_matrix() const {
  const MulTable& t = table();
  ExactMatrix m(8, 8);
  for (unsigned b = 0; b < 8; ++b)
    for (unsigned a = 0; a < 8; ++a) {
      if (c_[b].is_zero()) continue;
      Scalar term = t.sign[a][b] < 0 ? -c_[b] : c_[b];
      m.at(t.idx[a][b], a) += term;
    }
  return m;
}

Vec gamma10(const OctoPair& p, const OctoPair& q) {
  ComplexOctonion oct = p.b.conj() * q.a.conj() + q.b.conj() * p.a.conj();
  Scalar ta = (p.a * q.a.conj()).trace();
  Scalar tb = (p.b * q.b.conj()).trace();
  Vec out(10);
  for (unsigned k = 0; k < 8; ++k) out[k] = oct[k];
  out[8] = ta - tb;
  out[9] = ta + tb;
  return out;
}

Vec gamma9(const OctoPair& p, const OctoPair& q) {
  Vec v = gamma10(p, q);
  v.resize(9);
  return v;
}

Vec gamma8(const OctoPair& p, const OctoPair& q) {
  Vec v = gamma10(p, q);
  v.resize(8);
  return v;
}

namespace {

std::size_t bracket_image_dim_pairs(unsigned n, const OctoPair& q) {
  // rank of phi -> Gamma_n(q, phi) over a basis of pairs
  std::vector<Vec> rows;
  for (unsigned slot = 0; slot < 2; ++slot)
    for (unsigned k = 0; k < 8; ++k) {
      OctoPair basis;
      (slot == 0 ? basis.a : basis.b) = ComplexOctonion::unit(k);
      Vec g = gamma10(q, basis);
      g.resize(n);
      rows.push_back(g);
    }
  // rows span the image as phi varies
  return span_rank(rows, n);
}

}  // namespace

OctoInvariants octonionic_invariants(unsigned n, const OctoPair& q) {
  OctoInvariants out{};
  switch (n) {
    case 7: {
      // Q = s1 w1 + s2 w2 over a symplectic basis; bracket diagonal is
      // 2 cross7(s1, s2) and the image is spanned by the two cross maps.
      out.square_zero = is_zero_vec(ComplexOctonion::cross7(q.a, q.b));
      std::vector<Vec> rows;
      for (unsigned k = 0; k < 8; ++k) {
        ComplexOctonion t = ComplexOctonion::unit(k);
        if (!q.a.is_zero()) rows.push_back(ComplexOctonion::cross7(q.a, t));
        if (!q.b.is_zero()) rows.push_back(ComplexOctonion::cross7(q.b, t));
      }
      out.image_dim = span_rank(rows, 7);
      bool pure = true;
      if (!q.a.is_zero() && !q.a.norm().is_zero()) pure = false;
      if (!q.b.is_zero() && !q.b.norm().is_zero()) pure = false;
      out.pure = pure;
      break;
    }
    case 8: {
      out.square_zero = (q.a * q.b).is_zero();
      out.image_dim = bracket_image_dim_pairs(8, q);
      bool pure = true;
      if (!q.a.is_zero() && !q.a.norm().is_zero()) pure = false;
      if (!q.b.is_zero() && !q.b.norm().is_zero()) pure = false;
      out.pure = pure;
      break;
    }
    case 9: {
      out.square_zero = (q.a * q.b).is_zero() && q.a.norm() == q.b.norm();
      out.image_dim = bracket_image_dim_pairs(9, q);
      out.pure = (q.a * q.b).is_zero() && q.a.norm().is_zero() && q.b.norm().is_zero();
      break;
    }
    case 10: {
      out.square_zero = (q.a * q.b).is_zero() && q.a.norm().is_zero() && q.b.norm().is_zero();
      out.image_dim = bracket_image_dim_pairs(10, q);
      out.pure = out.square_zero;
      break;
    }
    default:
      throw std::invalid_argument("octonionic invariants cover dimensions 7..10");
  }
  return out;
}

namespace {

PhasedPerm left_mult_perm(unsigned k) {
  // L_{e_k} as a phased permutation
  const MulTable& t = table();
  PhasedPerm p(8);
  for (unsigned b = 0; b < 8; ++b)
    p.set(b, static_cast<std::uint32_t>(t.idx[k][b]), t.sign[k][b] < 0 ? 2 : 0);
  return p;
}

PhasedPerm block_off_diagonal(const PhasedPerm& upper, const PhasedPerm& lower) {
  // [[0, upper],[lower, 0]] on C^8 + C^8
  PhasedPerm p(16);
  for (unsigned j = 0; j < 8; ++j) {
    p.set(j, lower.perm(j) + 8, lower.phase(j));
    p.set(j + 8, upper.perm(j), upper.phase(j));
  }
  return p;
}

}  // namespace

std::vector<PhasedPerm> octonion_gammas(unsigned n) {
  std::vector<PhasedPerm> g;
  switch (n) {
    case 7:
      for (unsigned k = 1; k <= 7; ++k) g.push_back(left_mult_perm(k).scaled_by_i(1));
      // flip the volume element onto the tensor model's Clifford irrep
      g.back() = g.back().negated();
      return g;
    case 8:
      for (unsigned k = 0; k < 8; ++k) {
        PhasedPerm lk = left_mult_perm(k);
        PhasedPerm lk_conj = k == 0 ? lk : lk.negated();  // conj(e_k) = -e_k for k >= 1
        g.push_back(block_off_diagonal(lk_conj, lk));
      }
      return g;
    case 9: {
      g = octonion_gammas(8);
      PhasedPerm grading(16);
      for (unsigned j = 0; j < 16; ++j) grading.set(j, j, j < 8 ? 0 : 2);
      g.push_back(grading);
      return g;
    }
    case 10: {
      auto nine = octonion_gammas(9);
      for (const auto& gm : nine) g.push_back(gm.tensor(pauli1()));
      PhasedPerm id16 = PhasedPerm::identity(16);
      g.push_back(id16.tensor(pauli2()));
      return g;
    }
    default:
      throw std::invalid_argument("octonionic gammas cover dimensions 7..10");
  }
}

const ExactMatrix& octonion_to_clifford(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, ExactMatrix> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<PhasedPerm> tensor_side;
    const CliffordModel& m = clifford_model(n);
    for (unsigned i = 1; i <= n; ++i) tensor_side.push_back(m.gamma(i));
    auto t = gamma_intertwiner(octonion_gammas(n), tensor_side);
    if (!t) throw InternalConsistencyError("octonionic and tensor Clifford models must be equivalent");
    it = cache.emplace(n, *t).first;
  }
  return it->second;
}

Vec octo_spinor_coords(unsigned n, const OctoPair& q) {
  // The second slot carries an octonionic conjugation: with it, the
  // representation-theoretic square-zero locus is exactly { q.a * q.b = 0 }
  // in pair coordinates, matching gamma10.
  switch (n) {
    case 7:
      if (!q.b.is_zero()) throw std::invalid_argument("dimension 7 spinors are single octonions");
      return q.a.to_vec();
    case 8:
    case 9: {
      Vec v = q.a.to_vec();
      Vec w = q.b.conj().to_vec();
      v.insert(v.end(), w.begin(), w.end());
      return v;
    }
    case 10: {
      // fill the chirality sector supported on even slots
      Vec v(32);
      ComplexOctonion bc = q.b.conj();
      for (unsigned a = 0; a < 8; ++a) v[2 * a] = q.a[a];
      for (unsigned a = 0; a < 8; ++a) v[2 * (a + 8)] = bc[a];
      return v;
    }
    default:
      throw std::invalid_argument("octonionic spinor coordinates cover dimensions 7..10");
  }
}

ComplexOctonion sample_octonion(Rng& rng, long bound) {
  ComplexOctonion o;
  for (unsigned k = 0; k < 8; ++k) o[k] = rng.small_gaussian(bound);
  return o;
}

ComplexOctonion sample_zero_divisor(Rng& rng) {
  // u = ((1 - N(w)) e1 + 2w) / (1 + N(w)) is a rational unit imaginary
  // octonion for any rational w in span(e2..e7).
  Rational nw(0);
  std::array<Rational, 6> w;
  for (auto& x : w) {
    x = Rational(rng.small_int(2), rng.range(1, 2));
    nw += x * x;
  }
  Rational denom = 1 + nw;
  ComplexOctonion u;
  u[1] = GaussianRational((1 - nw) / denom);
  for (unsigned k = 0; k < 6; ++k) u[k + 2] = GaussianRational(2 * w[k] / denom);

  ComplexOctonion one_iu = ComplexOctonion::unit(0) + u.scaled(GaussianRational::i());
  for (int attempt = 0; attempt < 16; ++attempt) {
    ComplexOctonion c = sample_octonion(rng, 2);
    ComplexOctonion s = one_iu * c;
    if (!s.is_zero()) return s;
  }
  return one_iu;
}

}  // namespace twistcat
