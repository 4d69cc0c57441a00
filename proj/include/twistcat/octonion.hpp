#ifndef TWISTCAT_OCTONION_HPP
#define TWISTCAT_OCTONION_HPP

#include <array>
#include <vector>

#include "twistcat/clifford.hpp"
#include "twistcat/matrix.hpp"
#include "twistcat/rng.hpp"

namespace twistcat {

/// Complexified octonion over the basis (1, e1..e7).
///
/// Multiplication follows the cyclic Fano convention with lines
///   (1,2,4) (2,3,5) (3,4,6) (4,5,7) (5,6,1) (6,7,2) (7,1,3):
/// for each line (a,b,c), ea eb = ec cyclically, anticommuting otherwise,
/// and ek^2 = -1. Every sign below derives from this table.
class ComplexOctonion {
public:
  ComplexOctonion() = default;
  explicit ComplexOctonion(std::array<Scalar, 8> c) : c_(std::move(c)) {}
  static ComplexOctonion unit(unsigned k);  // k = 0 is 1, k = 1..7 is e_k
  static ComplexOctonion from_vec(const Vec& v);

  const Scalar& operator[](unsigned k) const { return c_[k]; }
  Scalar& operator[](unsigned k) { return c_[k]; }
  Vec to_vec() const { return Vec(c_.begin(), c_.end()); }

  bool is_zero() const;
  ComplexOctonion operator+(const ComplexOctonion& o) const;
  ComplexOctonion operator-(const ComplexOctonion& o) const;
  ComplexOctonion operator*(const ComplexOctonion& o) const;
  ComplexOctonion scaled(const Scalar& s) const;
  bool operator==(const ComplexOctonion& o) const { return c_ == o.c_; }

  ComplexOctonion conj() const;
  Scalar norm() const;   // N(a) = a conj(a), a scalar
  Scalar trace() const;  // tr(a) = a + conj(a), a scalar

  /// Imaginary part of x conj(y): antisymmetric, the 7-dimensional
  /// vector-valued spinor pairing (components e1..e7).
  static Vec cross7(const ComplexOctonion& x, const ComplexOctonion& y);

  ExactMatrix left_mult_matrix() const;   // x -> a x
  ExactMatrix right_mult_matrix() const;  // x -> x a

private:
  std::array<Scalar, 8> c_{};
};

/// Spinor of S+ in ten dimensions: a pair of complexified octonions.
struct OctoPair {
  ComplexOctonion a, b;
};

/// The 10-dimensional vector-valued pairing on pairs of octonions. The
/// octonionic block carries a conjugation so that the form is symmetric and
/// its diagonal vanishes exactly on { q.a * q.b = 0 }:
///   Gamma10(p, q) = ( conj(p.b) conj(q.a) + conj(q.b) conj(p.a),
///                     tr(p.a conj(q.a)) - tr(p.b conj(q.b)),
///                     tr(p.a conj(q.a)) + tr(p.b conj(q.b)) ).
Vec gamma10(const OctoPair& p, const OctoPair& q);
Vec gamma9(const OctoPair& p, const OctoPair& q);   // first 9 components
Vec gamma8(const OctoPair& p, const OctoPair& q);   // first 8 components

struct OctoInvariants {
  bool square_zero;
  std::size_t image_dim;
  bool pure;
};

/// Supercharge invariants computed purely inside the octonionic model.
/// n = 8, 9, 10: data is the pair; n = 7: the pair are the two spinor
/// components of Q = s1 w1 + s2 w2 over a symplectic basis of W.
OctoInvariants octonionic_invariants(unsigned n, const OctoPair& q);

/// Octonionic Clifford representations (entries in {0, +-1, +-i}):
/// n = 7 acts on O by i L_{e_k}; n = 8 on O + O by off-diagonal left
/// multiplications; n = 9 adds the grading; n = 10 doubles once more.
std::vector<PhasedPerm> octonion_gammas(unsigned n);

/// Intertwiner from the octonionic representation to the tensor-product
/// model of the same dimension (unique up to scale; cached).
const ExactMatrix& octonion_to_clifford(unsigned n);

/// Coordinates of a pair inside the octonionic representation space:
/// n = 7 takes a single octonion (q.a); n = 8, 9 concatenate; n = 10 embeds
/// the pair into the chirality sector of the 32-dimensional space.
Vec octo_spinor_coords(unsigned n, const OctoPair& q);

/// Deterministic zero divisor c (1 + i u) with u a rational point of the
/// unit 6-sphere of imaginary octonions; N = 0, generically nonzero.
ComplexOctonion sample_zero_divisor(Rng& rng);
ComplexOctonion sample_octonion(Rng& rng, long bound = 3);

}  // namespace twistcat

#endif
