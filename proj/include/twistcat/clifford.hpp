#ifndef TWISTCAT_CLIFFORD_HPP
#define TWISTCAT_CLIFFORD_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twistcat/matrix.hpp"
#include "twistcat/phased_perm.hpp"

namespace twistcat {

struct InternalConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

enum class ChiralitySector { full, plus, minus };

enum class GammaKind {
  sym2,        // Gamma : Sym^2(S) -> V         (n = 1,2,3 mod 8; per sector for n = 2 mod 8)
  wedge2,      // Gamma : Wedge^2(S) -> V       (n = 5,6,7 mod 8; per sector for n = 6 mod 8)
  plus_minus,  // Gamma : S+ (x) S- -> V        (n = 0,4 mod 8)
};

struct PairingKind {
  GammaKind kind;
  int conj_sign;  // +1: C gamma_i C^-1 = gamma_i^T, -1: the minus-sign intertwiner
  std::string describe() const;
};

/// Gamma matrices, chirality and spinor pairings for Cl(n, C), n = 1..10.
///
/// The construction is the usual Pauli tensor ladder: for n = 2m,
///   gamma_{2k-1} = s3^(k-1) (x) s1 (x) 1^(m-k),
///   gamma_{2k}   = s3^(k-1) (x) s2 (x) 1^(m-k),
/// and for n = 2m+1 additionally gamma_n = s3^m. All entries lie in
/// {0, +-1, +-i}. Chirality is i^{n/2} gamma_1..gamma_n (squares to +1).
class CliffordModel {
public:
  explicit CliffordModel(unsigned n);

  unsigned n() const { return n_; }
  std::size_t spinor_dim() const { return dim_; }
  std::size_t sector_dim(ChiralitySector s) const;

  const PhasedPerm& gamma(unsigned i) const;         // i = 1..n
  ExactMatrix gamma_matrix(unsigned i) const;
  const PhasedPerm* chirality() const;               // null for odd n
  ExactMatrix chirality_matrix() const;

  /// Intertwiner with C gamma_i C^-1 = sign * gamma_i^T, normalized so the
  /// first nonzero entry (row-major) is 1. Absent when no such intertwiner
  /// exists (odd n admits exactly one of the two signs).
  const std::optional<ExactMatrix>& conj_plus() const { return conj_plus_; }
  const std::optional<ExactMatrix>& conj_minus() const { return conj_minus_; }

  /// The intertwiner selected for the spinor pairings (Gamma and <,>).
  const ExactMatrix& pairing_intertwiner() const { return pairing_c_; }
  const PairingKind& pairing_kind() const { return pairing_kind_; }

  /// +1/-1 eigenvalue of chirality at basis index a (raw s3^m grading).
  int raw_grading(std::size_t a) const { return raw_sign_[a]; }
  /// Basis indices of the given model-chirality sector, increasing.
  const std::vector<std::size_t>& sector_indices(ChiralitySector s) const;

  // -- spinor helpers -----------------------------------------------------

  Vec to_full(const Vec& coeffs, ChiralitySector s) const;
  Vec from_full(const Vec& full, ChiralitySector s) const;
  bool in_sector(const Vec& full, ChiralitySector s) const;

  /// Clifford action of the vector v on a full-sector spinor.
  Vec clifford_apply(const Vec& v, const Vec& spinor) const;

  /// rho(r_ij) x = (1/2) gamma_i gamma_j x  (i != j), infinitesimal rotation.
  Vec spin_apply(unsigned i, unsigned j, const Vec& spinor) const;
  ExactMatrix spin_generator(unsigned i, unsigned j) const;

  /// <x, y> = x^T C y with the selected intertwiner.
  Scalar scalar_pairing(const Vec& x, const Vec& y) const;

  /// Gamma^mu(x, y) = x^T C gamma^mu y, componentwise in mu.
  Vec vector_pairing(const Vec& x, const Vec& y) const;

  /// T_Q = { v : gamma(v) Q = 0 }, returned as a reduced basis.
  std::vector<Vec> nullspace(const Vec& spinor) const;

  /// S_Q = image of Gamma(Q, -) in V, returned as a reduced basis.
  std::vector<Vec> pairing_image(const Vec& spinor) const;

  /// Trace coefficient of gamma_I in the Clifford expansion of Q (x) Q.
  /// Subsets I are ordered lexicographically within each cardinality p.
  /// For odd n only p <= (n-1)/2 are independent (the rest are duals).
  std::vector<std::vector<Scalar>> fierz_components(const Vec& spinor) const;

  /// Purity by nullspace dimension and by the Fierz-vanishing criterion
  /// (through the even-dimensional lift when n is odd). The two routes must
  /// agree; disagreement throws InternalConsistencyError.
  bool is_pure(const Vec& spinor, ChiralitySector declared_sector) const;

  // -- dimensional ladder -------------------------------------------------

  /// n odd: S^n -> S^(n+1), landing in one chirality sector; equivariant for
  /// so(n). Coordinates: iota(x)[2a+b] = x[a] iff raw sign of a is (-1)^b.
  Vec embed_in_even(const Vec& spinor) const;

  /// n even: inverse sector identifications S^n_{raw +-} -> S^(n-1).
  Vec restrict_raw_plus(const Vec& full) const;
  Vec restrict_raw_minus(const Vec& full) const;

private:
  void build_conjugation_intertwiners();
  void select_pairing();

  unsigned n_;
  std::size_t dim_;
  std::vector<PhasedPerm> gammas_;
  std::optional<PhasedPerm> chirality_;
  std::vector<int> raw_sign_;
  std::vector<std::size_t> plus_idx_, minus_idx_, full_idx_;
  std::optional<ExactMatrix> conj_plus_, conj_minus_;
  ExactMatrix pairing_c_;
  PairingKind pairing_kind_{};
};

/// Shared, thread-safe registry of models (immutable after construction).
const CliffordModel& clifford_model(unsigned n);

/// Schur projector onto intertwiners T rho1(g) = rho2(g) T for two
/// representations of the gamma group, averaged over products of the
/// generator set; returns the normalized intertwiner or nullopt when the
/// representations are inequivalent.
std::optional<ExactMatrix> gamma_intertwiner(const std::vector<PhasedPerm>& rho1,
                                             const std::vector<PhasedPerm>& rho2);

/// Normalizes so the first nonzero entry (row-major) is 1.
ExactMatrix normalize_first_entry(const ExactMatrix& m);

struct Spinor {
  unsigned n;
  ChiralitySector sector;
  Vec coeffs;  // sector coordinates (full length for `full`)
};

/// Gamma(Q1, Q2) with the sector rules of the dimension: opposite Weyl
/// sectors for n = 0,4 mod 8, a common Weyl sector for n = 2,6 mod 8, full
/// spinors otherwise. Throws std::invalid_argument on a sector mismatch.
Vec gamma_pairing(const CliffordModel& model, const Spinor& q1, const Spinor& q2);

/// Deterministic pure spinor in full coordinates: the first basis vector of
/// its sector moved by `transports` factors (1 + t gamma(u) gamma(v)) with
/// u, v isotropic and orthogonal, which stay inside the pure orbit.
Vec sample_pure_spinor(const CliffordModel& model, class Rng& rng, int transports = 3);

/// Random spinor with small integer coordinates (full coordinates).
Vec sample_spinor(const CliffordModel& model, class Rng& rng, long bound = 3);

/// Subsets of {1..n} of size p in lexicographic order.
std::vector<std::vector<unsigned>> index_subsets(unsigned n, unsigned p);

}  // namespace twistcat

#endif
