#ifndef TWISTCAT_SUSY_HPP
#define TWISTCAT_SUSY_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "twistcat/clifford.hpp"
#include "twistcat/matrix.hpp"

namespace twistcat {

struct IllegalAux : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class AuxKind { symmetric, symplectic, dual_pair };

/// Auxiliary space data. Symmetric pairings are kept in hyperbolic normal
/// form (pairs h(a_k, b_k) = 1, plus one unit vector when the dimension is
/// odd) so isotropic vectors exist over Q; symplectic ones in standard
/// blocks. Two-sector algebras (n = 2, 6, 10 mod 8) carry independent
/// blocks W+ and W-.
struct AuxSpace {
  AuxKind kind;
  bool two_sector = false;
  unsigned script_n_plus = 0;   // the printed script-N (pair count for symplectic)
  unsigned script_n_minus = 0;  // used only when two_sector
  ExactMatrix form_plus;        // pairing on W+ (empty for dual_pair)
  ExactMatrix form_minus;       // pairing on W- (two-sector only)

  std::size_t dim_plus() const;
  std::size_t dim_minus() const;  // dual_pair: dim of W*; one-sector: 0
  std::string describe() const;

  static AuxSpace symmetric(unsigned script_n);
  static AuxSpace symplectic(unsigned script_n);
  static AuxSpace dual(unsigned script_n);
  static AuxSpace two_symmetric(unsigned np, unsigned nm);
  static AuxSpace two_symplectic(unsigned np, unsigned nm);

  /// The legal auxiliary space for dimension n with the given counts.
  static AuxSpace standard_for(unsigned n, unsigned np, unsigned nm = 0);
};

ExactMatrix hyperbolic_form(unsigned dim);
ExactMatrix symplectic_form(unsigned dim);

/// An element of the R-symmetry Lie algebra: a matrix acting on W+ (and on
/// W- for two-sector algebras; for dual pairs the minus block acts on W* as
/// minus the transpose automatically).
struct RElement {
  ExactMatrix plus;
  ExactMatrix minus;  // two-sector only
};

enum class ClassLabel { zero, not_square_zero, holomorphic, holomorphic_topological, topological };

std::string label_name(ClassLabel l);

struct TwistClass {
  ClassLabel label = ClassLabel::zero;
  std::vector<std::size_t> rank;  // one entry (odd n) or (plus, minus)
  std::size_t invariant_directions = 0;
  std::optional<bool> pure;
  std::map<std::string, std::string> extra;

  bool operator==(const TwistClass&) const = default;
};

class SusyAlgebra;

struct Supercharge {
  std::shared_ptr<const SusyAlgebra> algebra;
  Vec coeffs;
};

/// Supersymmetry algebra on Sigma built from the Clifford pairing of the
/// dimension and the auxiliary pairing, with the V-valued symmetric bracket
/// assembled as explicit matrices B_mu.
class SusyAlgebra {
public:
  SusyAlgebra(unsigned n, AuxSpace aux);

  unsigned n() const { return n_; }
  const AuxSpace& aux() const { return aux_; }
  const CliffordModel& model() const { return *model_; }
  std::size_t sigma_dim() const { return sigma_dim_; }
  std::size_t plus_block_dim() const { return plus_dim_; }

  const ExactMatrix& bracket_matrix(unsigned mu) const { return bracket_[mu - 1]; }

  Vec bracket(const Vec& q1, const Vec& q2) const;
  bool is_square_zero(const Vec& q) const { return is_zero_vec(bracket(q, q)); }

  /// Coefficient matrices of the maps S+* -> W+ / S-* -> W- (or S* -> W).
  ExactMatrix plus_coefficients(const Vec& q) const;   // dimW+ x dimS-sector
  ExactMatrix minus_coefficients(const Vec& q) const;  // two-block algebras

  std::vector<std::size_t> rank(const Vec& q) const;
  std::vector<Vec> image_subspace(const Vec& q) const;  // S_Q in V
  std::size_t invariant_directions(const Vec& q) const;

  TwistClass classify(const Vec& q) const;

  /// Odd abelian subalgebra mapped bijectively onto S_Q by [Q,-], or
  /// nullopt when neither the structural construction nor the search
  /// succeeds. Every returned basis replays its postconditions exactly.
  std::optional<std::vector<Vec>> abelian_section(const Vec& q) const;

  /// Supercharge in dimension n-1 under the documented identifications of
  /// spinors and auxiliary spaces.
  Supercharge reduce_dimension(const Vec& q) const;

  // -- actions on Sigma ----------------------------------------------------

  ExactMatrix spin_action(unsigned i, unsigned j) const;   // so(n) on Sigma
  ExactMatrix r_action(const RElement& g) const;           // g_R on Sigma
  std::vector<RElement> r_symmetry_basis() const;

  /// so(n) on V: (r_ij v)_i = v_j, (r_ij v)_j = -v_i.
  ExactMatrix vector_action(unsigned i, unsigned j) const;

  // -- assembly helpers ----------------------------------------------------

  /// Supercharge from block coefficient matrices (dimW x sector-dim each).
  Vec from_blocks(const ExactMatrix& plus, const ExactMatrix& minus) const;

  /// Basis spinors of the sector blocks in Sigma coordinates.
  std::size_t sigma_index(bool minus_block, std::size_t s, std::size_t w) const;

  ChiralitySector plus_sector() const { return plus_sector_; }
  ChiralitySector minus_sector() const { return minus_sector_; }

private:
  void build_bracket();
  std::optional<std::vector<Vec>> structural_section(const Vec& q) const;
  std::optional<std::vector<Vec>> greedy_section(const Vec& q) const;

  unsigned n_;
  AuxSpace aux_;
  const CliffordModel* model_;
  std::size_t sigma_dim_, plus_dim_, minus_dim_;
  std::size_t s_plus_dim_, s_minus_dim_, w_plus_dim_, w_minus_dim_;
  ChiralitySector plus_sector_ = ChiralitySector::full;
  ChiralitySector minus_sector_ = ChiralitySector::full;
  std::vector<ExactMatrix> bracket_;
};

/// Shared registry (immutable algebras), keyed by (n, script-N parameters);
/// the returned pointer is stable for the lifetime of the process.
std::shared_ptr<const SusyAlgebra> susy_algebra(unsigned n, unsigned np, unsigned nm = 0);

// -- independent square-zero oracles (used by the test suites) -------------

/// n = 1,2,3 mod 8: the image of S* -> W is totally isotropic.
bool oracle_isotropic_image(const SusyAlgebra& alg, const Vec& q);
/// n = 0,4 mod 8: the natural pairing of W_{Q-} against W_{Q+} vanishes.
bool oracle_dual_pairing_zero(const SusyAlgebra& alg, const Vec& q);
/// n = 5 mod 8: the pushforward of the W* bivector is proportional to the
/// spinor bivector.
bool oracle_bivector_proportional(const SusyAlgebra& alg, const Vec& q);
/// n = 6 mod 8, rank (2,2): exactness with matched volume forms.
bool oracle_volume_exact(const SusyAlgebra& alg, const Vec& q);

}  // namespace twistcat

#endif
