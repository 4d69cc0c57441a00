#ifndef TWISTCAT_PHASED_PERM_HPP
#define TWISTCAT_PHASED_PERM_HPP

#include <cstdint>
#include <vector>

#include "twistcat/matrix.hpp"

namespace twistcat {

/// Monomial matrix with phases in {1, i, -1, -i}: P e_j = i^phase[j] e_perm[j].
/// Every gamma matrix of the tensor-product construction, every product of
/// gammas and the octonionic multiplication operators have this shape, which
/// keeps the Clifford bookkeeping at O(dim) per product.
class PhasedPerm {
public:
  PhasedPerm() = default;
  explicit PhasedPerm(std::size_t dim) : perm_(dim), phase_(dim, 0) {
    for (std::size_t j = 0; j < dim; ++j) perm_[j] = static_cast<std::uint32_t>(j);
  }

  static PhasedPerm identity(std::size_t dim) { return PhasedPerm(dim); }

  std::size_t dim() const { return perm_.size(); }
  std::uint32_t perm(std::size_t j) const { return perm_[j]; }
  std::uint8_t phase(std::size_t j) const { return phase_[j]; }
  void set(std::size_t j, std::uint32_t target, std::uint8_t quarter_turns) {
    perm_[j] = target;
    phase_[j] = quarter_turns & 3u;
  }

  PhasedPerm operator*(const PhasedPerm& o) const;
  PhasedPerm inverse() const;
  PhasedPerm transpose() const;
  PhasedPerm negated() const;
  PhasedPerm scaled_by_i(std::uint8_t quarter_turns) const;

  /// Tensor product; `this` acts on the most significant index block.
  PhasedPerm tensor(const PhasedPerm& o) const;

  bool operator==(const PhasedPerm& o) const { return perm_ == o.perm_ && phase_ == o.phase_; }

  Vec apply(const Vec& x) const;
  ExactMatrix to_matrix() const;
  Scalar trace() const;

  /// True when P*P = identity scaled by i^k for some k (always true for
  /// gamma-group elements); used only in assertions.
  bool is_monomial_involution_up_to_phase() const;

private:
  std::vector<std::uint32_t> perm_;
  std::vector<std::uint8_t> phase_;
};

inline Scalar quarter_phase(std::uint8_t k) {
  switch (k & 3u) {
    case 0: return gq(1);
    case 1: return GaussianRational::i();
    case 2: return gq(-1);
    default: return -GaussianRational::i();
  }
}

// Pauli matrices as phased perms (sigma2 = [[0,-i],[i,0]]).
PhasedPerm pauli1();
PhasedPerm pauli2();
PhasedPerm pauli3();

}  // namespace twistcat

#endif
