#include "twistcat/phased_perm.hpp"

#include <stdexcept>

namespace twistcat {

PhasedPerm PhasedPerm::operator*(const PhasedPerm& o) const {
  if (dim() != o.dim()) throw std::invalid_argument("phased perm dim mismatch");
  PhasedPerm r(dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    std::uint32_t mid = o.perm_[j];
    r.perm_[j] = perm_[mid];
    r.phase_[j] = static_cast<std::uint8_t>((o.phase_[j] + phase_[mid]) & 3u);
  }
  return r;
}

PhasedPerm PhasedPerm::inverse() const {
  PhasedPerm r(dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    r.perm_[perm_[j]] = static_cast<std::uint32_t>(j);
    r.phase_[perm_[j]] = static_cast<std::uint8_t>((4u - phase_[j]) & 3u);
  }
  return r;
}

PhasedPerm PhasedPerm::transpose() const {
  // Entry (perm[j], j) = i^phase[j]  =>  transpose has (j, perm[j]).
  PhasedPerm r(dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    r.perm_[perm_[j]] = static_cast<std::uint32_t>(j);
    r.phase_[perm_[j]] = phase_[j];
  }
  return r;
}

PhasedPerm PhasedPerm::negated() const { return scaled_by_i(2); }

PhasedPerm PhasedPerm::scaled_by_i(std::uint8_t quarter_turns) const {
  PhasedPerm r = *this;
  for (auto& p : r.phase_) p = static_cast<std::uint8_t>((p + quarter_turns) & 3u);
  return r;
}

PhasedPerm PhasedPerm::tensor(const PhasedPerm& o) const {
  PhasedPerm r(dim() * o.dim());
  const std::size_t od = o.dim();
  for (std::size_t a = 0; a < dim(); ++a)
    for (std::size_t b = 0; b < od; ++b) {
      r.perm_[a * od + b] = static_cast<std::uint32_t>(perm_[a] * od + o.perm_[b]);
      r.phase_[a * od + b] = static_cast<std::uint8_t>((phase_[a] + o.phase_[b]) & 3u);
    }
  return r;
}

Vec PhasedPerm::apply(const Vec& x) const {
  if (x.size() != dim()) throw std::invalid_argument("phased perm apply mismatch");
  Vec y(dim());
  for (std::size_t j = 0; j < dim(); ++j)
    if (!x[j].is_zero()) y[perm_[j]] = quarter_phase(phase_[j]) * x[j];
  return y;
}

ExactMatrix PhasedPerm::to_matrix() const {
  ExactMatrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) m.at(perm_[j], j) = quarter_phase(phase_[j]);
  return m;
}

Scalar PhasedPerm::trace() const {
  Scalar t;
  for (std::size_t j = 0; j < dim(); ++j)
    if (perm_[j] == j) t += quarter_phase(phase_[j]);
  return t;
}

bool PhasedPerm::is_monomial_involution_up_to_phase() const {
  PhasedPerm sq = (*this) * (*this);
  for (std::size_t j = 0; j < dim(); ++j)
    if (sq.perm_[j] != j || sq.phase_[j] != sq.phase_[0]) return false;
  return true;
}

PhasedPerm pauli1() {
  PhasedPerm p(2);
  p.set(0, 1, 0);
  p.set(1, 0, 0);
  return p;
}

PhasedPerm pauli2() {
  PhasedPerm p(2);
  p.set(0, 1, 1);   // column 0 -> +i e_1
  p.set(1, 0, 3);   // column 1 -> -i e_0
  return p;
}

PhasedPerm pauli3() {
  PhasedPerm p(2);
  p.set(0, 0, 0);
  p.set(1, 1, 2);
  return p;
}

}  // namespace twistcat
