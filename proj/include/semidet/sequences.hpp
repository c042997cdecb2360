// Paired sequences and their idempotent limits.
//
//   phi(s, t) = (s* t)+        psi(s, t) = (s t+)*
//
// The epsilon recurrence steps (s, t) -> (s t+, s* t) while s* and t+
// commute and freezes otherwise. The phi recurrence steps
// (s, t) -> (s phi(s, t), s* t) and the psi recurrence
// (s, t) -> (s t+, psi(s, t) t); both reach a fixed pair, and phi_hat /
// psi_hat return the value of phi / psi there.

#ifndef SEMIDET_SEQUENCES_HPP_
#define SEMIDET_SEQUENCES_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "semidet/semigroup.hpp"

namespace semidet {

  enum class SequenceKind { epsilon, phi, psi };

  struct SequenceTrace {
    SequenceKind                                 kind;
    std::vector<std::pair<ElementId, ElementId>> pairs;
    // For epsilon: (s_i*, t_i+) at the fixed pair. For phi / psi: both
    // components hold the limiting idempotent.
    std::pair<ElementId, ElementId> limit;
    std::size_t                     steps = 0;
    // epsilon only: s_i* t_i+ = t_i+ s_i* held at every index, including the
    // fixed one.
    bool commuting = true;

    bool collapsed() const noexcept {
      return limit.first == limit.second;
    }
  };

  ElementId phi(FiniteSemigroup const& S, ElementId s, ElementId t);
  ElementId psi(FiniteSemigroup const& S, ElementId s, ElementId t);

  // Cap 2|E(S)| + 2 steps.
  SequenceTrace epsilon_pair(FiniteSemigroup const& S, ElementId s, ElementId t);

  // Cap |S| + 1 steps.
  SequenceTrace phi_trace(FiniteSemigroup const& S, ElementId s, ElementId t);
  SequenceTrace psi_trace(FiniteSemigroup const& S, ElementId s, ElementId t);

  ElementId phi_hat(FiniteSemigroup const& S, ElementId s, ElementId t);
  ElementId psi_hat(FiniteSemigroup const& S, ElementId s, ElementId t);

  // phi_hat / psi_hat for all pairs, computed once.
  class SequenceTables {
   public:
    explicit SequenceTables(FiniteSemigroup const& S);

    ElementId phi_hat(ElementId s, ElementId t) const {
      return _phi_hat[s * _n + t];
    }

    ElementId psi_hat(ElementId s, ElementId t) const {
      return _psi_hat[s * _n + t];
    }

   private:
    std::size_t            _n;
    std::vector<ElementId> _phi_hat;
    std::vector<ElementId> _psi_hat;
  };

}  // namespace semidet

#endif  // SEMIDET_SEQUENCES_HPP_
