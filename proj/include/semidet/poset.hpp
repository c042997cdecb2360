// The relation s << t (s = s+ t s*), its partial-order closure <<<, the
// Moebius function of <<<, and the linear bijection Z of QS with
// Z(s) = sum of all s' <<< s.

#ifndef SEMIDET_POSET_HPP_
#define SEMIDET_POSET_HPP_

#include <cstdint>
#include <vector>

#include "semidet/algebra_vector.hpp"
#include "semidet/semigroup.hpp"

namespace semidet {

  class LLPoset {
   public:
    std::size_t order() const noexcept {
      return _n;
    }

    bool ll(ElementId s, ElementId t) const {
      return _ll[s * _n + t];
    }

    bool lll(ElementId s, ElementId t) const {
      return _lll[s * _n + t];
    }

    bool is_transitive() const noexcept {
      return _transitive;
    }

    std::int64_t mobius(ElementId x, ElementId y) const {
      return _mobius[x * _n + y];
    }

    // All s' with s' <<< s, ascending.
    std::vector<ElementId> const& down_set(ElementId s) const {
      return _down[s];
    }

    // All s' with s <<< s', ascending.
    std::vector<ElementId> const& up_set(ElementId s) const {
      return _up[s];
    }

    // Elements ordered so that s <<< t implies s comes first.
    std::vector<ElementId> const& linear_extension() const noexcept {
      return _linear;
    }

    // Pairs (s, t) with s <<< t but not s << t.
    std::vector<std::pair<ElementId, ElementId>> non_transitive_pairs() const;

    friend LLPoset build_poset(FiniteSemigroup const& S);

   private:
    std::size_t                         _n = 0;
    std::vector<char>                   _ll;
    std::vector<char>                   _lll;
    bool                                _transitive = false;
    std::vector<std::int64_t>           _mobius;
    std::vector<std::vector<ElementId>> _down;
    std::vector<std::vector<ElementId>> _up;
    std::vector<ElementId>              _linear;
  };

  // s << t iff s = s+ t s*. Requires a singleton-rich S.
  bool ll_related(FiniteSemigroup const& S, ElementId s, ElementId t);

  // s in E(S)^1 t E(S)^1; an independent characterisation of <<.
  bool ll_via_idempotents(FiniteSemigroup const& S, ElementId s, ElementId t);

  // Throws NotSingletonRich, or AntisymmetryViolation if <<< has a cycle.
  LLPoset build_poset(FiniteSemigroup const& S);

  struct Chain {
    ElementId low, mid, high;
  };

  // Every s << m << t with s, m, t distinct and s not << t.
  std::vector<Chain> non_transitive_chains(LLPoset const& P);

  // True iff the product of any two idempotents is idempotent, which forces
  // << to be transitive.
  bool transitivity_sufficient(FiniteSemigroup const& S);

  AlgebraVector Z_map(LLPoset const& P, AlgebraVector const& v);
  AlgebraVector Z_inverse(LLPoset const& P, AlgebraVector const& v);

}  // namespace semidet

#endif  // SEMIDET_POSET_HPP_
