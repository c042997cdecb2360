#include "semidet/sequences.hpp"

namespace semidet {

  ElementId phi(FiniteSemigroup const& S, ElementId s, ElementId t) {
    return S.plus(S.product(S.star(s), t));
  }

  ElementId psi(FiniteSemigroup const& S, ElementId s, ElementId t) {
    return S.star(S.product(s, S.plus(t)));
  }

  SequenceTrace epsilon_pair(FiniteSemigroup const& S, ElementId s, ElementId t) {
    std::size_t const cap = 2 * S.idempotents().size() + 2;
    SequenceTrace     tr{SequenceKind::epsilon, {{s, t}}, {}, 0, true};
    for (;;) {
      auto [si, ti]  = tr.pairs.back();
      ElementId a    = S.star(si);
      ElementId b    = S.plus(ti);
      auto      next = std::make_pair(si, ti);
      if (S.product(a, b) == S.product(b, a)) {
        next = {S.product(si, b), S.product(a, ti)};
      } else {
        tr.commuting = false;
      }
      if (next == tr.pairs.back()) {
        tr.limit = {a, b};
        return tr;
      }
      if (++tr.steps > cap) {
        throw IterationCapExceeded("epsilon sequence", cap);
      }
      tr.pairs.push_back(next);
    }
  }

  namespace {

    template <bool IsPhi>
    SequenceTrace limit_trace(FiniteSemigroup const& S, ElementId s, ElementId t) {
      std::size_t const cap = S.order() + 1;
      SequenceTrace     tr{IsPhi ? SequenceKind::phi : SequenceKind::psi,
                       {{s, t}},
                       {},
                       0,
                       true};
      for (;;) {
        auto [si, ti] = tr.pairs.back();
        std::pair<ElementId, ElementId> next;
        ElementId                       value;
        if constexpr (IsPhi) {
          value = phi(S, si, ti);
          next  = {S.product(si, value), S.product(S.star(si), ti)};
        } else {
          value = psi(S, si, ti);
          next  = {S.product(si, S.plus(ti)), S.product(value, ti)};
        }
        if (next == tr.pairs.back()) {
          tr.limit = {value, value};
          return tr;
        }
        if (++tr.steps > cap) {
          throw IterationCapExceeded(IsPhi ? "phi sequence" : "psi sequence",
                                     cap);
        }
        tr.pairs.push_back(next);
      }
    }

  }  // namespace

  SequenceTrace phi_trace(FiniteSemigroup const& S, ElementId s, ElementId t) {
    return limit_trace<true>(S, s, t);
  }

  SequenceTrace psi_trace(FiniteSemigroup const& S, ElementId s, ElementId t) {
    return limit_trace<false>(S, s, t);
  }

  ElementId phi_hat(FiniteSemigroup const& S, ElementId s, ElementId t) {
    return phi_trace(S, s, t).limit.first;
  }

  ElementId psi_hat(FiniteSemigroup const& S, ElementId s, ElementId t) {
    return psi_trace(S, s, t).limit.first;
  }

  SequenceTables::SequenceTables(FiniteSemigroup const& S)
      : _n(S.order()), _phi_hat(_n * _n), _psi_hat(_n * _n) {
    for (ElementId s = 0; s < _n; ++s) {
      for (ElementId t = 0; t < _n; ++t) {
        _phi_hat[s * _n + t] = semidet::phi_hat(S, s, t);
        _psi_hat[s * _n + t] = semidet::psi_hat(S, s, t);
      }
    }
  }

}  // namespace semidet
