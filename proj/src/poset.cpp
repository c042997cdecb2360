#include "semidet/poset.hpp"

#include <algorithm>

namespace semidet {

  bool ll_related(FiniteSemigroup const& S, ElementId s, ElementId t) {
    return S.product(S.plus(s), t, S.star(s)) == s;
  }

  bool ll_via_idempotents(FiniteSemigroup const& S, ElementId s, ElementId t) {
    if (s == t) {
      return true;
    }
    auto const& E = S.idempotents();
    for (ElementId e : E) {
      ElementId et = S.product(e, t);
      if (et == s) {
        return true;
      }
      for (ElementId f : E) {
        if (S.product(t, f) == s || S.product(et, f) == s) {
          return true;
        }
      }
    }
    return false;
  }

  bool transitivity_sufficient(FiniteSemigroup const& S) {
    for (ElementId e : S.idempotents()) {
      for (ElementId f : S.idempotents()) {
        if (!S.is_idempotent(S.product(e, f))) {
          return false;
        }
      }
    }
    return true;
  }

  LLPoset build_poset(FiniteSemigroup const& S) {
    std::size_t const n = S.order();
    LLPoset           P;
    P._n = n;
    P._ll.assign(n * n, 0);
    for (ElementId s = 0; s < n; ++s) {
      for (ElementId t = 0; t < n; ++t) {
        P._ll[s * n + t] = ll_related(S, s, t);
      }
    }
    // Warshall closure, reflexive by construction since s << s always.
    P._lll = P._ll;
    for (ElementId s = 0; s < n; ++s) {
      P._lll[s * n + s] = 1;
    }
    for (ElementId k = 0; k < n; ++k) {
      for (ElementId i = 0; i < n; ++i) {
        if (!P._lll[i * n + k]) {
          continue;
        }
        for (ElementId j = 0; j < n; ++j) {
          if (P._lll[k * n + j]) {
            P._lll[i * n + j] = 1;
          }
        }
      }
    }
    for (ElementId s = 0; s < n; ++s) {
      for (ElementId t = s + 1; t < n; ++t) {
        if (P._lll[s * n + t] && P._lll[t * n + s]) {
          throw AntisymmetryViolation(s, t);
        }
      }
    }
    P._transitive = P._ll == P._lll;

    P._down.assign(n, {});
    P._up.assign(n, {});
    for (ElementId s = 0; s < n; ++s) {
      for (ElementId t = 0; t < n; ++t) {
        if (P._lll[t * n + s]) {
          P._down[s].push_back(t);
        }
        if (P._lll[s * n + t]) {
          P._up[s].push_back(t);
        }
      }
    }

    // A linear extension: sort by the size of the down-set, which strictly
    // increases along <<<.
    P._linear.resize(n);
    for (ElementId s = 0; s < n; ++s) {
      P._linear[s] = s;
    }
    std::stable_sort(P._linear.begin(),
                     P._linear.end(),
                     [&P](ElementId a, ElementId b) {
                       return P._down[a].size() < P._down[b].size();
                     });

    // mu(x, x) = 1, mu(x, y) = -sum_{x <<< z <<< y, z != y} mu(x, z).
    P._mobius.assign(n * n, 0);
    for (ElementId x = 0; x < n; ++x) {
      P._mobius[x * n + x] = 1;
      for (ElementId y : P._linear) {
        if (y == x || !P._lll[x * n + y]) {
          continue;
        }
        std::int64_t sum = 0;
        for (ElementId z : P._down[y]) {
          if (z != y && P._lll[x * n + z]) {
            sum += P._mobius[x * n + z];
          }
        }
        P._mobius[x * n + y] = -sum;
      }
    }
    return P;
  }

  std::vector<std::pair<ElementId, ElementId>>
  LLPoset::non_transitive_pairs() const {
    std::vector<std::pair<ElementId, ElementId>> out;
    for (ElementId s = 0; s < _n; ++s) {
      for (ElementId t = 0; t < _n; ++t) {
        if (lll(s, t) && !ll(s, t)) {
          out.emplace_back(s, t);
        }
      }
    }
    return out;
  }

  std::vector<Chain> non_transitive_chains(LLPoset const& P) {
    std::vector<Chain> out;
    std::size_t const  n = P.order();
    for (ElementId s = 0; s < n; ++s) {
      for (ElementId m = 0; m < n; ++m) {
        if (m == s || !P.ll(s, m)) {
          continue;
        }
        for (ElementId t = 0; t < n; ++t) {
          if (t != s && t != m && P.ll(m, t) && !P.ll(s, t)) {
            out.push_back({s, m, t});
          }
        }
      }
    }
    return out;
  }

  AlgebraVector Z_map(LLPoset const& P, AlgebraVector const& v) {
    AlgebraVector out(P.order());
    for (ElementId s : v.support()) {
      for (ElementId d : P.down_set(s)) {
        out[d] += v[s];
      }
    }
    return out;
  }

  AlgebraVector Z_inverse(LLPoset const& P, AlgebraVector const& v) {
    AlgebraVector out(P.order());
    for (ElementId s : v.support()) {
      for (ElementId d : P.down_set(s)) {
        if (auto m = P.mobius(d, s); m != 0) {
          out[d] += v[s] * m;
        }
      }
    }
    return out;
  }

}  // namespace semidet
