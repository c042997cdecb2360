#include "semidet/star_algebra.hpp"

#include <sstream>

namespace semidet {

  namespace {

    void require_transitive(LLPoset const& P) {
      if (!P.is_transitive()) {
        throw NotTransitive();
      }
    }

    void add_witness(PredicateReport& rep, std::string w) {
      rep.holds = false;
      if (rep.witnesses.size() < 10) {
        rep.witnesses.push_back(std::move(w));
      }
    }

    std::string names_of(FiniteSemigroup const&                S,
                         std::initializer_list<ElementId> const elts) {
      std::string out = "(";
      bool        first = true;
      for (ElementId x : elts) {
        out += first ? "" : ", ";
        out += S.name(x);
        first = false;
      }
      return out + ")";
    }

  }  // namespace

  std::optional<ElementId> sharp(FiniteSemigroup const& S,
                                 ElementId              s,
                                 ElementId              t) {
    ElementId st = S.product(s, t);
    if (S.plus(s) == S.plus(st) && S.star(t) == S.star(st)
        && S.star(s) == S.plus(t)) {
      return st;
    }
    return std::nullopt;
  }

  std::optional<ElementId> sharp_e(FiniteSemigroup const& S,
                                   ElementId              s,
                                   ElementId              t,
                                   ElementId              e) {
    if (S.star(s) != e) {
      return std::nullopt;
    }
    return sharp(S, s, t);
  }

  AlgebraVector star_on_Z(FiniteSemigroup const& S,
                          LLPoset const&         P,
                          SequenceTables const&  seq,
                          ElementId              s,
                          ElementId              t) {
    require_transitive(P);
    AlgebraVector out(S.order());
    for (ElementId s1 : P.down_set(s)) {
      ElementId a = S.product(S.plus(s1), s);
      for (ElementId t1 : P.down_set(t)) {
        ElementId e = seq.phi_hat(a, S.product(t, S.star(t1)));
        if (auto x = sharp_e(S, s1, t1, e)) {
          out[*x] += 1;
        }
      }
    }
    return out;
  }

  AlgebraVector star_on_Z(FiniteSemigroup const& S,
                          LLPoset const&         P,
                          ElementId              s,
                          ElementId              t) {
    return star_on_Z(S, P, SequenceTables(S), s, t);
  }

  AlgebraVector star_via_double_sum(FiniteSemigroup const& S,
                                    LLPoset const&         P,
                                    SequenceTables const&  seq,
                                    ElementId              s,
                                    ElementId              t) {
    require_transitive(P);
    AlgebraVector out(S.order());
    for (ElementId s1 : P.down_set(s)) {
      auto ms = P.mobius(s1, s);
      if (ms == 0) {
        continue;
      }
      for (ElementId t1 : P.down_set(t)) {
        auto mt = P.mobius(t1, t);
        if (mt == 0) {
          continue;
        }
        out.add_scaled(Rational(ms * mt), star_on_Z(S, P, seq, s1, t1));
      }
    }
    return out;
  }

  std::int64_t xi(FiniteSemigroup const& S,
                  LLPoset const&         P,
                  SequenceTables const&  seq,
                  ElementId              s,
                  ElementId              t,
                  ElementId              s2,
                  ElementId              t2) {
    require_transitive(P);
    std::int64_t outer = 0;
    ElementId    t2s   = S.star(t2);
    for (ElementId s1 : P.up_set(s2)) {
      if (!P.ll(s1, s)) {
        continue;
      }
      ElementId    a     = S.product(S.plus(s2), s1);
      std::int64_t inner = 0;
      for (ElementId t1 : P.up_set(t2)) {
        if (!P.ll(t1, t)) {
          continue;
        }
        ElementId e = seq.phi_hat(a, S.product(t1, t2s));
        if (sharp_e(S, s2, t2, e)) {
          inner += P.mobius(t1, t);
        }
      }
      outer += inner * P.mobius(s1, s);
    }
    return outer;
  }

  std::int64_t xi(FiniteSemigroup const& S,
                  LLPoset const&         P,
                  ElementId              s,
                  ElementId              t,
                  ElementId              s2,
                  ElementId              t2) {
    return xi(S, P, SequenceTables(S), s, t, s2, t2);
  }

  AlgebraVector star_via_xi(FiniteSemigroup const& S,
                            LLPoset const&         P,
                            SequenceTables const&  seq,
                            ElementId              s,
                            ElementId              t) {
    require_transitive(P);
    AlgebraVector out(S.order());
    for (ElementId s2 : P.down_set(s)) {
      for (ElementId t2 : P.down_set(t)) {
        if (!sharp(S, s2, t2)) {
          continue;
        }
        if (auto x = xi(S, P, seq, s, t, s2, t2); x != 0) {
          out[S.product(s2, t2)] += x;
        }
      }
    }
    return out;
  }

  std::int64_t row_coefficient(FiniteSemigroup const& S,
                               LLPoset const&         P,
                               ElementId              r,
                               ElementId              e) {
    ElementId    re = S.product(r, e);
    ElementId    rp = S.plus(r);
    std::int64_t sum = 0;
    for (ElementId r1 : P.up_set(re)) {
      if (!P.lll(r1, r)) {
        continue;
      }
      if (nat_leq(S, e, S.star(S.product(rp, r1)))) {
        sum += P.mobius(r1, r);
      }
    }
    return sum;
  }

  PredicateReport is_smooth(FiniteSemigroup const& S,
                            LLPoset const&         P,
                            SequenceTables const&  seq) {
    require_transitive(P);
    std::size_t const n = S.order();
    PredicateReport   rep;
    for (ElementId s2 = 0; s2 < n; ++s2) {
      ElementId s2p = S.plus(s2);
      for (ElementId s1 : P.up_set(s2)) {
        ElementId a  = S.product(s2p, s1);
        ElementId as = S.star(a);
        for (ElementId t2 = 0; t2 < n; ++t2) {
          if (!sharp(S, s2, t2)) {
            continue;
          }
          ElementId t2s = S.star(t2);
          for (ElementId t1 : P.up_set(t2)) {
            ElementId b = S.product(t1, t2s);
            ++rep.checked;
            if (seq.phi_hat(a, b) != phi(S, a, b)) {
              add_witness(rep,
                          "condition 1 fails at (s'', s', t'', t') = "
                              + names_of(S, {s2, s1, t2, t1}));
            }
            bool lhs = S.product(as, b) == t2;
            for (ElementId t : P.up_set(t1)) {
              ++rep.checked;
              bool rhs = S.product(as, t, t2s) == t2;
              if (lhs != rhs) {
                add_witness(rep,
                            "condition 2 fails at (s'', s', t'', t', t) = "
                                + names_of(S, {s2, s1, t2, t1, t}));
              }
            }
          }
        }
        // Condition 3 quantifies over s'' << s' << s only.
        bool inner = S.product(s2, S.star(a)) == s2;
        for (ElementId s : P.up_set(s1)) {
          ++rep.checked;
          bool outer = S.product(s2, S.star(S.product(s2p, s))) == s2;
          if (outer && !inner) {
            add_witness(rep,
                        "condition 3 fails at (s'', s', s) = "
                            + names_of(S, {s2, s1, s}));
          }
        }
      }
    }
    return rep;
  }

  PredicateReport is_smooth(FiniteSemigroup const& S, LLPoset const& P) {
    return is_smooth(S, P, SequenceTables(S));
  }

  PredicateReport imposed_condition(FiniteSemigroup const& S,
                                    LLPoset const&         P) {
    require_transitive(P);
    std::size_t const n = S.order();
    PredicateReport   rep;
    for (ElementId s2 = 0; s2 < n; ++s2) {
      ElementId s2p = S.plus(s2);
      for (ElementId s : P.up_set(s2)) {
        for (ElementId t = 0; t < n; ++t) {
          ElementId              tp = S.plus(t);
          std::vector<ElementId> bad;
          for (ElementId x : P.up_set(s2)) {
            if (P.ll(x, s) && phi(S, S.product(s2p, x), t) != tp) {
              bad.push_back(x);
            }
          }
          for (std::size_t i = 0; i < bad.size(); ++i) {
            for (std::size_t j = i + 1; j < bad.size(); ++j) {
              ++rep.checked;
              bool found = false;
              for (ElementId x : bad) {
                if (P.ll(x, bad[i]) && P.ll(x, bad[j])) {
                  found = true;
                  break;
                }
              }
              if (!found) {
                add_witness(rep,
                            "no common lower bound at (s'', s, t, s1', s2') = "
                                + names_of(S, {s2, s, t, bad[i], bad[j]}));
              }
            }
          }
        }
      }
    }
    return rep;
  }

  AlgebraVector StarAlgebra::multiply(AlgebraVector const& a,
                                      AlgebraVector const& b) const {
    AlgebraVector out(_base.order());
    for (ElementId s : a.support()) {
      for (ElementId t : b.support()) {
        out.add_scaled(a[s] * b[t], product(s, t));
      }
    }
    return out;
  }

  StarAlgebra build_star_algebra(FiniteSemigroup const& S, LLPoset const& P) {
    require_transitive(P);
    std::size_t const n = S.order();
    StarAlgebra       A(S, P);
    std::vector<AlgebraVector> inv;
    inv.reserve(n);
    for (ElementId s = 0; s < n; ++s) {
      inv.push_back(Z_inverse(P, AlgebraVector::basis(n, s)));
    }
    A._table.reserve(n * n);
    for (ElementId s = 0; s < n; ++s) {
      for (ElementId t = 0; t < n; ++t) {
        A._table.push_back(Z_map(P, S.multiply(inv[s], inv[t])));
      }
    }
    A._smooth  = is_smooth(S, P, A._seq).holds;
    A._imposed = imposed_condition(S, P).holds;
    return A;
  }

}  // namespace semidet
