#include "semidet/verify.hpp"

#include <functional>
#include <optional>
#include <random>

#include "semidet/factorization.hpp"
#include "semidet/poset.hpp"
#include "semidet/sequences.hpp"
#include "semidet/star_algebra.hpp"

namespace semidet {

  namespace {

    class Check {
     public:
      explicit Check(std::string name) {
        _r.name = std::move(name);
      }

      // Counts one instance; `what` is only evaluated on failure.
      template <typename What>
      void expect(bool cond, What&& what) {
        ++_r.checked;
        if (!cond) {
          _r.holds = false;
          if (_r.witnesses.size() < 10) {
            _r.witnesses.push_back(what());
          }
        }
      }

      PropertyResult done() {
        return std::move(_r);
      }

      static PropertyResult skipped(std::string name, std::string why) {
        PropertyResult r;
        r.name       = std::move(name);
        r.applicable = false;
        r.note       = std::move(why);
        return r;
      }

     private:
      PropertyResult _r;
    };

    std::string tuple(FiniteSemigroup const&                  S,
                      std::initializer_list<ElementId> const& xs) {
      std::string out = "(";
      bool        first = true;
      for (ElementId x : xs) {
        out += (first ? "" : ", ") + S.name(x);
        first = false;
      }
      return out + ")";
    }

    // The vector with the zero coordinate removed.
    AlgebraVector contract(FiniteSemigroup const& S, AlgebraVector v) {
      if (auto z = S.zero()) {
        v[*z] = 0;
      }
      return v;
    }

    bool nonzero(FiniteSemigroup const& S, AlgebraVector const& v) {
      return !contract(S, v).is_zero();
    }

    bool sharp_nonzero(FiniteSemigroup const& S, ElementId s, ElementId t) {
      auto x = sharp(S, s, t);
      return x && !S.is_zero(*x);
    }

    struct Context {
      FiniteSemigroup const&         S;
      std::vector<ElementId> const&  E;
      std::size_t                    n;
    };

    ////////////////////////////////////////////////////////////////////////
    // Orders
    ////////////////////////////////////////////////////////////////////////

    PropertyResult ll_characterisation(Context const& c) {
      Check ck("ll_characterisation");
      for (ElementId s = 0; s < c.n; ++s) {
        for (ElementId t = 0; t < c.n; ++t) {
          ck.expect(ll_related(c.S, s, t) == ll_via_idempotents(c.S, s, t),
                    [&] { return "disagree at " + tuple(c.S, {s, t}); });
        }
      }
      return ck.done();
    }

    PropertyResult idempotent_multiples_below(Context const& c) {
      Check ck("idempotent_multiples_below");
      auto const& S = c.S;
      for (ElementId s = 0; s < c.n; ++s) {
        for (ElementId e : c.E) {
          ck.expect(ll_related(S, S.product(e, s), s),
                    [&] { return "not es << s at (s, e) = " + tuple(S, {s, e}); });
          ck.expect(ll_related(S, S.product(s, e), s),
                    [&] { return "not se << s at (s, e) = " + tuple(S, {s, e}); });
          for (ElementId f : c.E) {
            ck.expect(ll_related(S, S.product(e, s, f), s), [&] {
              return "not esf << s at (s, e, f) = " + tuple(S, {s, e, f});
            });
          }
        }
      }
      return ck.done();
    }

    PropertyResult star_plus_monotone(Context const& c) {
      Check ck("star_plus_monotone");
      auto const& S = c.S;
      for (ElementId a = 0; a < c.n; ++a) {
        for (ElementId b = 0; b < c.n; ++b) {
          ElementId ab = S.product(a, b);
          ck.expect(nat_leq(S, S.star(ab), S.star(b)),
                    [&] { return "(ab)* not <= b* at " + tuple(S, {a, b}); });
          ck.expect(nat_leq(S, S.plus(ab), S.plus(a)),
                    [&] { return "(ab)+ not <= a+ at " + tuple(S, {a, b}); });
        }
      }
      return ck.done();
    }

    PropertyResult mobius_inversion(Context const& c, LLPoset const& P) {
      Check ck("mobius_inversion");
      auto const& S = c.S;
      for (ElementId x = 0; x < c.n; ++x) {
        for (ElementId y = 0; y < c.n; ++y) {
          if (!P.lll(x, y)) {
            continue;
          }
          std::int64_t sum = 0;
          for (ElementId z : P.up_set(x)) {
            if (P.lll(z, y)) {
              sum += P.mobius(x, z);
            }
          }
          ck.expect(sum == (x == y ? 1 : 0),
                    [&] { return "sum of mu fails at " + tuple(S, {x, y}); });
        }
        auto e = AlgebraVector::basis(c.n, x);
        ck.expect(Z_inverse(P, Z_map(P, e)) == e && Z_map(P, Z_inverse(P, e)) == e,
                  [&] { return "Z round trip fails at " + S.name(x); });
      }
      return ck.done();
    }

    ////////////////////////////////////////////////////////////////////////
    // Sequences
    ////////////////////////////////////////////////////////////////////////

    PropertyResult epsilon_prefix(Context const& c) {
      Check ck("epsilon_prefix");
      auto const& S = c.S;
      for (ElementId s = 0; s < c.n; ++s) {
        for (ElementId t = 0; t < c.n; ++t) {
          auto const tr = epsilon_pair(S, s, t);
          // Every recorded step was taken because the idempotents commuted.
          for (std::size_t i = 0; i + 1 < tr.pairs.size(); ++i) {
            auto [si, ti] = tr.pairs[i];
            auto [sj, tj] = tr.pairs[i + 1];
            ElementId a = S.star(si), b = S.plus(ti);
            ElementId a1 = S.star(sj), b1 = S.plus(tj);
            ck.expect(nat_leq(S, a1, a) && nat_leq(S, a1, b) && nat_leq(S, b1, a)
                          && nat_leq(S, b1, b),
                      [&] {
                        return "idempotents do not decrease at " + tuple(S, {s, t})
                               + " step " + std::to_string(i);
                      });
            ck.expect(sj == S.product(s, b) && tj == S.product(a, t), [&] {
              return "closed form fails at " + tuple(S, {s, t}) + " step "
                     + std::to_string(i);
            });
          }
        }
      }
      return ck.done();
    }

    PropertyResult trace_steps(Context const& c) {
      Check ck("trace_steps");
      auto const& S = c.S;
      for (ElementId s = 0; s < c.n; ++s) {
        for (ElementId t = 0; t < c.n; ++t) {
          auto const tp = phi_trace(S, s, t);
          for (std::size_t i = 0; i < tp.pairs.size(); ++i) {
            auto [si, ti] = tp.pairs[i];
            ElementId v   = phi(S, si, ti);
            auto      at  = [&] {
              return tuple(S, {s, t}) + " step " + std::to_string(i);
            };
            ck.expect(nat_leq(S, v, S.star(si)),
                      [&] { return "phi not below s_i* at " + at(); });
            ck.expect(v == phi(S, si, t),
                      [&] { return "phi(s_i, t_i) != phi(s_i, t) at " + at(); });
            if (i + 1 < tp.pairs.size()) {
              auto [sj, tj] = tp.pairs[i + 1];
              ck.expect(nat_leq(S, phi(S, sj, tj), v),
                        [&] { return "phi does not decrease at " + at(); });
              ck.expect(sj == S.product(s, v) && tj == S.product(v, t),
                        [&] { return "phi closed form fails at " + at(); });
            }
          }
          auto const tq = psi_trace(S, s, t);
          for (std::size_t i = 0; i < tq.pairs.size(); ++i) {
            auto [si, ti] = tq.pairs[i];
            ElementId w   = psi(S, si, ti);
            auto      at  = [&] {
              return tuple(S, {s, t}) + " step " + std::to_string(i);
            };
            ck.expect(nat_leq(S, w, S.plus(ti)),
                      [&] { return "psi not below t_i+ at " + at(); });
            ck.expect(w == psi(S, s, ti),
                      [&] { return "psi(s_i, t_i) != psi(s, t_i) at " + at(); });
            if (i + 1 < tq.pairs.size()) {
              auto [sj, tj] = tq.pairs[i + 1];
              ck.expect(nat_leq(S, psi(S, sj, tj), w),
                        [&] { return "psi does not decrease at " + at(); });
              ck.expect(sj == S.product(s, w) && tj == S.product(w, t),
                        [&] { return "psi closed form fails at " + at(); });
            }
          }
        }
      }
      return ck.done();
    }

    PropertyResult limits_below(Context const& c, SequenceTables const& q) {
      Check ck("limits_below");
      auto const& S = c.S;
      for (ElementId s = 0; s < c.n; ++s) {
        for (ElementId t = 0; t < c.n; ++t) {
          ck.expect(nat_leq(S, q.phi_hat(s, t), S.star(s)),
                    [&] { return "phi^ not <= s* at " + tuple(S, {s, t}); });
          ck.expect(nat_leq(S, q.psi_hat(s, t), S.plus(t)),
                    [&] { return "psi^ not <= t+ at " + tuple(S, {s, t}); });
        }
      }
      return ck.done();
    }

    PropertyResult product_through_limits(Context const& c,
                                          SequenceTables const& q) {
      Check ck("product_through_limits");
      auto const& S = c.S;
      for (ElementId s = 0; s < c.n; ++s) {
        for (ElementId t = 0; t < c.n; ++t) {
          ElementId st = S.product(s, t);
          ck.expect(st == S.product(s, q.phi_hat(s, t), t)
                        && st == S.product(s, q.psi_hat(s, t), t),
                    [&] { return "st not recovered at " + tuple(S, {s, t}); });
        }
      }
      return ck.done();
    }

    PropertyResult limits_are_star_and_plus(Context const& c,
                                            SequenceTables const& q) {
      Check ck("limits_are_star_and_plus");
      auto const& S = c.S;
      for (ElementId s = 0; s < c.n; ++s) {
        for (ElementId t = 0; t < c.n; ++t) {
          for (ElementId e : {q.phi_hat(s, t), q.psi_hat(s, t)}) {
            ElementId se = S.product(s, e), et = S.product(e, t);
            ck.expect(S.star(se) == e && S.plus(et) == e, [&] {
              return "limit " + S.name(e) + " is not (se)* = (et)+ at "
                     + tuple(S, {s, t});
            });
          }
        }
      }
      return ck.done();
    }

    PropertyResult limits_stable(Context const& c, SequenceTables const& q) {
      Check ck("limits_stable");
      auto const& S = c.S;
      for (ElementId s = 0; s < c.n; ++s) {
        for (ElementId t = 0; t < c.n; ++t) {
          ElementId v = q.phi_hat(s, t), w = q.psi_hat(s, t);
          ck.expect(q.phi_hat(S.product(s, v), S.product(v, t)) == v,
                    [&] { return "phi^ not stable at " + tuple(S, {s, t}); });
          ck.expect(q.psi_hat(S.product(s, w), S.product(w, t)) == w,
                    [&] { return "psi^ not stable at " + tuple(S, {s, t}); });
        }
      }
      return ck.done();
    }

    PropertyResult commuting_limits_agree(Context const& c,
                                          SequenceTables const& q) {
      Check ck("commuting_limits_agree");
      auto const& S = c.S;
      for (ElementId s = 0; s < c.n; ++s) {
        for (ElementId t = 0; t < c.n; ++t) {
          auto const tr = epsilon_pair(S, s, t);
          if (!tr.commuting) {
            continue;
          }
          ck.expect(tr.collapsed() && q.phi_hat(s, t) == tr.limit.first
                        && q.psi_hat(s, t) == tr.limit.first,
                    [&] { return "limits differ at " + tuple(S, {s, t}); });
        }
      }
      return ck.done();
    }

    PropertyResult idempotent_shift(Context const& c, SequenceTables const& q) {
      Check ck("idempotent_shift");
      auto const& S = c.S;
      for (ElementId s = 0; s < c.n; ++s) {
        for (ElementId t = 0; t < c.n; ++t) {
          for (ElementId e : c.E) {
            if (nat_leq(S, S.plus(t), e)) {
              ck.expect(q.psi_hat(s, t) == q.psi_hat(S.product(s, e), t), [&] {
                return "psi^(s, t) != psi^(se, t) at (s, t, e) = "
                       + tuple(S, {s, t, e});
              });
            }
            if (nat_leq(S, S.star(s), e)) {
              ck.expect(q.phi_hat(s, t) == q.phi_hat(s, S.product(e, t)), [&] {
                return "phi^(s, t) != phi^(s, ft) at (s, t, f) = "
                       + tuple(S, {s, t, e});
              });
            }
          }
        }
      }
      return ck.done();
    }

    PropertyResult compatible_pair_limits(Context const& c,
                                          LLPoset const&  P,
                                          SequenceTables const& q) {
      Check ck("compatible_pair_limits");
      auto const& S = c.S;
      for (ElementId s = 0; s < c.n; ++s) {
        for (ElementId s1 = 0; s1 < c.n; ++s1) {
          if (!P.ll(s1, s)) {
            continue;
          }
          for (ElementId t = 0; t < c.n; ++t) {
            for (ElementId t1 = 0; t1 < c.n; ++t1) {
              if (!P.ll(t1, t) || S.star(s1) != S.plus(t1)) {
                continue;
              }
              ElementId e = S.star(s1);
              ck.expect(q.phi_hat(s1, S.product(t, S.star(t1))) == e
                            && q.psi_hat(S.product(S.plus(s1), s), t1) == e,
                        [&] {
                          return "limits differ from s'* at (s, s', t, t') = "
                                 + tuple(S, {s, s1, t, t1});
                        });
            }
          }
        }
      }
      return ck.done();
    }

    PropertyResult restriction_implications(Context const& c, LLPoset const& P) {
      Check ck("restriction_implications");
      auto const& S = c.S;
      for (ElementId s = 0; s < c.n; ++s) {
        for (ElementId s1 = 0; s1 < c.n; ++s1) {
          if (!P.ll(s1, s)) {
            continue;
          }
          ElementId a = S.product(S.plus(s1), s);
          for (ElementId t = 0; t < c.n; ++t) {
            for (ElementId t1 = 0; t1 < c.n; ++t1) {
              if (!P.ll(t1, t)) {
                continue;
              }
              ElementId b = S.product(t, S.star(t1));
              if (phi(S, a, b) == S.plus(t1)) {
                ck.expect(phi(S, a, t1) == S.plus(t1), [&] {
                  return "phi implication fails at (s, s', t, t') = "
                         + tuple(S, {s, s1, t, t1});
                });
              }
              if (psi(S, a, b) == S.star(s1)) {
                ck.expect(psi(S, s1, b) == S.star(s1), [&] {
                  return "psi implication fails at (s, s', t, t') = "
                         + tuple(S, {s, s1, t, t1});
                });
              }
            }
          }
        }
      }
      return ck.done();
    }

    ////////////////////////////////////////////////////////////////////////
    // Star algebra
    ////////////////////////////////////////////////////////////////////////

    PropertyResult star_on_basis(Context const& c, StarAlgebra const& A) {
      Check ck("star_on_basis");
      auto const& S = c.S;
      auto const& P = A.poset();
      for (ElementId s = 0; s < c.n; ++s) {
        for (ElementId t = 0; t < c.n; ++t) {
          auto expected = Z_map(P, AlgebraVector::basis(c.n, S.product(s, t)));
          ck.expect(star_on_Z(S, P, A.sequences(), s, t) == expected,
                    [&] { return "Z(s) * Z(t) != Z(st) at " + tuple(S, {s, t}); });
        }
      }
      return ck.done();
    }

    PropertyResult Z_homomorphism(Context const& c,
                                  StarAlgebra const& A,
                                  VerifyOptions const& opts) {
      Check ck("Z_homomorphism");
      auto const& S = c.S;
      auto const& P = A.poset();
      std::mt19937_64                    rng(opts.seed);
      std::uniform_int_distribution<int> coeff(-3, 3);
      auto random_vector = [&] {
        AlgebraVector v(c.n);
        for (ElementId s = 0; s < c.n; ++s) {
          v[s] = coeff(rng);
        }
        return v;
      };
      for (std::size_t k = 0; k < opts.random_vectors; ++k) {
        auto a = random_vector(), b = random_vector(), d = random_vector();
        Rational lambda(coeff(rng));
        ck.expect(Z_map(P, S.multiply(a, b))
                      == A.multiply(Z_map(P, a), Z_map(P, b)),
                  [&] { return "Z(ab) != Z(a) * Z(b) for sample " + std::to_string(k); });
        ck.expect(A.multiply(a + lambda * d, b)
                          == A.multiply(a, b) + lambda * A.multiply(d, b)
                      && A.multiply(a, b + lambda * d)
                             == A.multiply(a, b) + lambda * A.multiply(a, d),
                  [&] { return "star is not bilinear for sample " + std::to_string(k); });
      }
      return ck.done();
    }

    PropertyResult dual_paths(Context const& c, StarAlgebra const& A) {
      Check ck("dual_paths");
      auto const& S = c.S;
      auto const& P = A.poset();
      for (ElementId s = 0; s < c.n; ++s) {
        for (ElementId t = 0; t < c.n; ++t) {
          auto const& z = A.product(s, t);
          ck.expect(star_via_double_sum(S, P, A.sequences(), s, t) == z,
                    [&] { return "double sum differs at " + tuple(S, {s, t}); });
          ck.expect(star_via_xi(S, P, A.sequences(), s, t) == z,
                    [&] { return "xi expansion differs at " + tuple(S, {s, t}); });
        }
      }
      return ck.done();
    }

    PropertyResult chain_conditions(Context const& c, LLPoset const& P) {
      Check ck("chain_conditions");
      auto const& S = c.S;
      for (ElementId s2 = 0; s2 < c.n; ++s2) {
        for (ElementId t2 = 0; t2 < c.n; ++t2) {
          if (!sharp_nonzero(S, s2, t2)) {
            continue;
          }
          ElementId tp = S.plus(t2), t2s = S.star(t2);
          for (ElementId s1 = 0; s1 < c.n; ++s1) {
            if (!P.ll(s2, s1)) {
              continue;
            }
            ElementId a = S.product(S.plus(s2), s1);
            for (ElementId t1 = 0; t1 < c.n; ++t1) {
              if (!P.ll(t2, t1)) {
                continue;
              }
              bool inner = phi(S, a, S.product(t1, t2s)) == tp;
              for (ElementId t = 0; t < c.n; ++t) {
                if (!P.ll(t1, t)) {
                  continue;
                }
                bool outer = phi(S, a, S.product(t, t2s)) == tp;
                ck.expect(inner == outer, [&] {
                  return "first condition fails at (s'', s', t'', t', t) = "
                         + tuple(S, {s2, s1, t2, t1, t});
                });
              }
            }
            // s'' << s1' << s2' with phi(s''+ s2', t'') = t''+.
            for (ElementId s3 = 0; s3 < c.n; ++s3) {
              if (!P.ll(s1, s3)) {
                continue;
              }
              if (phi(S, S.product(S.plus(s2), s3), t2) == tp) {
                ck.expect(phi(S, a, t2) == tp, [&] {
                  return "second condition fails at (s'', s1', s2', t'') = "
                         + tuple(S, {s2, s1, s3, t2});
                });
              }
            }
          }
        }
      }
      return ck.done();
    }

    PropertyResult xi_support(Context const& c,
                              StarAlgebra const& A,
                              bool               imposed) {
      Check ck("xi_support");
      auto const& S = c.S;
      auto const& P = A.poset();
      auto const& q = A.sequences();
      for (ElementId s = 0; s < c.n; ++s) {
        for (ElementId t = 0; t < c.n; ++t) {
          ElementId tp = S.plus(t);
          if (S.star(s) == tp) {
            continue;
          }
          ElementId    stp = S.product(s, tp);
          std::int64_t rc  = row_coefficient(S, P, s, tp);
          bool         any = false;
          for (ElementId s2 : P.down_set(s)) {
            for (ElementId t2 : P.down_set(t)) {
              if (!sharp_nonzero(S, s2, t2)) {
                continue;
              }
              std::int64_t x     = xi(S, P, q, s, t, s2, t2);
              bool         shape = s2 == stp && t2 == t && S.plus(s2) == S.plus(s);
              any               = any || x != 0;
              ck.expect((x != 0) == (shape && rc != 0), [&] {
                return "xi support fails at (s, t, s'', t'') = "
                       + tuple(S, {s, t, s2, t2});
              });
              if (x != 0) {
                ck.expect(x == rc, [&] {
                  return "xi differs from the row sum at (s, t) = "
                         + tuple(S, {s, t});
                });
                if (imposed) {
                  ck.expect(x == -1, [&] {
                    return "xi != -1 at (s, t) = " + tuple(S, {s, t});
                  });
                }
              }
            }
          }
          if (any) {
            ck.expect(!nat_leq(S, S.star(s), tp), [&] {
              return "s* <= t+ with nonzero xi at " + tuple(S, {s, t});
            });
          }
          auto const& st = A.product(s, t);
          if (nonzero(S, st)) {
            auto expected = contract(
                S, Rational(rc) * AlgebraVector::basis(c.n, S.product(s, t)));
            ck.expect(contract(S, st) == expected, [&] {
              return "s * t is not the row sum times st at " + tuple(S, {s, t});
            });
          }
        }
      }
      return ck.done();
    }

    // Both corollaries: for s* != t+ with s * t nonzero and every t' with
    // t'+ = t+, s * t', st+ # t' and st+ * t' are nonzero together, and
    // s * t' = c (st+ * t') = c st'.
    PropertyResult star_support(Context const& c, StarAlgebra const& A) {
      Check ck("star_support");
      auto const& S = c.S;
      auto const& P = A.poset();
      for (ElementId s = 0; s < c.n; ++s) {
        for (ElementId t = 0; t < c.n; ++t) {
          ElementId tp = S.plus(t);
          if (S.star(s) == tp || !nonzero(S, A.product(s, t))) {
            continue;
          }
          ElementId    stp = S.product(s, tp);
          Rational     rc(row_coefficient(S, P, s, tp));
          for (ElementId t1 = 0; t1 < c.n; ++t1) {
            if (S.plus(t1) != tp) {
              continue;
            }
            auto const& lhs  = A.product(s, t1);
            auto const& mid  = A.product(stp, t1);
            bool        nz   = nonzero(S, lhs);
            auto        at   = [&] { return tuple(S, {s, t, t1}); };
            ck.expect(nz == sharp_nonzero(S, stp, t1),
                      [&] { return "s * t' and st+ # t' disagree at " + at(); });
            ck.expect(nz == nonzero(S, mid),
                      [&] { return "s * t' and st+ * t' disagree at " + at(); });
            if (nz) {
              auto st1 = AlgebraVector::basis(c.n, S.product(s, t1));
              ck.expect(contract(S, lhs) == contract(S, rc * st1),
                        [&] { return "s * t' != c st' at " + at(); });
              ck.expect(contract(S, lhs) == contract(S, rc * mid),
                        [&] { return "s * t' != c (st+ * t') at " + at(); });
            }
          }
        }
      }
      return ck.done();
    }

    PropertyResult xi_at_st_plus(Context const& c, StarAlgebra const& A) {
      Check ck("xi_at_st_plus");
      auto const& S = c.S;
      auto const& P = A.poset();
      auto const& q = A.sequences();
      for (ElementId s = 0; s < c.n; ++s) {
        for (ElementId t = 0; t < c.n; ++t) {
          ElementId stp   = S.product(s, S.plus(t));
          bool      sharp = sharp_nonzero(S, stp, t);
          for (ElementId s2 : P.down_set(stp)) {
            for (ElementId t2 : P.down_set(t)) {
              if (!sharp_nonzero(S, s2, t2)) {
                continue;
              }
              bool nz = xi(S, P, q, stp, t, s2, t2) != 0;
              ck.expect(nz == (s2 == stp && t2 == t && sharp), [&] {
                return "xi support fails at (s, t, s'', t'') = "
                       + tuple(S, {s, t, s2, t2});
              });
            }
          }
          if (sharp) {
            ck.expect(contract(S, A.product(stp, t))
                          == contract(S, AlgebraVector::basis(c.n, S.product(s, t))),
                      [&] { return "st+ * t != st at " + tuple(S, {s, t}); });
          }
        }
      }
      return ck.done();
    }

    PropertyResult block_reduction(FiniteSemigroup const& S) {
      Check ck("block_reduction");
      try {
        auto F = factorize(S);
        ck.expect(F.reduction_is_mask,
                  [] { return std::string("reduced matrix is not block diagonal"); });
        ck.expect(F.reduction_preserves,
                  [] { return std::string("reduction changed the determinant"); });
        ck.expect(F.parity_consistent,
                  [] { return std::string("block layout changed the determinant"); });
        ck.expect(F.verified, [&] {
          return "block product " + render(F.product, S.names())
                 + " is not +/- the determinant";
        });
      } catch (Error const& e) {
        ck.expect(false, [&] { return std::string(e.what()); });
      }
      return ck.done();
    }

  }  // namespace

  bool VerifyReport::ok() const {
    for (auto const& r : results) {
      if (r.applicable && !r.holds) {
        return false;
      }
    }
    return true;
  }

  PropertyResult const* VerifyReport::find(std::string const& name) const {
    for (auto const& r : results) {
      if (r.name == name) {
        return &r;
      }
    }
    return nullptr;
  }

  VerifyReport verify_semigroup(FiniteSemigroup const& S,
                                std::string const&     name,
                                VerifyOptions const&   opts) {
    VerifyReport rep;
    rep.name           = name;
    rep.singleton_rich = S.singleton_rich();
    auto& out          = rep.results;
    if (!rep.singleton_rich) {
      out.push_back(Check::skipped("all", "not singleton-rich"));
      return rep;
    }
    Context c{S, S.idempotents(), S.order()};
    std::optional<LLPoset> P;
    try {
      P = build_poset(S);
    } catch (AntisymmetryViolation const& e) {
      PropertyResult r;
      r.name  = "ll_antisymmetric";
      r.holds = false;
      r.checked = 1;
      r.witnesses.push_back(e.what());
      out.push_back(std::move(r));
      return rep;
    }
    rep.ll_transitive = P->is_transitive();
    for (auto const& ch : non_transitive_chains(*P)) {
      rep.non_transitive_chains.push_back(
          S.name(ch.low) + " << " + S.name(ch.mid) + " << " + S.name(ch.high)
          + ", not " + S.name(ch.low) + " << " + S.name(ch.high));
    }

    SequenceTables q(S);
    out.push_back(ll_characterisation(c));
    out.push_back(idempotent_multiples_below(c));
    out.push_back(star_plus_monotone(c));
    out.push_back(mobius_inversion(c, *P));
    out.push_back(epsilon_prefix(c));
    out.push_back(trace_steps(c));
    out.push_back(limits_below(c, q));
    out.push_back(product_through_limits(c, q));
    out.push_back(limits_are_star_and_plus(c, q));
    out.push_back(limits_stable(c, q));
    out.push_back(commuting_limits_agree(c, q));
    out.push_back(idempotent_shift(c, q));
    out.push_back(compatible_pair_limits(c, *P, q));
    out.push_back(restriction_implications(c, *P));

    static char const* const algebra[] = {"star_on_basis", "Z_homomorphism",
                                          "dual_paths"};
    static char const* const smooth[]  = {"chain_conditions", "xi_support",
                                          "star_support", "xi_at_st_plus",
                                          "block_reduction"};
    if (!rep.ll_transitive) {
      for (auto const* n : algebra) {
        out.push_back(Check::skipped(n, "<< is not transitive"));
      }
      // The chain pattern is still reported; it is expected to fail here.
      auto r       = chain_conditions(c, *P);
      r.applicable = false;
      r.note       = "<< is not transitive";
      out.push_back(std::move(r));
      for (auto const* n : smooth) {
        if (std::string(n) != "chain_conditions") {
          out.push_back(Check::skipped(n, "<< is not transitive"));
        }
      }
      return rep;
    }

    StarAlgebra A = build_star_algebra(S, *P);
    rep.smooth    = A.smooth();
    out.push_back(star_on_basis(c, A));
    out.push_back(Z_homomorphism(c, A, opts));
    out.push_back(dual_paths(c, A));
    if (!rep.smooth || !S.unital()) {
      std::string why = !rep.smooth ? "not smooth" : "not unital";
      for (auto const* n : smooth) {
        out.push_back(Check::skipped(n, why));
      }
      return rep;
    }
    out.push_back(chain_conditions(c, *P));
    out.push_back(xi_support(c, A, A.imposed_condition()));
    out.push_back(star_support(c, A));
    out.push_back(xi_at_st_plus(c, A));
    out.push_back(block_reduction(S));
    return rep;
  }

  std::string format_verify(VerifyReport const& rep) {
    std::string out = rep.name + "\n";
    out += std::string("  singleton-rich: ") + (rep.singleton_rich ? "yes" : "no")
           + "\n";
    out += std::string("  << transitive: ") + (rep.ll_transitive ? "yes" : "no")
           + "\n";
    for (auto const& ch : rep.non_transitive_chains) {
      out += "    witness: " + ch + "\n";
    }
    out += std::string("  smooth: ") + (rep.smooth ? "yes" : "no") + "\n";
    for (auto const& r : rep.results) {
      std::string status = !r.applicable ? "SKIP" : r.holds ? "PASS" : "FAIL";
      out += "  " + status + " " + r.name;
      if (r.applicable || r.checked > 0) {
        out += " (" + std::to_string(r.checked) + " checked)";
      }
      if (!r.note.empty()) {
        out += " [" + r.note + "]";
      }
      out += "\n";
      for (auto const& w : r.witnesses) {
        out += "    " + w + "\n";
      }
    }
    out += std::string("result: ") + (rep.ok() ? "ok" : "property violation")
           + "\n";
    return out;
  }

}  // namespace semidet
