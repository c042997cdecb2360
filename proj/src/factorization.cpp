#include "semidet/factorization.hpp"

#include <algorithm>
#include <functional>

namespace semidet {

  namespace {

    Integer as_integer(Rational const& q) {
      if (q.get_den() != 1) {
        throw Error("structure constant " + q.get_str() + " is not an integer");
      }
      return q.get_num();
    }

    bool contains(std::vector<ElementId> const& v, ElementId x) {
      return std::find(v.begin(), v.end(), x) != v.end();
    }

  }  // namespace

  std::vector<ElementId> basis_labels(FiniteSemigroup const& S, bool contracted) {
    if (contracted && !S.has_zero()) {
      throw NoZeroElement();
    }
    std::vector<ElementId> out;
    for (ElementId s = 0; s < S.order(); ++s) {
      if (!(contracted && S.is_zero(s))) {
        out.push_back(s);
      }
    }
    return out;
  }

  SymbolicMatrix cayley(FiniteSemigroup const& S) {
    auto           labels = basis_labels(S, false);
    SymbolicMatrix C(labels, labels);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      for (std::size_t j = 0; j < labels.size(); ++j) {
        C.at(i, j) = MultiPoly::var(S.product(labels[i], labels[j]));
      }
    }
    return C;
  }

  SymbolicMatrix cayley_contracted(FiniteSemigroup const& S) {
    auto           labels = basis_labels(S, true);
    SymbolicMatrix C(labels, labels);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      for (std::size_t j = 0; j < labels.size(); ++j) {
        ElementId p = S.product(labels[i], labels[j]);
        if (!S.is_zero(p)) {
          C.at(i, j) = MultiPoly::var(p);
        }
      }
    }
    return C;
  }

  MultiPoly theta(FiniteSemigroup const& S, std::size_t max_dim) {
    return determinant(cayley(S), max_dim);
  }

  MultiPoly theta_contracted(FiniteSemigroup const& S, std::size_t max_dim) {
    return determinant(cayley_contracted(S), max_dim);
  }

  SymbolicMatrix star_cayley(StarAlgebra const& A, bool contracted) {
    auto const&    S      = A.base();
    auto           labels = basis_labels(S, contracted);
    SymbolicMatrix C(labels, labels);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      for (std::size_t j = 0; j < labels.size(); ++j) {
        auto const& v = A.product(labels[i], labels[j]);
        MultiPoly   entry;
        for (ElementId u : v.support()) {
          if (!(contracted && S.is_zero(u))) {
            entry += MultiPoly::term(as_integer(v[u]), Monomial::var(u));
          }
        }
        C.at(i, j) = std::move(entry);
      }
    }
    return C;
  }

  BlockLayout build_M(StarAlgebra const& A, bool contracted) {
    auto const& S      = A.base();
    auto        labels = basis_labels(S, contracted);
    BlockLayout L;
    for (ElementId e : S.idempotents()) {
      if (!(contracted && S.is_zero(e))) {
        L.blocks.push_back(e);
      }
    }
    for (ElementId e : L.blocks) {
      for (ElementId s : labels) {
        if (S.star(s) == e) {
          L.row_order.push_back(s);
        }
        if (S.plus(s) == e) {
          L.col_order.push_back(s);
        }
      }
    }
    auto C   = star_cayley(A, contracted);
    L.matrix = C.permuted(L.row_order, L.col_order);
    L.parity = permutation_sign(labels, L.row_order)
               * permutation_sign(labels, L.col_order);
    return L;
  }

  namespace {

    // For each (row, target) in tau, the idempotents c+ that produced it.
    using Sources = std::map<std::pair<ElementId, ElementId>, std::vector<ElementId>>;

    TauState tau_with_sources(FiniteSemigroup const& S,
                              SymbolicMatrix         matrix,
                              Sources*               sources) {
      TauState st;
      auto const& rows = matrix.row_labels();
      auto const& cols = matrix.col_labels();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        ElementId r = rows[i];
        auto&     targets = st.tau[r];
        for (std::size_t j = 0; j < cols.size(); ++j) {
          ElementId cp = S.plus(cols[j]);
          if (S.star(r) == cp || matrix.at(i, j).is_zero()) {
            continue;
          }
          ElementId q = S.product(r, cp);
          if (!contains(targets, q)) {
            targets.push_back(q);
          }
          if (sources) {
            auto& src = (*sources)[{r, q}];
            if (!contains(src, cp)) {
              src.push_back(cp);
            }
          }
        }
        std::sort(targets.begin(), targets.end());
      }
      for (ElementId r : rows) {
        if (st.tau[r].empty()) {
          st.R_prime.push_back(r);
        }
      }
      for (ElementId r : rows) {
        auto const& t = st.tau[r];
        if (!t.empty() && std::all_of(t.begin(), t.end(), [&](ElementId q) {
              return contains(st.R_prime, q);
            })) {
          st.R_double_prime.push_back(r);
        }
      }
      std::sort(st.R_prime.begin(), st.R_prime.end());
      std::sort(st.R_double_prime.begin(), st.R_double_prime.end());
      st.matrix = std::move(matrix);
      return st;
    }

    // Throws NotTauTerminate if some row reaches itself under tau, or tau
    // leaves the row labels.
    void check_tau_terminate(FiniteSemigroup const& S, TauState const& st) {
      auto const& rows = st.matrix.row_labels();
      for (auto const& [r, targets] : st.tau) {
        for (ElementId q : targets) {
          if (!contains(rows, q)) {
            throw NotTauTerminate("row " + S.name(r) + " maps to " + S.name(q)
                                  + ", which is not a row");
          }
        }
      }
      // 0 = unvisited, 1 = on stack, 2 = done
      std::map<ElementId, int>            mark;
      std::function<void(ElementId)>      dfs = [&](ElementId r) {
        mark[r] = 1;
        for (ElementId q : st.tau.at(r)) {
          if (mark[q] == 1) {
            throw NotTauTerminate("row " + S.name(q) + " lies on a tau-cycle");
          }
          if (mark[q] == 0) {
            dfs(q);
          }
        }
        mark[r] = 2;
      };
      for (ElementId r : rows) {
        if (mark[r] == 0) {
          dfs(r);
        }
      }
    }

  }  // namespace

  TauState tau_step(FiniteSemigroup const& S, SymbolicMatrix matrix) {
    return tau_with_sources(S, std::move(matrix), nullptr);
  }

  TauState eta(StarAlgebra const& A, TauState const& state) {
    auto const& S = A.base();
    auto const& P = A.poset();
    Sources     sources;
    // Recompute with sources so the idempotent c+ of each target is known.
    TauState    cur = tau_with_sources(S, state.matrix, &sources);

    SymbolicMatrix const& M = cur.matrix;
    SymbolicMatrix        out = M;
    auto const&           rows = M.row_labels();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      ElementId r = rows[i];
      for (ElementId q : cur.tau.at(r)) {
        if (!contains(cur.R_prime, q)) {
          continue;
        }
        auto const& src = sources.at({r, q});
        if (src.size() != 1) {
          throw PreconditionFailed("eta: row " + S.name(r) + " reaches "
                                   + S.name(q)
                                   + " through more than one idempotent");
        }
        std::int64_t k = row_coefficient(S, P, r, src.front());
        if (k == 0) {
          continue;
        }
        std::size_t qi = M.row_index(q);
        MultiPoly   kk(static_cast<long>(k));
        for (std::size_t j = 0; j < M.cols(); ++j) {
          if (!M.at(qi, j).is_zero()) {
            out.at(i, j) -= kk * M.at(qi, j);
          }
        }
      }
    }
    return tau_step(S, std::move(out));
  }

  Reduction reduce_to_M_prime(StarAlgebra const& A, SymbolicMatrix const& M) {
    auto const& S     = A.base();
    TauState    state = tau_step(S, M);
    std::size_t const cap = S.order();
    Reduction   red;
    while (state.R_prime.size() != state.matrix.rows()) {
      check_tau_terminate(S, state);
      if (red.iterations >= cap) {
        throw NotTauTerminate("eta did not converge within "
                              + std::to_string(cap) + " iterations");
      }
      state = eta(A, state);
      ++red.iterations;
    }
    red.matrix = std::move(state.matrix);
    return red;
  }

  SymbolicMatrix block_mask(FiniteSemigroup const& S, SymbolicMatrix const& M) {
    SymbolicMatrix out = M;
    for (std::size_t i = 0; i < M.rows(); ++i) {
      for (std::size_t j = 0; j < M.cols(); ++j) {
        if (S.star(M.row_labels()[i]) != S.plus(M.col_labels()[j])) {
          out.at(i, j) = MultiPoly();
        }
      }
    }
    return out;
  }

  std::map<VarId, MultiPoly> y_substitution(FiniteSemigroup const& S,
                                            LLPoset const&         P,
                                            bool                   contracted) {
    std::map<VarId, MultiPoly> y;
    for (ElementId s : basis_labels(S, contracted)) {
      MultiPoly ys;
      for (ElementId t : P.down_set(s)) {
        if (contracted && S.is_zero(t)) {
          continue;
        }
        if (auto m = P.mobius(t, s); m != 0) {
          ys += MultiPoly::term(Integer(static_cast<long>(m)), Monomial::var(t));
        }
      }
      y.emplace(s, std::move(ys));
    }
    return y;
  }

  FactorizationResult factorize(FiniteSemigroup const& S, std::size_t max_dim) {
    if (!S.singleton_rich()) {
      throw PreconditionFailed("singleton_rich");
    }
    if (!S.unital()) {
      throw PreconditionFailed("unital");
    }
    LLPoset P = build_poset(S);
    if (!P.is_transitive()) {
      throw PreconditionFailed("ll_transitive");
    }
    StarAlgebra A = build_star_algebra(S, P);
    if (!A.smooth()) {
      throw PreconditionFailed("smooth");
    }

    FactorizationResult res;
    res.contracted = S.has_zero();
    res.theta      = theta(S, max_dim);
    if (res.contracted) {
      res.theta_contracted = theta_contracted(S, max_dim);
    }
    res.star_matrix = star_cayley(A, res.contracted);
    res.layout      = build_M(A, res.contracted);

    auto red           = reduce_to_M_prime(A, res.layout.matrix);
    res.M_prime        = std::move(red.matrix);
    res.eta_iterations = red.iterations;
    res.reduction_is_mask
        = res.M_prime == block_mask(S, res.layout.matrix);

    MultiPoly det_star = determinant(res.star_matrix, max_dim);
    MultiPoly det_M    = determinant(res.layout.matrix, max_dim);
    res.parity_consistent
        = det_M == (res.layout.parity > 0 ? det_star : -det_star);
    res.reduction_preserves = determinant(res.M_prime, max_dim) == det_M;

    auto y     = y_substitution(S, P, res.contracted);
    res.product = MultiPoly(1);
    res.nonzero = true;
    for (ElementId e : res.layout.blocks) {
      FactorBlock b;
      b.idempotent = e;
      for (ElementId r : res.layout.row_order) {
        if (S.star(r) == e) {
          b.rows.push_back(r);
        }
      }
      for (ElementId c : res.layout.col_order) {
        if (S.plus(c) == e) {
          b.cols.push_back(c);
        }
      }
      b.matrix = res.M_prime.submatrix(b.rows, b.cols);
      // A non-square diagonal block forces det M' = 0.
      b.det = b.rows.size() == b.cols.size() ? determinant(b.matrix, max_dim)
                                             : MultiPoly();
      b.det_substituted = substitute_linear(b.det, y);
      res.nonzero       = res.nonzero && !b.det_substituted.is_zero();
      res.product *= b.det_substituted;
      res.blocks.push_back(std::move(b));
    }

    MultiPoly const& ref = res.reference();
    if (res.product == ref) {
      res.sign     = 1;
      res.verified = true;
    } else if (res.product == -ref) {
      res.sign     = -1;
      res.verified = true;
    }
    return res;
  }

}  // namespace semidet
