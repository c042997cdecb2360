// Cayley matrices, semigroup determinants, and the block factorisation of
// the determinant of a smooth semigroup.
//
// The factorisation works in the basis of the star algebra: its Cayley
// matrix is rearranged into M (rows grouped by s*, columns by s+), reduced by
// the row operation eta until every row is confined to its diagonal block
// (the matrix M'), and the determinants of the blocks are mapped back to the
// original variables by y_s = sum_{t << s} mu(t, s) x_t.
//
// When the semigroup has a zero the whole pipeline runs on the contracted
// algebra (zero row, column and variable removed).

#ifndef SEMIDET_FACTORIZATION_HPP_
#define SEMIDET_FACTORIZATION_HPP_

#include <map>
#include <optional>
#include <vector>

#include "semidet/polynomial.hpp"
#include "semidet/semigroup.hpp"
#include "semidet/star_algebra.hpp"

namespace semidet {

  // Element labels used as matrix rows/columns: every element, or every
  // nonzero element when contracted.
  std::vector<ElementId> basis_labels(FiniteSemigroup const& S, bool contracted);

  // C(S)[s, t] = x_{st}.
  SymbolicMatrix cayley(FiniteSemigroup const& S);

  // C~(S)[s, t] = x_{st} if st != 0, else 0. Throws NoZeroElement.
  SymbolicMatrix cayley_contracted(FiniteSemigroup const& S);

  MultiPoly theta(FiniteSemigroup const& S, std::size_t max_dim = default_max_dim);
  MultiPoly theta_contracted(FiniteSemigroup const& S,
                             std::size_t            max_dim = default_max_dim);

  // Entry (s, t) = sum_u [s * t]_u x_u.
  SymbolicMatrix star_cayley(StarAlgebra const& A, bool contracted);

  struct BlockLayout {
    SymbolicMatrix         matrix;      // M
    std::vector<ElementId> blocks;      // idempotents, in element order
    std::vector<ElementId> row_order;   // grouped by s*
    std::vector<ElementId> col_order;   // grouped by s+
    int                    parity = 1;  // det(M) = parity * det(input)
  };

  BlockLayout build_M(StarAlgebra const& A, bool contracted);

  struct TauState {
    SymbolicMatrix                             matrix;
    std::map<ElementId, std::vector<ElementId>> tau;  // row -> sorted targets
    std::vector<ElementId>                     R_prime;
    std::vector<ElementId>                     R_double_prime;
  };

  // tau(r) = { r c+ : c a column, r* != c+, A[r, c] != 0 },
  // R' = { r : tau(r) empty }, R'' = { r not in R' : tau(r) subset of R' }.
  TauState tau_step(FiniteSemigroup const& S, SymbolicMatrix matrix);

  // One application of eta followed by tau_step.
  TauState eta(StarAlgebra const& A, TauState const& state);

  // Iterates eta until R' is every row; at most |S| iterations. Throws
  // NotTauTerminate on a tau-cycle or when the cap is exceeded.
  struct Reduction {
    SymbolicMatrix matrix;
    std::size_t    iterations = 0;
  };
  Reduction reduce_to_M_prime(StarAlgebra const& A, SymbolicMatrix const& M);

  // M with every entry outside the L~_e x R~_e blocks set to zero.
  SymbolicMatrix block_mask(FiniteSemigroup const& S, SymbolicMatrix const& M);

  struct FactorBlock {
    ElementId              idempotent;
    std::vector<ElementId> rows;  // L~_e
    std::vector<ElementId> cols;  // R~_e
    SymbolicMatrix         matrix;
    MultiPoly              det;              // in the x variables
    MultiPoly              det_substituted;  // after x_s -> y_s
  };

  struct FactorizationResult {
    bool                     contracted = false;
    MultiPoly                theta;  // full determinant
    std::optional<MultiPoly> theta_contracted;
    std::vector<FactorBlock> blocks;
    MultiPoly                product;  // product of det_substituted
    int                      sign     = 0;
    bool                     verified = false;
    bool                     nonzero  = false;
    // Supporting data.
    SymbolicMatrix           star_matrix;  // Cayley matrix of (S, *)
    BlockLayout              layout;
    SymbolicMatrix           M_prime;
    std::size_t              eta_iterations = 0;
    bool                     parity_consistent  = false;  // det M = parity det C*
    bool                     reduction_preserves = false;  // det M' = det M
    bool                     reduction_is_mask   = false;  // M' = block_mask(M)

    // The determinant the product was compared with.
    MultiPoly const& reference() const {
      return contracted ? *theta_contracted : theta;
    }
  };

  // y_s = sum_{t << s} mu(t, s) x_t over the basis labels.
  std::map<VarId, MultiPoly> y_substitution(FiniteSemigroup const& S,
                                            LLPoset const&         P,
                                            bool                   contracted);

  // Requires singleton-rich, unital, << transitive and smooth; otherwise
  // throws PreconditionFailed naming the first missing hypothesis.
  FactorizationResult factorize(FiniteSemigroup const& S,
                                std::size_t            max_dim = default_max_dim);

}  // namespace semidet

#endif  // SEMIDET_FACTORIZATION_HPP_
