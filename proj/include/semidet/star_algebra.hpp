// The restricted products # and #^e, the multiplication * obtained by
// transporting the semigroup product along Z, the integer function xi that
// expresses * in the original basis, and the smoothness predicates.
//
// All constructions here assume << is transitive (so << and <<< coincide)
// and throw NotTransitive otherwise.

#ifndef SEMIDET_STAR_ALGEBRA_HPP_
#define SEMIDET_STAR_ALGEBRA_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semidet/algebra_vector.hpp"
#include "semidet/poset.hpp"
#include "semidet/semigroup.hpp"
#include "semidet/sequences.hpp"

namespace semidet {

  // s # t = st if s+ = (st)+, t* = (st)* and s* = t+; otherwise the algebra
  // zero, represented by std::nullopt.
  std::optional<ElementId> sharp(FiniteSemigroup const& S,
                                 ElementId              s,
                                 ElementId              t);

  // As sharp, additionally requiring s* = t+ = e.
  std::optional<ElementId> sharp_e(FiniteSemigroup const& S,
                                   ElementId              s,
                                   ElementId              t,
                                   ElementId              e);

  // Z(s) * Z(t) computed from its defining double sum over s' << s, t' << t
  // of s' #^e t' with e = phi_hat(s'+ s, t t'*).
  AlgebraVector star_on_Z(FiniteSemigroup const& S,
                          LLPoset const&         P,
                          SequenceTables const&  seq,
                          ElementId              s,
                          ElementId              t);
  AlgebraVector star_on_Z(FiniteSemigroup const& S,
                          LLPoset const&         P,
                          ElementId              s,
                          ElementId              t);

  // s * t = sum mu(s', s) mu(t', t) Z(s') * Z(t') with each Z(s') * Z(t')
  // taken from star_on_Z.
  AlgebraVector star_via_double_sum(FiniteSemigroup const& S,
                                    LLPoset const&         P,
                                    SequenceTables const&  seq,
                                    ElementId              s,
                                    ElementId              t);

  // xi(s'', t'') for the pair (s, t); requires s'' << s and t'' << t.
  std::int64_t xi(FiniteSemigroup const& S,
                  LLPoset const&         P,
                  SequenceTables const&  seq,
                  ElementId              s,
                  ElementId              t,
                  ElementId              s2,
                  ElementId              t2);
  std::int64_t xi(FiniteSemigroup const& S,
                  LLPoset const&         P,
                  ElementId              s,
                  ElementId              t,
                  ElementId              s2,
                  ElementId              t2);

  // s * t = sum over s'' << s, t'' << t of xi(s'', t'') s''t''.
  AlgebraVector star_via_xi(FiniteSemigroup const& S,
                            LLPoset const&         P,
                            SequenceTables const&  seq,
                            ElementId              s,
                            ElementId              t);

  // sum of mu(r', r) over r e << r' << r with e <= (r+ r')*. This is the
  // coefficient of rt in r * t when r* != t+ = e, and the multiplier used by
  // the row reduction of the factorisation.
  std::int64_t row_coefficient(FiniteSemigroup const& S,
                               LLPoset const&         P,
                               ElementId              r,
                               ElementId              e);

  struct PredicateReport {
    bool                     holds = true;
    std::size_t              checked = 0;
    std::vector<std::string> witnesses;  // at most 10
  };

  // The three smoothness conditions over chains s'' << s' << s and
  // t'' << t' << t. Each condition is quantified over exactly the variables
  // it mentions.
  PredicateReport is_smooth(FiniteSemigroup const& S,
                            LLPoset const&         P,
                            SequenceTables const&  seq);
  PredicateReport is_smooth(FiniteSemigroup const& S, LLPoset const& P);

  // For all s'' << s and t: among the x with s'' << x << s and
  // phi(s''+ x, t) != t+, any two have a common lower bound in that set.
  PredicateReport imposed_condition(FiniteSemigroup const& S,
                                    LLPoset const&         P);

  class StarAlgebra {
   public:
    FiniteSemigroup const& base() const noexcept {
      return _base;
    }

    LLPoset const& poset() const noexcept {
      return _poset;
    }

    SequenceTables const& sequences() const noexcept {
      return _seq;
    }

    // s * t in the basis S.
    AlgebraVector const& product(ElementId s, ElementId t) const {
      return _table[s * _base.order() + t];
    }

    // Bilinear extension of product.
    AlgebraVector multiply(AlgebraVector const& a, AlgebraVector const& b) const;

    bool smooth() const noexcept {
      return _smooth;
    }

    bool imposed_condition() const noexcept {
      return _imposed;
    }

    friend StarAlgebra build_star_algebra(FiniteSemigroup const& S,
                                          LLPoset const&         P);

   private:
    StarAlgebra(FiniteSemigroup const& S, LLPoset const& P)
        : _base(S), _poset(P), _seq(S) {}

    FiniteSemigroup            _base;
    LLPoset                    _poset;
    SequenceTables             _seq;
    std::vector<AlgebraVector> _table;
    bool                       _smooth  = false;
    bool                       _imposed = false;
  };

  // s * t := Z(Z^-1(s) Z^-1(t)). Throws NotTransitive.
  StarAlgebra build_star_algebra(FiniteSemigroup const& S, LLPoset const& P);

}  // namespace semidet

#endif  // SEMIDET_STAR_ALGEBRA_HPP_
