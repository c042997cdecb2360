// Finite semigroups given by Cayley tables, together with the idempotent
// structure used throughout the library: idempotents, the natural order on
// them, the sets of idempotent one-sided identities of an element, their
// kernels s** and s++, and the singleton projections s* and s+.

#ifndef SEMIDET_SEMIGROUP_HPP_
#define SEMIDET_SEMIGROUP_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semidet/algebra_vector.hpp"
#include "semidet/errors.hpp"

namespace semidet {

  using Table = std::vector<std::vector<ElementId>>;

  // A validated finite semigroup. Immutable once constructed; every query is
  // const and safe to call concurrently.
  class FiniteSemigroup {
   public:
    // Checks shape, range and associativity of `table` and populates all
    // caches. If `declared_zero` is given it must be absorbing (BadZero);
    // otherwise an absorbing element, if there is one, is detected and used as
    // the zero.
    static FiniteSemigroup validate(Table const&                table,
                                    std::vector<std::string>    names,
                                    std::optional<ElementId>    declared_zero
                                    = std::nullopt);

    std::size_t order() const noexcept {
      return _n;
    }

    ElementId product(ElementId a, ElementId b) const noexcept {
      return _table[a * _n + b];
    }

    ElementId product(ElementId a, ElementId b, ElementId c) const noexcept {
      return product(product(a, b), c);
    }

    std::string const& name(ElementId s) const {
      return _names[s];
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    std::optional<ElementId> find(std::string_view name) const;

    // Like find, but throws std::out_of_range for unknown names.
    ElementId at(std::string_view name) const;

    std::optional<ElementId> zero() const noexcept {
      return _zero;
    }

    bool has_zero() const noexcept {
      return _zero.has_value();
    }

    bool is_zero(ElementId s) const noexcept {
      return _zero && *_zero == s;
    }

    std::vector<ElementId> const& idempotents() const noexcept {
      return _idempotents;
    }

    bool is_idempotent(ElementId s) const noexcept {
      return product(s, s) == s;
    }

    bool singleton_rich() const noexcept {
      return _singleton_rich;
    }

    // s* and s+; throw NotSingletonRich if the projections are not defined.
    ElementId star(ElementId s) const;
    ElementId plus(ElementId s) const;

    bool unital() const noexcept {
      return _identity.has_value();
    }

    std::optional<AlgebraVector> const& identity() const noexcept {
      return _identity;
    }

    Table table() const;

    // Product in the semigroup algebra QS.
    AlgebraVector multiply(AlgebraVector const& a, AlgebraVector const& b) const;

    // The element s and side for which a phi-set is empty, if any.
    std::optional<std::pair<ElementId, Side>> const& empty_phi() const noexcept {
      return _empty_phi;
    }

   private:
    FiniteSemigroup() = default;

    std::size_t                                _n = 0;
    std::vector<ElementId>                     _table;
    std::vector<std::string>                   _names;
    std::optional<ElementId>                   _zero;
    std::vector<ElementId>                     _idempotents;
    bool                                       _singleton_rich = false;
    std::vector<ElementId>                     _star;
    std::vector<ElementId>                     _plus;
    std::optional<AlgebraVector>               _identity;
    std::optional<std::pair<ElementId, Side>>  _empty_phi;
  };

  struct SubsemigroupClosure {
    std::vector<ElementId> generators;
    std::vector<ElementId> elements;  // sorted
  };

  // Sorted list of {e : ee = e}.
  std::vector<ElementId> idempotents(FiniteSemigroup const& S);

  // Natural order on idempotents: e <= f iff ef = fe = e.
  bool nat_leq(FiniteSemigroup const& S, ElementId e, ElementId f);

  // The unique idempotent power of s.
  ElementId omega_power(FiniteSemigroup const& S, ElementId s);

  SubsemigroupClosure closure(FiniteSemigroup const&        S,
                              std::vector<ElementId> const& gens);

  // Minimal two-sided ideal of T, the intersection of all T^1 a T^1.
  std::vector<ElementId> kernel(FiniteSemigroup const&     S,
                                SubsemigroupClosure const& T);

  // (phi*(s), phi+(s)): idempotent right and left identities of s.
  std::pair<std::vector<ElementId>, std::vector<ElementId>>
  phi_sets(FiniteSemigroup const& S, ElementId s);

  // (s**, s++); throws EmptyPhiSet if either phi-set is empty.
  std::pair<std::vector<ElementId>, std::vector<ElementId>>
  star_plus(FiniteSemigroup const& S, ElementId s);

  // Throws EmptyPhiSet when some phi-set is empty.
  bool is_singleton_rich(FiniteSemigroup const& S);

  // For each idempotent e (in element order), L~_e = {s : s* = e} and
  // R~_e = {s : s+ = e}.
  struct TildeClasses {
    std::vector<ElementId>              idempotents;
    std::vector<std::vector<ElementId>> left;
    std::vector<std::vector<ElementId>> right;

    std::vector<ElementId> const& left_of(ElementId e) const;
    std::vector<ElementId> const& right_of(ElementId e) const;
  };

  TildeClasses tilde_classes(FiniteSemigroup const& S);

  struct UnitalResult {
    bool                         unital = false;
    std::optional<AlgebraVector> identity;
  };

  // Solves sum_t c_t (t s) = s and sum_t c_t (s t) = s over Q.
  UnitalResult unital_check(FiniteSemigroup const& S);

}  // namespace semidet

#endif  // SEMIDET_SEMIGROUP_HPP_
