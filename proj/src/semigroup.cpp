#include "semidet/semigroup.hpp"

#include <algorithm>
#include <stdexcept>

#include "semidet/linear_solve.hpp"

namespace semidet {

  namespace {

    std::vector<ElementId> sorted_members(std::vector<char> const& in) {
      std::vector<ElementId> out;
      for (ElementId s = 0; s < in.size(); ++s) {
        if (in[s]) {
          out.push_back(s);
        }
      }
      return out;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // FiniteSemigroup
  ////////////////////////////////////////////////////////////////////////

  FiniteSemigroup FiniteSemigroup::validate(Table const&             table,
                                            std::vector<std::string> names,
                                            std::optional<ElementId> zero) {
    std::size_t const n = table.size();
    if (n == 0) {
      throw BadTable("a semigroup must have at least one element");
    }
    if (names.size() != n) {
      throw BadTable("expected " + std::to_string(n) + " names, found "
                     + std::to_string(names.size()));
    }
    {
      auto sorted = names;
      std::sort(sorted.begin(), sorted.end());
      auto it = std::adjacent_find(sorted.begin(), sorted.end());
      if (it != sorted.end()) {
        throw BadTable("duplicate element name \"" + *it + "\"");
      }
    }
    FiniteSemigroup S;
    S._n = n;
    S._names = std::move(names);
    S._table.reserve(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      if (table[a].size() != n) {
        throw BadTable("row " + std::to_string(a) + " has "
                       + std::to_string(table[a].size()) + " entries, expected "
                       + std::to_string(n));
      }
      for (ElementId x : table[a]) {
        if (x >= n) {
          throw BadTable("table entry " + std::to_string(x) + " out of range");
        }
        S._table.push_back(x);
      }
    }
    for (ElementId a = 0; a < n; ++a) {
      for (ElementId b = 0; b < n; ++b) {
        ElementId ab = S.product(a, b);
        for (ElementId c = 0; c < n; ++c) {
          if (S.product(ab, c) != S.product(a, S.product(b, c))) {
            throw NotAssociative(a, b, c, S._names);
          }
        }
      }
    }

    if (zero) {
      if (*zero >= n) {
        throw BadTable("declared zero out of range");
      }
      for (ElementId s = 0; s < n; ++s) {
        if (S.product(*zero, s) != *zero || S.product(s, *zero) != *zero) {
          throw BadZero(*zero, s, S._names);
        }
      }
      S._zero = zero;
    } else {
      for (ElementId z = 0; z < n && !S._zero; ++z) {
        bool absorbing = true;
        for (ElementId s = 0; s < n && absorbing; ++s) {
          absorbing = S.product(z, s) == z && S.product(s, z) == z;
        }
        if (absorbing) {
          S._zero = z;
        }
      }
    }

    S._idempotents = semidet::idempotents(S);

    S._singleton_rich = true;
    S._star.assign(n, 0);
    S._plus.assign(n, 0);
    for (ElementId s = 0; s < n; ++s) {
      try {
        auto [ss, pp] = star_plus(S, s);
        if (ss.size() != 1 || pp.size() != 1) {
          S._singleton_rich = false;
        } else {
          S._star[s] = ss[0];
          S._plus[s] = pp[0];
        }
      } catch (EmptyPhiSet const& e) {
        S._singleton_rich = false;
        S._empty_phi      = std::make_pair(e.element, e.side);
        break;
      }
    }
    if (!S._singleton_rich) {
      S._star.clear();
      S._plus.clear();
    }

    S._identity = unital_check(S).identity;
    return S;
  }

  std::optional<ElementId> FiniteSemigroup::find(std::string_view nm) const {
    for (ElementId s = 0; s < _n; ++s) {
      if (_names[s] == nm) {
        return s;
      }
    }
    return std::nullopt;
  }

  ElementId FiniteSemigroup::at(std::string_view nm) const {
    auto s = find(nm);
    if (!s) {
      throw std::out_of_range("no element named \"" + std::string(nm) + "\"");
    }
    return *s;
  }

  ElementId FiniteSemigroup::star(ElementId s) const {
    if (!_singleton_rich) {
      throw NotSingletonRich(s);
    }
    return _star[s];
  }

  ElementId FiniteSemigroup::plus(ElementId s) const {
    if (!_singleton_rich) {
      throw NotSingletonRich(s);
    }
    return _plus[s];
  }

  Table FiniteSemigroup::table() const {
    Table t(_n, std::vector<ElementId>(_n));
    for (ElementId a = 0; a < _n; ++a) {
      for (ElementId b = 0; b < _n; ++b) {
        t[a][b] = product(a, b);
      }
    }
    return t;
  }

  AlgebraVector FiniteSemigroup::multiply(AlgebraVector const& a,
                                          AlgebraVector const& b) const {
    AlgebraVector out(_n);
    for (ElementId s : a.support()) {
      for (ElementId t : b.support()) {
        out[product(s, t)] += a[s] * b[t];
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Free functions
  ////////////////////////////////////////////////////////////////////////

  std::vector<ElementId> idempotents(FiniteSemigroup const& S) {
    std::vector<ElementId> out;
    for (ElementId s = 0; s < S.order(); ++s) {
      if (S.is_idempotent(s)) {
        out.push_back(s);
      }
    }
    return out;
  }

  bool nat_leq(FiniteSemigroup const& S, ElementId e, ElementId f) {
    if (!S.is_idempotent(e)) {
      throw NotIdempotent(e);
    }
    if (!S.is_idempotent(f)) {
      throw NotIdempotent(f);
    }
    return S.product(e, f) == e && S.product(f, e) == e;
  }

  ElementId omega_power(FiniteSemigroup const& S, ElementId s) {
    // Some power s^k with k <= |S| is idempotent, and it is unique.
    ElementId p = s;
    for (std::size_t k = 0; k <= S.order(); ++k) {
      if (S.is_idempotent(p)) {
        return p;
      }
      p = S.product(p, s);
    }
    throw IterationCapExceeded("omega power", S.order());
  }

  SubsemigroupClosure closure(FiniteSemigroup const&        S,
                              std::vector<ElementId> const& gens) {
    std::vector<char>      in(S.order(), 0);
    std::vector<ElementId> elts;
    for (ElementId g : gens) {
      if (!in[g]) {
        in[g] = 1;
        elts.push_back(g);
      }
    }
    // elts[i] * g for every generator g suffices: every element is a product
    // of generators.
    for (std::size_t i = 0; i < elts.size(); ++i) {
      for (ElementId g : gens) {
        ElementId x = S.product(elts[i], g);
        if (!in[x]) {
          in[x] = 1;
          elts.push_back(x);
        }
      }
    }
    auto sorted_gens = gens;
    std::sort(sorted_gens.begin(), sorted_gens.end());
    sorted_gens.erase(std::unique(sorted_gens.begin(), sorted_gens.end()),
                      sorted_gens.end());
    return {std::move(sorted_gens), sorted_members(in)};
  }

  std::vector<ElementId> kernel(FiniteSemigroup const&     S,
                                SubsemigroupClosure const& T) {
    std::size_t const n = S.order();
    std::vector<char> result(n, 0);
    for (ElementId x : T.elements) {
      result[x] = 1;
    }
    for (ElementId a : T.elements) {
      // T^1 a T^1
      std::vector<char> ideal(n, 0);
      ideal[a] = 1;
      for (ElementId x : T.elements) {
        ideal[S.product(x, a)] = 1;
        ideal[S.product(a, x)] = 1;
        for (ElementId y : T.elements) {
          ideal[S.product(x, a, y)] = 1;
        }
      }
      for (ElementId s = 0; s < n; ++s) {
        result[s] = result[s] && ideal[s];
      }
    }
    return sorted_members(result);
  }

  std::pair<std::vector<ElementId>, std::vector<ElementId>>
  phi_sets(FiniteSemigroup const& S, ElementId s) {
    std::vector<ElementId> right, left;
    for (ElementId e : S.idempotents()) {
      if (S.product(s, e) == s) {
        right.push_back(e);
      }
      if (S.product(e, s) == s) {
        left.push_back(e);
      }
    }
    return {std::move(right), std::move(left)};
  }

  std::pair<std::vector<ElementId>, std::vector<ElementId>>
  star_plus(FiniteSemigroup const& S, ElementId s) {
    auto [right, left] = phi_sets(S, s);
    if (right.empty()) {
      throw EmptyPhiSet(s, Side::star);
    }
    if (left.empty()) {
      throw EmptyPhiSet(s, Side::plus);
    }
    return {kernel(S, closure(S, right)), kernel(S, closure(S, left))};
  }

  bool is_singleton_rich(FiniteSemigroup const& S) {
    if (auto const& e = S.empty_phi()) {
      throw EmptyPhiSet(e->first, e->second);
    }
    return S.singleton_rich();
  }

  std::vector<ElementId> const& TildeClasses::left_of(ElementId e) const {
    auto it = std::lower_bound(idempotents.begin(), idempotents.end(), e);
    if (it == idempotents.end() || *it != e) {
      throw NotIdempotent(e);
    }
    return left[it - idempotents.begin()];
  }

  std::vector<ElementId> const& TildeClasses::right_of(ElementId e) const {
    auto it = std::lower_bound(idempotents.begin(), idempotents.end(), e);
    if (it == idempotents.end() || *it != e) {
      throw NotIdempotent(e);
    }
    return right[it - idempotents.begin()];
  }

  TildeClasses tilde_classes(FiniteSemigroup const& S) {
    TildeClasses tc;
    tc.idempotents = S.idempotents();
    tc.left.resize(tc.idempotents.size());
    tc.right.resize(tc.idempotents.size());
    auto index_of = [&tc](ElementId e) {
      return std::lower_bound(tc.idempotents.begin(), tc.idempotents.end(), e)
             - tc.idempotents.begin();
    };
    for (ElementId s = 0; s < S.order(); ++s) {
      tc.left[index_of(S.star(s))].push_back(s);
      tc.right[index_of(S.plus(s))].push_back(s);
    }
    return tc;
  }

  UnitalResult unital_check(FiniteSemigroup const& S) {
    std::size_t const n = S.order();
    // Unknown c_t; equation for every (s, u) and each side:
    //   sum_t c_t [t s = u] = [u = s],   sum_t c_t [s t = u] = [u = s].
    std::vector<std::vector<mpq_class>> A;
    std::vector<mpq_class>              b;
    A.reserve(2 * n * n);
    for (ElementId s = 0; s < n; ++s) {
      for (int side = 0; side < 2; ++side) {
        for (ElementId u = 0; u < n; ++u) {
          std::vector<mpq_class> row(n, mpq_class(0));
          for (ElementId t = 0; t < n; ++t) {
            ElementId p = side == 0 ? S.product(t, s) : S.product(s, t);
            if (p == u) {
              row[t] += 1;
            }
          }
          A.push_back(std::move(row));
          b.emplace_back(u == s ? 1 : 0);
        }
      }
    }
    auto x = solve_linear_system(std::move(A), std::move(b));
    if (!x) {
      return {};
    }
    return {true, AlgebraVector(std::move(*x))};
  }

}  // namespace semidet
