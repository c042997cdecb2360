// Helpers shared by the test programs: fixture loading and brute-force
// reference implementations that do not use the library code they check.

#ifndef SEMIDET_TESTS_SUPPORT_HPP_
#define SEMIDET_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "semidet/io.hpp"
#include "semidet/polynomial.hpp"
#include "semidet/semigroup.hpp"

#ifndef SEMIDET_FIXTURES_DIR
#define SEMIDET_FIXTURES_DIR "fixtures"
#endif

namespace semidet::testing {

  inline FiniteSemigroup fixture(std::string const& name) {
    return load_semigroup(std::string(SEMIDET_FIXTURES_DIR) + "/" + name + ".sgp");
  }

  inline std::vector<std::string> const& fixture_names() {
    static std::vector<std::string> const names
        = {"s1", "s2", "s3", "s4", "s5", "trivial"};
    return names;
  }

  inline std::vector<std::string> const& smooth_fixture_names() {
    static std::vector<std::string> const names = {"s2", "s3", "s5", "trivial"};
    return names;
  }

  inline std::vector<std::string> names_of(FiniteSemigroup const&        S,
                                           std::vector<ElementId> const& xs) {
    std::vector<std::string> out;
    for (ElementId x : xs) {
      out.push_back(S.name(x));
    }
    return out;
  }

  inline std::set<std::string> name_set(FiniteSemigroup const&        S,
                                        std::vector<ElementId> const& xs) {
    auto v = names_of(S, xs);
    return {v.begin(), v.end()};
  }

  // Idempotents by scanning the diagonal.
  inline std::vector<ElementId> naive_idempotents(FiniteSemigroup const& S) {
    std::vector<ElementId> out;
    for (ElementId s = 0; s < S.order(); ++s) {
      if (S.product(s, s) == s) {
        out.push_back(s);
      }
    }
    return out;
  }

  // Subsemigroup generated by `gens`: repeat products until nothing is added.
  inline std::set<ElementId> naive_closure(FiniteSemigroup const&     S,
                                           std::set<ElementId> const& gens) {
    std::set<ElementId> T = gens;
    for (bool grew = true; grew;) {
      grew = false;
      std::vector<ElementId> v(T.begin(), T.end());
      for (ElementId a : v) {
        for (ElementId b : v) {
          grew = T.insert(S.product(a, b)).second || grew;
        }
      }
    }
    return T;
  }

  // Smallest ideal of T: the ideal generated by any element has size at
  // least the kernel, and the kernel is the unique ideal of minimal size
  // among the principal ideals T^1 a T^1.
  inline std::set<ElementId> naive_kernel(FiniteSemigroup const&     S,
                                          std::set<ElementId> const& T) {
    std::set<ElementId> best;
    for (ElementId a : T) {
      std::set<ElementId> I = {a};
      for (ElementId x : T) {
        I.insert(S.product(x, a));
        I.insert(S.product(a, x));
        for (ElementId y : T) {
          I.insert(S.product(x, a, y));
        }
      }
      if (best.empty() || I.size() < best.size()) {
        best = I;
      }
    }
    return best;
  }

  // (s**, s++) from the definitions.
  inline std::pair<std::set<ElementId>, std::set<ElementId>>
  naive_star_plus(FiniteSemigroup const& S, ElementId s) {
    std::set<ElementId> right, left;
    for (ElementId e : naive_idempotents(S)) {
      if (S.product(s, e) == s) {
        right.insert(e);
      }
      if (S.product(e, s) == s) {
        left.insert(e);
      }
    }
    return {right.empty() ? right : naive_kernel(S, naive_closure(S, right)),
            left.empty() ? left : naive_kernel(S, naive_closure(S, left))};
  }

  // s << t iff s in E^1 t E^1.
  inline bool naive_ll(FiniteSemigroup const& S, ElementId s, ElementId t) {
    if (s == t) {
      return true;
    }
    auto E = naive_idempotents(S);
    for (ElementId e : E) {
      if (S.product(e, t) == s || S.product(t, e) == s) {
        return true;
      }
      for (ElementId f : E) {
        if (S.product(e, t, f) == s) {
          return true;
        }
      }
    }
    return false;
  }

  // Moebius function of a partial order given as leq[x][y], by the
  // defining recursion mu(x, x) = 1, mu(x, y) = -sum_{x <= z < y} mu(x, z).
  inline std::int64_t naive_mobius(std::vector<std::vector<bool>> const& leq,
                                   std::size_t                           x,
                                   std::size_t                           y) {
    if (!leq[x][y]) {
      return 0;
    }
    if (x == y) {
      return 1;
    }
    std::int64_t sum = 0;
    for (std::size_t z = 0; z < leq.size(); ++z) {
      if (z != y && leq[x][z] && leq[z][y]) {
        sum += naive_mobius(leq, x, z);
      }
    }
    return -sum;
  }

  // Leibniz formula: sum over all permutations of signed products.
  inline MultiPoly leibniz_det(SymbolicMatrix const& A) {
    std::size_t const        n = A.rows();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    MultiPoly out;
    do {
      int inversions = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          inversions += p[i] > p[j];
        }
      }
      MultiPoly term(inversions % 2 == 0 ? 1 : -1);
      for (std::size_t i = 0; i < n && !term.is_zero(); ++i) {
        term *= A.at(i, p[i]);
      }
      out += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }

  // Square matrix with sparse random entries over `vars` variables.
  inline SymbolicMatrix random_matrix(std::mt19937_64& rng,
                                      std::size_t      n,
                                      std::size_t      vars) {
    std::vector<VarId> labels(n);
    std::iota(labels.begin(), labels.end(), 0);
    SymbolicMatrix                     A(labels, labels);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> var(0, static_cast<int>(vars) - 1);
    std::uniform_int_distribution<int> terms(0, 3);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        MultiPoly e;
        for (int k = terms(rng); k > 0; --k) {
          Monomial m = Monomial::var(var(rng));
          if (coeff(rng) > 0) {
            m = m * Monomial::var(var(rng));
          }
          e += MultiPoly::term(coeff(rng), m);
        }
        A.at(i, j) = e;
      }
    }
    return A;
  }

  // All associative n x n tables by trying every table.
  inline std::vector<Table> brute_force_tables(std::size_t n) {
    std::vector<Table>     out;
    std::size_t const      cells = n * n;
    std::vector<ElementId> flat(cells, 0);
    for (;;) {
      bool assoc = true;
      for (std::size_t a = 0; a < n && assoc; ++a) {
        for (std::size_t b = 0; b < n && assoc; ++b) {
          for (std::size_t c = 0; c < n && assoc; ++c) {
            assoc = flat[flat[a * n + b] * n + c] == flat[a * n + flat[b * n + c]];
          }
        }
      }
      if (assoc) {
        Table T(n, std::vector<ElementId>(n));
        for (std::size_t k = 0; k < cells; ++k) {
          T[k / n][k % n] = flat[k];
        }
        out.push_back(T);
      }
      std::size_t k = 0;
      while (k < cells && ++flat[k] == n) {
        flat[k++] = 0;
      }
      if (k == cells) {
        return out;
      }
    }
  }

  // Is there a bijection p with p(ab) = p(a)p(b) (or p(ab) = p(b)p(a))?
  inline bool naive_isomorphic(Table const& A, Table const& B, bool anti) {
    std::size_t const        n = A.size();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      bool iso = true, anti_iso = anti;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          iso      = iso && p[A[a][b]] == B[p[a]][p[b]];
          anti_iso = anti_iso && p[A[a][b]] == B[p[b]][p[a]];
        }
      }
      if (iso || anti_iso) {
        return true;
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
  }

}  // namespace semidet::testing

#endif  // SEMIDET_TESTS_SUPPORT_HPP_
