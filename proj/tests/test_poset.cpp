#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semidet/poset.hpp"

#include "support.hpp"

using namespace semidet;
using namespace semidet::testing;

namespace {

  std::set<std::string> Z_support(FiniteSemigroup const& S,
                                  LLPoset const&         P,
                                  std::string const&     s) {
    std::set<std::string> out;
    auto v = Z_map(P, AlgebraVector::basis(S.order(), S.at(s)));
    for (ElementId x : v.support()) {
      CHECK(v[x] == 1);
      if (!S.is_zero(x)) {
        out.insert(S.name(x));
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("<< agrees with membership in E^1 t E^1") {
  for (auto const& f : fixture_names()) {
    auto S = fixture(f);
    auto P = build_poset(S);
    CAPTURE(f);
    for (ElementId s = 0; s < S.order(); ++s) {
      for (ElementId t = 0; t < S.order(); ++t) {
        CAPTURE(S.name(s));
        CAPTURE(S.name(t));
        bool const expected = naive_ll(S, s, t);
        CHECK(ll_related(S, s, t) == expected);
        CHECK(ll_via_idempotents(S, s, t) == expected);
        CHECK(P.ll(s, t) == expected);
      }
    }
  }
}

TEST_CASE("<<< is the transitive closure of <<") {
  for (auto const& f : fixture_names()) {
    auto              S = fixture(f);
    auto              P = build_poset(S);
    std::size_t const n = S.order();
    std::vector<std::vector<bool>> R(n, std::vector<bool>(n));
    for (ElementId s = 0; s < n; ++s) {
      for (ElementId t = 0; t < n; ++t) {
        R[s][t] = P.ll(s, t);
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          R[i][j] = R[i][j] || (R[i][k] && R[k][j]);
        }
      }
    }
    bool transitive = true;
    for (ElementId s = 0; s < n; ++s) {
      for (ElementId t = 0; t < n; ++t) {
        CHECK(P.lll(s, t) == R[s][t]);
        transitive = transitive && R[s][t] == P.ll(s, t);
      }
    }
    CHECK(P.is_transitive() == transitive);
  }
}

TEST_CASE("transitivity of the fixtures") {
  CHECK_FALSE(build_poset(fixture("s1")).is_transitive());
  CHECK(build_poset(fixture("s2")).is_transitive());
  CHECK(build_poset(fixture("s3")).is_transitive());
  CHECK_FALSE(build_poset(fixture("s4")).is_transitive());
  CHECK(build_poset(fixture("s5")).is_transitive());
}

TEST_CASE("non-transitive chains of S1") {
  auto                  S = fixture("s1");
  auto                  P = build_poset(S);
  std::set<std::string> chains;
  for (auto const& c : non_transitive_chains(P)) {
    chains.insert(S.name(c.low) + " " + S.name(c.mid) + " " + S.name(c.high));
  }
  CHECK(chains
        == std::set<std::string>{"y u v", "y t v", "z u w", "z t w"});
}

TEST_CASE("non-transitive chains of S4") {
  auto                  S = fixture("s4");
  auto                  P = build_poset(S);
  std::set<std::string> chains;
  for (auto const& c : non_transitive_chains(P)) {
    chains.insert(S.name(c.low) + " " + S.name(c.mid) + " " + S.name(c.high));
  }
  CHECK(chains.count("y u w") == 1);
  CHECK(chains.count("y z w") == 1);
  CHECK_FALSE(P.ll(S.at("y"), S.at("w")));
}

TEST_CASE("Moebius function by the defining recursion") {
  for (auto const& f : fixture_names()) {
    auto              S = fixture(f);
    auto              P = build_poset(S);
    std::size_t const n = S.order();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
    for (ElementId s = 0; s < n; ++s) {
      for (ElementId t = 0; t < n; ++t) {
        leq[s][t] = P.lll(s, t);
      }
    }
    for (ElementId s = 0; s < n; ++s) {
      for (ElementId t = 0; t < n; ++t) {
        CHECK(P.mobius(s, t) == naive_mobius(leq, s, t));
      }
    }
  }
}

TEST_CASE("Z and its inverse") {
  for (auto const& f : fixture_names()) {
    auto S = fixture(f);
    auto P = build_poset(S);
    for (ElementId s = 0; s < S.order(); ++s) {
      auto b = AlgebraVector::basis(S.order(), s);
      CHECK(Z_inverse(P, Z_map(P, b)) == b);
      CHECK(Z_map(P, Z_inverse(P, b)) == b);
    }
  }
}

TEST_CASE("Z on the basis of S5") {
  auto S = fixture("s5");
  auto P = build_poset(S);
  using N = std::set<std::string>;
  CHECK(Z_support(S, P, "y") == N{"y"});
  CHECK(Z_support(S, P, "z") == N{"z"});
  CHECK(Z_support(S, P, "u") == N{"y", "z", "u"});
  CHECK(Z_support(S, P, "t") == N{"y", "z", "t"});
  CHECK(Z_support(S, P, "w") == N{"y", "z", "w"});
  CHECK(Z_support(S, P, "v") == N{"y", "z", "u", "w", "v"});
}

TEST_CASE("linear extension respects <<<") {
  for (auto const& f : fixture_names()) {
    auto                     S = fixture(f);
    auto                     P = build_poset(S);
    auto const&              L = P.linear_extension();
    std::vector<std::size_t> pos(S.order());
    for (std::size_t i = 0; i < L.size(); ++i) {
      pos[L[i]] = i;
    }
    for (ElementId s = 0; s < S.order(); ++s) {
      for (ElementId t = 0; t < S.order(); ++t) {
        if (P.lll(s, t)) {
          CHECK(pos[s] <= pos[t]);
        }
      }
    }
  }
}

TEST_CASE("transitive without idempotent products") {
  auto S = fixture("s2");
  CHECK_FALSE(S.is_idempotent(S.product(S.at("t"), S.at("u"))));
  CHECK_FALSE(transitivity_sufficient(S));
  CHECK(build_poset(S).is_transitive());
  CHECK(transitivity_sufficient(fixture("trivial")));
}
