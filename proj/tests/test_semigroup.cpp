#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semidet/errors.hpp"
#include "semidet/io.hpp"
#include "semidet/semigroup.hpp"

#include "support.hpp"

using namespace semidet;
using namespace semidet::testing;

namespace {

  std::set<ElementId> as_set(std::vector<ElementId> const& v) {
    return {v.begin(), v.end()};
  }

}  // namespace

TEST_CASE("fixtures parse with an adjoined zero") {
  auto S = fixture("s2");
  CHECK(S.order() == 5);
  REQUIRE(S.has_zero());
  CHECK(S.name(*S.zero()) == "0");
  CHECK(S.singleton_rich());

  auto T = fixture("trivial");
  CHECK(T.order() == 1);
  CHECK(T.has_zero());
}

TEST_CASE("idempotents match the diagonal") {
  for (auto const& f : fixture_names()) {
    auto S = fixture(f);
    CAPTURE(f);
    CHECK(S.idempotents() == naive_idempotents(S));
    CHECK(idempotents(S) == naive_idempotents(S));
  }
  auto S = fixture("s5");
  CHECK(name_set(S, S.idempotents()) == std::set<std::string>{"u", "w", "v", "0"});
}

TEST_CASE("star and plus in S2") {
  auto S = fixture("s2");
  CHECK(S.name(S.star(S.at("y"))) == "t");
  CHECK(S.name(S.plus(S.at("y"))) == "u");
  CHECK(S.name(S.star(S.at("z"))) == "u");
  CHECK(S.name(S.plus(S.at("z"))) == "t");
  CHECK(S.name(S.star(S.at("u"))) == "u");
}

TEST_CASE("star and plus agree with the kernel definition") {
  for (auto const& f : fixture_names()) {
    auto S = fixture(f);
    CAPTURE(f);
    for (ElementId s = 0; s < S.order(); ++s) {
      auto [ss, pp] = star_plus(S, s);
      auto [rs, rp] = naive_star_plus(S, s);
      CHECK(as_set(ss) == rs);
      CHECK(as_set(pp) == rp);
      REQUIRE(ss.size() == 1);
      CHECK(S.star(s) == ss[0]);
      CHECK(S.plus(s) == pp[0]);
    }
  }
}

TEST_CASE("kernel is the least ideal of every subsemigroup") {
  for (auto const& f : {"s2", "s3", "s5"}) {
    auto S = fixture(f);
    CAPTURE(f);
    std::size_t const n = S.order();
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
      std::vector<ElementId> gens;
      for (ElementId s = 0; s < n; ++s) {
        if (mask >> s & 1) {
          gens.push_back(s);
        }
      }
      auto T = closure(S, gens);
      if (as_set(T.elements) != naive_closure(S, as_set(gens))) {
        FAIL("closure differs for mask " << mask);
      }
      auto K = as_set(kernel(S, T));
      CHECK(K == naive_kernel(S, as_set(T.elements)));
      for (ElementId k : K) {
        for (ElementId x : T.elements) {
          CHECK(K.count(S.product(k, x)) == 1);
          CHECK(K.count(S.product(x, k)) == 1);
        }
      }
    }
  }
}

TEST_CASE("identity of the algebra multiplies as an identity") {
  for (auto const& f : fixture_names()) {
    auto S = fixture(f);
    CAPTURE(f);
    if (!S.unital()) {
      continue;
    }
    auto const& one = *S.identity();
    for (ElementId s = 0; s < S.order(); ++s) {
      auto b = AlgebraVector::basis(S.order(), s);
      CHECK(S.multiply(one, b) == b);
      CHECK(S.multiply(b, one) == b);
    }
  }
  auto S = fixture("s2");
  REQUIRE(S.unital());
  CHECK(S.identity()->to_string(S.names()) == "-z + u + t");
}

TEST_CASE("S4 is unital") {
  auto S = fixture("s4");
  CHECK(S.unital());
  CHECK(unital_check(S).unital);
}

TEST_CASE("natural order and idempotent powers") {
  auto S = fixture("s5");
  CHECK(nat_leq(S, S.at("u"), S.at("v")));
  CHECK(nat_leq(S, S.at("w"), S.at("v")));
  CHECK_FALSE(nat_leq(S, S.at("u"), S.at("w")));
  CHECK_THROWS_AS(nat_leq(S, S.at("y"), S.at("v")), NotIdempotent);
  CHECK(S.name(omega_power(S, S.at("t"))) == "u");
  CHECK(S.name(omega_power(S, S.at("y"))) == "0");
}

TEST_CASE("tilde classes of S5") {
  auto S  = fixture("s5");
  auto TC = tilde_classes(S);
  CHECK(name_set(S, TC.left_of(S.at("u"))) == std::set<std::string>{"z", "u", "t"});
  CHECK(name_set(S, TC.right_of(S.at("u"))) == std::set<std::string>{"y", "u", "t"});
  CHECK(name_set(S, TC.left_of(S.at("w"))) == std::set<std::string>{"y", "w"});
  CHECK(name_set(S, TC.right_of(S.at("w"))) == std::set<std::string>{"z", "w"});
}

TEST_CASE("empty phi set") {
  // Null semigroup: a has no idempotent right identity.
  auto S = FiniteSemigroup::validate({{0, 0}, {0, 0}}, {"0", "a"});
  CHECK_FALSE(S.singleton_rich());
  REQUIRE(S.empty_phi().has_value());
  CHECK(S.empty_phi()->first == 1);
  CHECK_THROWS_AS(star_plus(S, 1), EmptyPhiSet);
  CHECK_THROWS_AS(is_singleton_rich(S), EmptyPhiSet);
}

TEST_CASE("left zero semigroup is not singleton-rich") {
  auto S = FiniteSemigroup::validate({{0, 0}, {1, 1}}, {"e", "f"});
  CHECK_FALSE(S.singleton_rich());
  CHECK_FALSE(is_singleton_rich(S));
  CHECK(star_plus(S, 0).first.size() == 2);
  CHECK_THROWS_AS(S.star(0), NotSingletonRich);
}

TEST_CASE("invalid tables") {
  CHECK_THROWS_AS(FiniteSemigroup::validate({{1, 0}, {0, 1}, {0, 0}}, {"a", "b", "c"}),
                  BadTable);
  CHECK_THROWS_AS(FiniteSemigroup::validate({{0, 2}, {0, 1}}, {"a", "b"}), BadTable);
  try {
    FiniteSemigroup::validate({{1, 0}, {1, 1}}, {"a", "b"});
    FAIL("expected NotAssociative");
  } catch (NotAssociative const& e) {
    CHECK(std::string(e.what()).find("(a, a, a)") != std::string::npos);
  }
  CHECK_THROWS_AS(FiniteSemigroup::validate({{0, 0}, {1, 1}}, {"a", "b"}, ElementId(0)),
                  BadZero);
}
