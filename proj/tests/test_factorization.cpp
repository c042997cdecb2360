#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semidet/factorization.hpp"

#include "support.hpp"

using namespace semidet;
using namespace semidet::testing;

namespace {

  struct Vars {
    FiniteSemigroup const& S;
    MultiPoly              operator()(char const* s) const {
      return MultiPoly::var(S.at(s));
    }
  };

  MultiPoly pow(MultiPoly const& p, int k) {
    MultiPoly out(1);
    while (k-- > 0) {
      out *= p;
    }
    return out;
  }

  // The contracted determinants in factored form.
  MultiPoly expected_theta(std::string const& f, FiniteSemigroup const& S) {
    Vars x{S};
    if (f == "s1") {
      return -(pow(x("y"), 3) * pow(x("z"), 3));
    } else if (f == "s2") {
      return -(pow(x("y"), 2) * pow(x("z"), 2));
    } else if (f == "s3") {
      return pow(x("y"), 2) * pow(x("z"), 2) * (x("t") + x("u") - x("w") - x("z"));
    } else if (f == "s4") {
      return MultiPoly();
    }
    return MultiPoly(-2) * pow(x("y"), 2) * pow(x("z"), 2) * (x("t") - x("u"))
           * (x("u") - x("v") + x("w") - x("y") - x("z"));
  }

}  // namespace

TEST_CASE("contracted determinants of the fixtures") {
  for (std::string f : {"s1", "s2", "s3", "s4", "s5"}) {
    auto S = fixture(f);
    CAPTURE(f);
    auto theta = theta_contracted(S);
    CHECK(theta == expected_theta(f, S));
    CHECK(theta == leibniz_det(cayley_contracted(S)));
  }
}

TEST_CASE("full determinant factors through the zero") {
  for (auto const& f : fixture_names()) {
    auto S = fixture(f);
    REQUIRE(S.has_zero());
    CAPTURE(f);
    VarId const                x0 = *S.zero();
    std::map<VarId, MultiPoly> y;
    for (ElementId s = 0; s < S.order(); ++s) {
      if (s != x0) {
        y[s] = MultiPoly::var(s) - MultiPoly::var(x0);
      }
    }
    CHECK(theta(S) == MultiPoly::var(x0) * substitute_linear(theta_contracted(S), y));
  }
}

TEST_CASE("Cayley matrices") {
  auto S = fixture("s2");
  auto C = cayley(S);
  CHECK(C.rows() == 5);
  CHECK(C.entry(S.at("u"), S.at("y")) == MultiPoly::var(S.at("y")));
  auto D = cayley_contracted(S);
  CHECK(D.rows() == 4);
  CHECK(D.entry(S.at("y"), S.at("y")).is_zero());
  CHECK(basis_labels(S, true).size() == 4);
  auto T = FiniteSemigroup::validate({{0, 1}, {1, 0}}, {"e", "g"});
  CHECK_THROWS_AS(cayley_contracted(T), NoZeroElement);
}

TEST_CASE("block layout and reduction of S5") {
  auto S = fixture("s5");
  auto P = build_poset(S);
  auto A = build_star_algebra(S, P);
  auto L = build_M(A, true);
  CHECK(name_set(S, L.blocks) == std::set<std::string>{"u", "w", "v"});

  auto state = tau_step(S, L.matrix);
  CHECK(name_set(S, state.R_prime) == std::set<std::string>{"y", "z", "v"});
  CHECK(name_set(S, state.R_double_prime) == std::set<std::string>{"w", "u", "t"});

  auto R = reduce_to_M_prime(A, L.matrix);
  CHECK(R.iterations == 1);
  Vars x{S};
  auto e = [&](char const* r, char const* c) { return R.matrix.entry(S.at(r), S.at(c)); };
  CHECK(e("w", "u").is_zero());
  CHECK(e("w", "t").is_zero());
  CHECK(e("u", "w").is_zero());
  CHECK(e("t", "w").is_zero());
  CHECK(e("w", "z") == x("z"));
  CHECK(e("w", "w") == x("w"));
  CHECK(e("u", "y") == x("y"));
  CHECK(e("t", "t") == x("u"));
  CHECK(R.matrix == block_mask(S, L.matrix));
  CHECK(determinant(R.matrix)
        == MultiPoly(-2) * pow(x("y"), 2) * pow(x("z"), 2) * (x("t") - x("u")) * x("v"));
}

TEST_CASE("substitution y_s of S5") {
  auto S   = fixture("s5");
  auto P   = build_poset(S);
  auto sub = y_substitution(S, P, true);
  Vars x{S};
  CHECK(sub.at(S.at("v")) == x("v") - x("u") - x("w") + x("y") + x("z"));
  CHECK(sub.at(S.at("u")) == x("u") - x("y") - x("z"));
  CHECK(sub.at(S.at("y")) == x("y"));
}

TEST_CASE("factorisation of the smooth fixtures") {
  for (auto const& f : smooth_fixture_names()) {
    auto S = fixture(f);
    CAPTURE(f);
    auto F = factorize(S);
    CHECK(F.verified);
    CHECK(F.contracted);
    CHECK(F.parity_consistent);
    CHECK(F.reduction_preserves);
    CHECK(F.reduction_is_mask);
    CHECK((F.sign == 1 || F.sign == -1));
    CHECK(scale(F.product, F.sign) == F.reference());
  }
  auto F = factorize(fixture("s5"));
  CHECK(F.blocks.size() == 3);
  CHECK(F.sign == -1);
  CHECK(F.nonzero);
}

TEST_CASE("factorisation preconditions") {
  for (auto const& f : {"s1", "s4"}) {
    try {
      factorize(fixture(f));
      FAIL("expected PreconditionFailed");
    } catch (PreconditionFailed const& e) {
      CHECK(e.flag == "ll_transitive");
    }
  }
  CHECK_THROWS_AS(factorize(fixture("s5"), 3), DimensionCap);
}
