#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "semidet/io.hpp"

#include "support.hpp"

using namespace semidet;
using namespace semidet::testing;

namespace {

  std::pair<std::size_t, std::size_t> error_position(std::string const& text) {
    try {
      parse_semigroup(text);
    } catch (ParseError const& e) {
      return {e.line, e.col};
    }
    FAIL("no parse error for: " << text);
    return {0, 0};
  }

}  // namespace

TEST_CASE("print and parse are inverse") {
  for (auto const& f : fixture_names()) {
    auto S    = fixture(f);
    auto text = print_semigroup(S);
    auto T    = parse_semigroup(text);
    CAPTURE(f);
    CHECK(T.names() == S.names());
    CHECK(T.table() == S.table());
    CHECK(T.zero() == S.zero());
    CHECK(print_semigroup(T) == text);
  }
}

TEST_CASE("rows in any order, comments and blank lines") {
  auto S = parse_semigroup("# two element semilattice\n\nelements: a b\nb: b b\na: a b\n");
  CHECK(S.order() == 2);
  CHECK(S.name(S.product(S.at("a"), S.at("b"))) == "b");
  CHECK(S.name(*S.zero()) == "b");
}

TEST_CASE("a full table prints without dots") {
  auto S    = parse_semigroup("elements: a b\na: a b\nb: b b\n");
  auto text = print_semigroup(S);
  CHECK(text.find('.') == std::string::npos);
}

TEST_CASE("parse errors carry positions") {
  using P = std::pair<std::size_t, std::size_t>;
  CHECK(error_position("") == P{1, 1});
  CHECK(error_position("elements: a a\n").first == 1);
  CHECK(error_position("elements: a 0\n").first == 1);
  CHECK(error_position("elements: a\na: a\na: a\n").first == 3);
  CHECK(error_position("elements: a b\na: a b\nb: b\n").first == 3);
  CHECK(error_position("elements: a b\na: a c\nb: b b\n") == P{2, 6});
  CHECK(error_position("elements: a b\na: a b\n").first != 0);
  CHECK_THROWS_AS(load_semigroup("/nonexistent/file.sgp"), ParseError);
}

TEST_CASE("semantic errors are not parse errors") {
  CHECK_THROWS_AS(parse_semigroup("elements: a b\na: b a\nb: b b\n"), NotAssociative);
}

TEST_CASE("report of S5") {
  auto S = fixture("s5");
  auto r = classify(S, "s5");
  CHECK(r.singleton_rich);
  CHECK(r.ll_transitive);
  CHECK(r.unital);
  CHECK(r.smooth == true);
  CHECK(r.imposed_condition == true);
  CHECK(r.nonzero);
  REQUIRE(r.factorization.has_value());
  CHECK(r.factorization->verified);
  CHECK(r.factorization->sign == -1);
  CHECK(r.factorization->blocks.size() == 3);

  auto j = nlohmann::json::parse(emit_report(r));
  CHECK(j["name"] == "s5");
  CHECK(j["order"] == 7);
  CHECK(j["determinant_nonzero"] == true);
  CHECK(j["factorization"]["verified"] == true);
  CHECK(j["contracted_determinant"] == render(theta_contracted(S), S.names()));
}

TEST_CASE("reports are reproducible") {
  auto S     = fixture("s5");
  auto first = emit_report(classify(S, "s5"));
  auto again = emit_report(classify(parse_semigroup(print_semigroup(S)), "s5"));
  CHECK(first == again);
  CHECK(emit_report(classify(S, "s5"), 2) != first);
}

TEST_CASE("reports of non-transitive and trivial semigroups") {
  auto r = classify(fixture("s4"), "s4");
  CHECK_FALSE(r.ll_transitive);
  CHECK_FALSE(r.nonzero);
  CHECK(r.contracted_determinant == std::string("0"));
  CHECK_FALSE(r.factorization.has_value());
  CHECK_FALSE(r.smooth.has_value());
  CHECK_FALSE(r.witnesses.empty());

  auto t = classify(fixture("trivial"), "trivial");
  CHECK(t.has_zero);
  CHECK(t.unital);
  CHECK(t.contracted_determinant == std::string("1"));
  REQUIRE(t.factorization.has_value());
  CHECK(t.factorization->blocks.empty());
  CHECK(t.factorization->verified);
}
