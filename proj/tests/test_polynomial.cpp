#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semidet/polynomial.hpp"

#include "support.hpp"

using namespace semidet;
using namespace semidet::testing;

namespace {

  std::vector<std::string> const names = {"x", "y", "z", "w"};

  MultiPoly X(VarId v) {
    return MultiPoly::var(v);
  }

}  // namespace

TEST_CASE("arithmetic is canonical") {
  auto p = X(0) + X(1);
  auto q = X(0) - X(1);
  CHECK(p * q == X(0) * X(0) - X(1) * X(1));
  CHECK((p - p).is_zero());
  CHECK((p - p).terms().empty());
  CHECK(p * MultiPoly(0) == MultiPoly());
  CHECK(neg(p) == -p);
  CHECK(scale(p, 3) == p + p + p);
  CHECK(equal(add(p, q), scale(X(0), 2)));
  CHECK(is_zero(mul(p, MultiPoly())));
  CHECK((p * p).degree() == 2);
  CHECK((p * p).variables() == std::vector<VarId>{0, 1});
}

TEST_CASE("rendering") {
  CHECK(render(MultiPoly(), names) == "0");
  CHECK(render(MultiPoly(-7), names) == "-7");
  auto p = X(1) * X(1) * X(2) * X(2) * X(2);
  CHECK(render(-p, names) == "-y^2*z^3");
  CHECK(render(X(0) + X(1) - X(2), names) == "x + y - z");
  CHECK(render(X(2) * X(2) - 2 * X(0) + MultiPoly(1), names) == "z^2 - 2*x + 1");
  CHECK(render(X(0) + X(1), names, {1, 0}) == "y + x");
}

TEST_CASE("linear substitution is a ring homomorphism") {
  std::map<VarId, MultiPoly> sub = {{0, X(1) - X(2)}, {3, MultiPoly(2)}};
  auto p = X(0) * X(0) + X(0) * X(3) - X(2);
  auto q = X(0) - X(3);
  CHECK(substitute_linear(p * q, sub) == substitute_linear(p, sub) * substitute_linear(q, sub));
  CHECK(substitute_linear(p + q, sub) == substitute_linear(p, sub) + substitute_linear(q, sub));
  CHECK(substitute_linear(X(2), sub) == X(2));
}

TEST_CASE("determinant of small matrices") {
  SymbolicMatrix A({0, 1}, {0, 1});
  A.at(0, 0) = X(0);
  A.at(0, 1) = X(1);
  A.at(1, 0) = X(2);
  A.at(1, 1) = X(3);
  CHECK(determinant(A) == X(0) * X(3) - X(1) * X(2));
  CHECK(determinant(SymbolicMatrix({}, {})) == MultiPoly(1));
  CHECK_THROWS_AS(determinant(A, 1), DimensionCap);
  CHECK_THROWS_AS(determinant(SymbolicMatrix({0}, {0, 1})), BadTable);
}

TEST_CASE("minor expansion agrees with the Leibniz formula") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t const n = 1 + trial % 6;
    auto              A = random_matrix(rng, n, 4);
    CAPTURE(trial);
    CHECK(determinant(A) == leibniz_det(A));
  }
}

TEST_CASE("permuting rows and columns changes the sign") {
  std::mt19937_64 rng(11);
  auto            A = random_matrix(rng, 4, 3);
  std::vector<VarId> rows = {2, 0, 3, 1}, cols = {0, 1, 3, 2};
  auto B = A.permuted(rows, cols);
  int  s = permutation_sign({0, 1, 2, 3}, rows) * permutation_sign({0, 1, 2, 3}, cols);
  CHECK(determinant(B) == scale(determinant(A), s));
  CHECK(B.entry(2, 3) == A.entry(2, 3));
  CHECK(permutation_sign({0, 1, 2}, {1, 0, 2}) == -1);
  CHECK(permutation_sign({0, 1, 2}, {1, 2, 0}) == 1);
}
