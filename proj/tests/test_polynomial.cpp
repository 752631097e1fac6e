#include <doctest.h>

#include <limits>

#include "tdpoly/polynomial.hpp"

using namespace tdpoly;

TEST_CASE("normalization and zero") {
  Polynomial z{0, 0};
  CHECK(z.is_zero());
  CHECK(z == Polynomial{});
  CHECK(Polynomial{1, 2, 0, 0}.coefficients().size() == 2);
  CHECK(Polynomial{0, 0, 3}.lowest_degree() == 2);
  CHECK(Polynomial{5}.coefficient(9) == 0);
}

TEST_CASE("ring operations") {
  Polynomial p{1, 1};
  CHECK(p * p == Polynomial{1, 2, 1});
  CHECK(p - p == Polynomial{});
  CHECK(-p == Polynomial{-1, -1});
  CHECK(pow(p, 3) == Polynomial{1, 3, 3, 1});
  CHECK(pow(p, 0) == Polynomial{1});
  CHECK(combine(PolyOp::mul, Polynomial::x(), p) == Polynomial{0, 1, 1});
  CHECK(combine(PolyOp::sub, p, Polynomial::constant(1)) == Polynomial::x());
  CHECK(Polynomial::monomial(3, 2) == Polynomial{0, 0, 0, 2});
  CHECK(p * Polynomial{} == Polynomial{});
}

TEST_CASE("arbitrary precision") {
  auto big = pow(Polynomial{1, 1}, 80);
  Integer mid = big.coefficient(40);
  CHECK(mid > Integer(std::numeric_limits<long long>::max()));
  CHECK(big.eval(1) == pow(Integer(2), 80));
}

TEST_CASE("evaluation") {
  Polynomial p{0, 0, 3, 1};  // x^2 (x + 3)
  CHECK(p.eval(-3) == 0);
  CHECK(p.eval(2) == 20);
  CHECK(Polynomial{}.eval(7) == 0);
}

TEST_CASE("integer roots") {
  CHECK(integer_roots(Polynomial{0, 0, 3, 1}) == std::vector<Integer>{-3, 0});
  // x^4 (x + 3)^2 has the same root set.
  CHECK(integer_roots(Polynomial{0, 0, 0, 0, 9, 6, 1}) == std::vector<Integer>{-3, 0});
  // (x - 2)(x + 5)(x^2 + 1)
  auto p = Polynomial{-2, 1} * Polynomial{5, 1} * Polynomial{1, 0, 1};
  CHECK(integer_roots(p) == std::vector<Integer>{-5, 2});
  CHECK(integer_roots(Polynomial{1, 0, 1}).empty());
  CHECK(integer_roots(Polynomial{7}).empty());
  CHECK_THROWS_AS(integer_roots(Polynomial{}), std::domain_error);
}

TEST_CASE("rendering and parsing") {
  Polynomial p{0, 0, 4, 4, 1};
  CHECK(to_dense_string(p) == "0 0 4 4 1");
  CHECK(to_human_string(p) == "x^4+4x^3+4x^2");
  CHECK(to_human_string(Polynomial{1, -1}) == "-x+1");
  CHECK(to_human_string(Polynomial{-3}) == "-3");
  CHECK(to_dense_string(Polynomial{}) == "0");
  CHECK(to_human_string(Polynomial{}) == "0");
  CHECK(parse_dense("0 0 4 4 1") == p);
  CHECK(parse_dense(to_dense_string(pow(p, 5))) == pow(p, 5));
  CHECK(parse_dense("") == Polynomial{});
  CHECK_THROWS_AS(parse_dense("1 x"), std::invalid_argument);
}
