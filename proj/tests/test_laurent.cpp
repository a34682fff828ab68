#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qfock/interpolate.hpp"
#include "qfock/laurent.hpp"

using qfock::Laurent;

TEST_CASE("ring basics") {
  Laurent v = Laurent::v();
  Laurent p = v * v - Laurent(3) + Laurent(1, -1);  // v^2 - 3 + v^-1
  CHECK(p.coeff(2) == 1);
  CHECK(p.coeff(0) == -3);
  CHECK(p.coeff(-1) == 1);
  CHECK(p.coeff(5) == 0);
  CHECK(p.str() == "v^2 - 3 + v^-1");
  CHECK((p - p).is_zero());
  CHECK((p * Laurent()).is_zero());
  CHECK(p.min_exp() == -1);
  CHECK(p.max_exp() == 2);
  CHECK(p.eval_at_one() == -1);

  Laurent q = (v + Laurent(1)) * (v - Laurent(1));
  CHECK(q == v * v - Laurent(1));
  CHECK(q.str() == "v^2 - 1");
}

TEST_CASE("bar involution") {
  Laurent p = Laurent(2, 3) + Laurent(-1, 0) + Laurent(5, -2);
  CHECK(p.bar().bar() == p);
  CHECK(p.bar() == Laurent(2, -3) + Laurent(-1, 0) + Laurent(5, 2));
  Laurent sym = Laurent(1, 1) + Laurent(1, -1) + Laurent(7);
  CHECK(sym.is_bar_symmetric());
  CHECK(!p.is_bar_symmetric());
  // bar is a ring map
  Laurent a = Laurent(3, 2) - Laurent(1, -1);
  Laurent b = Laurent(1, 4) + Laurent(2);
  CHECK((a * b).bar() == a.bar() * b.bar());
}

TEST_CASE("ring position predicates") {
  CHECK(Laurent().in_v_pos());
  CHECK(Laurent().in_v_neg());
  CHECK(Laurent(1, 1).in_v_pos());
  CHECK(!Laurent(1, 0).in_v_pos());
  CHECK(Laurent(-4, -2).in_v_neg());
  CHECK(!(Laurent(1, -1) + Laurent(1, 1)).in_v_neg());
}

TEST_CASE("compose_power substitutes v^k") {
  Laurent p = Laurent(1, 1) + Laurent(2, 0) + Laurent(1, -2);
  CHECK(p.compose_power(2) == Laurent(1, 2) + Laurent(2, 0) + Laurent(1, -4));
  CHECK(p.compose_power(-1) == p.bar());
}

TEST_CASE("exact division") {
  Laurent v = Laurent::v();
  Laurent a = (v * v + Laurent(1)) * (v - Laurent(3, -2));
  CHECK(a.divide_exact(v * v + Laurent(1)) == v - Laurent(3, -2));
  CHECK(a.divide_exact(v - Laurent(3, -2)) == v * v + Laurent(1));
  CHECK_THROWS_AS((v + Laurent(1)).divide_exact(Laurent(2)), qfock::MathError);
  CHECK_THROWS_AS(v.divide_exact(v + Laurent(1)), qfock::MathError);
}

TEST_CASE("json round trip") {
  Laurent p = Laurent(mpz_class("123456789012345678901234567890"), -7) +
              Laurent(-2, 0) + Laurent(1, 13);
  CHECK(Laurent::from_json(p.to_json()) == p);
  CHECK(Laurent::from_json(Laurent().to_json()).is_zero());
}

TEST_CASE("display conventions") {
  CHECK(Laurent().str() == "0");
  CHECK(Laurent(-1, -1).str() == "-v^-1");
  CHECK((Laurent(1, -2) - Laurent(1, 0)).str() == "-1 + v^-2");
  CHECK(Laurent(5).str_factor() == "5");
  CHECK((Laurent(1) - Laurent(1, -2)).str_factor() == "(1 - v^-2)");
}

TEST_CASE("polynomial count fit") {
  // |GL_1(F_Q)| = Q - 1
  std::vector<std::pair<long, mpz_class>> pts;
  for (long q : {2, 3, 5}) pts.push_back({q, mpz_class(q - 1)});
  Laurent fit = qfock::fit_polynomial_in_q(pts, 1);
  CHECK(fit == Laurent::v() - Laurent(1));

  // |GL_2(F_Q)| = (Q^2-1)(Q^2-Q)
  pts.clear();
  for (long q : {2, 3, 5, 7, 11}) {
    mpz_class Q(q);
    pts.push_back({q, (Q * Q - 1) * (Q * Q - Q)});
  }
  Laurent gl2 = qfock::fit_polynomial_in_q(pts, 4);
  CHECK(gl2.eval_at_one() == 0);
  CHECK(gl2.coeff(4) == 1);
  CHECK(gl2.coeff(1) == 1);

  // non-integral fit must throw
  pts = {{2, 1}, {3, 2}, {4, 4}};
  CHECK_THROWS_AS(qfock::fit_polynomial_in_q(pts, 2), qfock::MathError);
}
