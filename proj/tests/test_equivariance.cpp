#include "affine_frames/completion.hpp"
#include "affine_frames/equivariance.hpp"
#include "affine_frames/errors.hpp"

#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace affine_frames;
using namespace af_test;

TEST_SUITE("pivot profile") {
  TEST_CASE("worked example") {
    const PivotProfile p = pivot_profile(es2_vector());
    CHECK(p.indices == std::vector<std::size_t>{1, 3, 4});
    CHECK(p.k == 2);
    CHECK(p.det_vbar == 5);
  }

  TEST_CASE("generic case has the top n columns") {
    const PolyVector v{tp(4) + tp(3) + tp(2) + 1, tp(4, 2) + tp(3, 3) + tp(2, 5), tp(4, 3) + tp(3) + tp(2, 7)};
    const PivotProfile p = pivot_profile(v);
    CHECK(p.indices == std::vector<std::size_t>{2, 3, 4});
    CHECK(p.k == 1);
  }

  TEST_CASE("dependent components are rejected") {
    CHECK_THROWS_WITH_AS(pivot_profile({T, tp(1, 2), 1}), doctest::Contains("linearly dependent"), Rejection);
  }

  TEST_CASE("agrees with the rank-based oracle") {
    Gen g(51);
    for (int i = 0; i < 100; ++i) {
      const auto n = static_cast<std::size_t>(g.integer(2, 4));
      const PolyVector v = i % 2 ? g.staggered_regular_vector(n, 8) : g.regular_vector(n, 1, 8);
      CHECK(pivot_profile(v).indices == rightmost_profile(coefficient_matrix(v)));
    }
  }
}

TEST_SUITE("sections") {
  TEST_CASE("es1 and es2 on the worked example") {
    CHECK(es1(es2_vector()) == RatMatrix{{0, 1, q(1, 5)}, {0, 1, q(2, 5)}, {5, 1, q(3, 5)}});
    CHECK(es1(shift(es2_vector(), q(-1, 3))) == es_golden_L());
    CHECK(es2(es2_vector()) == q(1, 3));
  }

  TEST_CASE("es and canonical on the worked example") {
    const GroupElement rho = es(es2_vector());
    CHECK(rho.L() == es_golden_L());
    CHECK(rho.s() == q(1, 3));
    CHECK(canonical(es2_vector()) == es2_canonical());
    CHECK(has_canonical_shape(es2_canonical()));
    CHECK_FALSE(has_canonical_shape(es2_vector()));
    CHECK(es2(es2_canonical()) == 0);
  }

  TEST_CASE("[t^3, t, 1]") {
    const GroupElement rho = es(cubic_vector());
    CHECK(rho.L() == RatMatrix{{0, 0, -1}, {0, 1, 0}, {1, 0, 0}});
    CHECK(rho.s() == 0);
  }

  TEST_CASE("discontinuity family") {
    const GroupElement at1 = es(discontinuity_vector(1));
    CHECK(at1.s() == q(1, 2));
    CHECK(at1.L() == RatMatrix{{q(3, 2), -2, -1}, {q(-3, 2), 1, 0}, {1, 0, 0}});
    // ES1 on the unshifted vector: columns 2..4 of V are already independent.
    CHECK(es1(discontinuity_vector(1)) == RatMatrix{{0, 0, -1}, {0, 1, 0}, {1, 0, 0}});
    const GroupElement tenth = es(discontinuity_vector(q(1, 10)));
    CHECK(tenth.s() == 5);
    CHECK(tenth.L() == RatMatrix{{150, -20, -10}, {-15, 1, 0}, {q(1, 10), 0, 0}});
    const GroupElement at0 = es(discontinuity_vector(0));
    CHECK(at0.s() == 0);
    CHECK(at0.L() == RatMatrix{{0, 0, -1}, {0, 1, 0}, {1, 0, 0}});
  }

  TEST_CASE("preconditions") {
    CHECK_THROWS_WITH_AS(es2({T, 1}), doctest::Contains("degree < n"), Rejection);
    CHECK_THROWS_AS(es2({tp(3, 2), tp(4, 4), tp(2)}), Rejection);
    CHECK_THROWS_AS(es({tp(3), tp(3, 2) + 1, tp(3, 3) + 1}), Rejection);
    CHECK_FALSE(check_regular({T, 1}).regular());
    CHECK(check_regular(es2_vector()).regular());
  }

  TEST_CASE("random: equivariance of es1, es2, es; invariance of canonical") {
    Gen g(52);
    for (int i = 0; i < 100; ++i) {
      const std::size_t n = static_cast<std::size_t>(g.integer(2, 4));
      const PolyVector v = i % 2 ? g.staggered_regular_vector(n, 7) : g.regular_vector(n, 1, 7);
      const RatMatrix L = g.sl_matrix(n);
      const Rational s = g.rational(4, 3);
      const GroupElement h(L, s);
      CAPTURE(v);
      CHECK(es1(L * v) == L * es1(v));
      CHECK(es2(shift(v, s)) == es2(v) + s);
      CHECK(es2(L * v) == es2(v));
      const GroupElement rho = es(v);
      CHECK(es(apply_group(h, v)) == h * rho);
      const PolyVector w = canonical(v);
      CHECK(canonical(apply_group(h, v)) == w);
      CHECK(canonical(w) == w);
      CHECK(es(w) == GroupElement::identity(n));
      CHECK(has_canonical_shape(w));
      CHECK(canonical_violation(w).empty());
    }
  }
}

TEST_SUITE("emcm") {
  TEST_CASE("worked example") {
    const Completion c = emcm(es2_vector());
    CHECK(c.M == eamfm_golden_F());
    CHECK(degree_matrix(c.M) == Degree(5));
  }

  TEST_CASE("agrees with the minimal map on canonical vectors") {
    CHECK(emcm(es2_canonical()).M == minimal_matrix_completion(es2_canonical()).M);
  }

  TEST_CASE("equivariantized non-minimal map changes degree at [t^3, t, 1]") {
    const Completion plain = nonminimal_completion(cubic_vector());
    const Completion twisted = equivariantize(nonminimal_completion, cubic_vector());
    CHECK(twisted.M == PolyMatrix{{tp(3), -1, 0}, {T, 0, -1}, {1, -1, tp(2)}});
    CHECK(degree_matrix(plain.M) == Degree(8));
    CHECK(degree_matrix(twisted.M) == Degree(5));
    CHECK(verify_completion(twisted.M, cubic_vector()).is_completion());
  }

  TEST_CASE("random: equivariance and degree preservation") {
    Gen g(53);
    for (int i = 0; i < 100; ++i) {
      const std::size_t n = static_cast<std::size_t>(g.integer(2, 4));
      const PolyVector v = i % 2 ? g.staggered_regular_vector(n, 7) : g.regular_vector(n, 1, 7);
      const GroupElement h(g.sl_matrix(n), g.rational(4, 3));
      CAPTURE(v);
      const Completion c = emcm(v);
      CHECK(emcm(apply_group(h, v)).M == apply_group(h, c.M));
      CHECK(degree_matrix(c.M) == degree_matrix(minimal_matrix_completion(v).M));
      CHECK(verify_completion(c.M, v).passed());
    }
  }
}
