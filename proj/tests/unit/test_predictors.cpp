#include <doctest.h>

#include "curvecount/predictors.hpp"

using namespace curvecount;

namespace {

Rational Q(const char* s) { return parse_rational(s); }

const SurfaceModel P2_2{Surface::P2, 2};
const SurfaceModel P2_3{Surface::P2, 3};
const SurfaceModel Q_2{Surface::SegreQuadric, 2};
const SurfaceModel Q_3{Surface::SegreQuadric, 3};

}  // namespace

TEST_SUITE("predictors") {
  TEST_CASE("rational rendering") {
    CHECK(to_string(Q("6/4")) == "3/2");
    CHECK(to_string(Q("-12/4")) == "-3");
    CHECK_THROWS_AS(parse_rational("x/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  }

  TEST_CASE("surface point counts") {
    CHECK(surface_point_count(P2_2, 1) == 7);
    CHECK(surface_point_count(Q_2, 1) == 9);
    CHECK(surface_point_count(P2_3, 2) == 91);
    CHECK_THROWS_AS(surface_point_count(P2_2, 0), std::invalid_argument);
  }

  TEST_CASE("closed point census") {
    // P^1 over F_2: N_k = 2^k + 1.
    const auto a = closed_points_from_counts({3, 5, 9, 17});
    CHECK(a == std::vector<BigInt>{3, 1, 2, 3});
    const auto c = closed_point_census(P2_2, 2);
    CHECK(c.at(1) == 7);
    CHECK(c.at(2) == 7);
    CHECK(mobius(1) == 1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(6) == 1);
    CHECK(mobius(30) == -1);
    for (const auto& S : {P2_2, P2_3, Q_2, Q_3}) {
      const auto census = closed_point_census(S, 8);
      for (int k = 1; k <= 8; ++k) {
        BigInt sum = 0;
        for (int m = 1; m <= k; ++m)
          if (k % m == 0) sum += m * census.at(m);
        CHECK(sum == surface_point_count(S, k));
        CHECK(census.at(k) >= 0);
      }
    }
  }

  TEST_CASE("exact zeta values") {
    CHECK(zeta_exact(P2_2, 3) == Q("64/21"));
    CHECK(1 / zeta_exact(P2_2, 3) == Q("21/64"));
    CHECK(zeta_exact(Q_2, 3) == Q("256/63"));
    CHECK(1 / zeta_exact(P2_3, 3) == Q("416/729"));
    CHECK_THROWS_AS(zeta_exact(P2_2, 2), std::invalid_argument);
  }

  TEST_CASE("truncated zeta") {
    const Rational one_step = zeta_truncated(P2_2, 3, 1);
    Rational expected = 1;
    for (int i = 0; i < 7; ++i) expected *= Q("8/7");
    CHECK(one_step == expected);
    for (const auto& S : {P2_2, P2_3, Q_2, Q_3}) {
      Rational prev = 1;
      for (int r = 1; r <= 6; ++r) {
        const auto z = zeta_truncated(S, 3, r);
        CHECK(z > prev);
        CHECK(z < zeta_exact(S, 3));
        prev = z;
      }
    }
    // The gap is bounded by the tail of the Euler product.
    const double gap6 = Rational(zeta_exact(P2_2, 3) - zeta_truncated(P2_2, 3, 6)).get_d();
    CHECK(gap6 > 0);
    CHECK(gap6 < Rational(zeta_exact(P2_2, 3) - zeta_truncated(P2_2, 3, 5)).get_d());
  }

  TEST_CASE("zeta factorization") {
    for (const auto& S : {P2_2, P2_3, Q_2, Q_3})
      for (int r = 1; r <= 6; ++r) CHECK(zeta_factorization_check(S, 3, r));
    CHECK_FALSE(zeta_factorization_check(P2_2, 3, 4, BigInt(8)));
    CHECK_FALSE(zeta_factorization_check(Q_3, 3, 4, BigInt(15)));
    CHECK(zeta_truncated(P2_2, 3, 1, ZetaDomain::OpenComplement) == 1);
  }

  TEST_CASE("success probability and pmf") {
    CHECK(success_probability(2) == Q("3/7"));
    CHECK(success_probability(3) == Q("4/13"));
    CHECK(success_probability(5) == Q("6/31"));
    CHECK_THROWS_AS(success_probability(4), std::invalid_argument);
    CHECK(predicted_pmf(7, 3, 2) == Q("241920/823543"));
    CHECK(predicted_pmf(7, 0, 2) == Q("16384/823543"));
    CHECK_THROWS_AS(predicted_pmf(7, 8, 2), std::invalid_argument);
    for (std::uint32_t p : {2U, 3U, 5U}) {
      for (int t = 0; t <= 12; ++t) {
        Rational total = 0;
        for (const auto& v : predicted_pmf_table(t, p)) total += v;
        CHECK(total == 1);
      }
    }
  }

  TEST_CASE("sieve cardinalities") {
    auto c = sieve_cardinalities(1, 1, 2);
    CHECK(c.prescribed == 3);
    CHECK(c.total == 8);
    c = sieve_cardinalities(1, 0, 2);
    CHECK(c.prescribed == 4);
    for (std::uint32_t p : {2U, 3U, 5U}) {
      const BigInt P = p;
      Rational in_w(P * P - 1, P * P * P - 1), off_w(P * P * P - P * P, P * P * P - 1);
      in_w.canonicalize();
      off_w.canonicalize();
      CHECK(in_w == success_probability(p));
      CHECK(off_w == 1 - success_probability(p));
      for (int t = 0; t <= 10; ++t) {
        BigInt sum = 0;
        for (int s = 0; s <= t; ++s) {
          const auto sc = sieve_cardinalities(t, s, p);
          sum += sc.prescribed;
          BigInt denom;
          mpz_pow_ui(denom.get_mpz_t(), BigInt(P * P * P - 1).get_mpz_t(), static_cast<unsigned long>(t));
          Rational ratio(sc.prescribed, denom);
          ratio.canonicalize();
          CHECK(ratio == predicted_pmf(t, s, p));
        }
        // Every vector of H^0 restricted to the points is either zero or not at each point.
        BigInt expect;
        mpz_pow_ui(expect.get_mpz_t(), BigInt(P * P * P - 1).get_mpz_t(), static_cast<unsigned long>(t));
        CHECK(sum == expect);
      }
    }
  }

  TEST_CASE("predicted mean and variance") {
    auto mv = predicted_mean_variance(P2_2);
    CHECK(mv.mean == 3);
    CHECK(mv.variance == Q("12/7"));
    mv = predicted_mean_variance(Q_2);
    CHECK(mv.mean == Q("27/7"));
    CHECK(mv.variance == Q("108/49"));
    mv = predicted_mean_variance(P2_3);
    CHECK(mv.mean == 4);
    CHECK(mv.variance == Q("36/13"));
    for (std::uint32_t p : {2U, 3U, 5U, 7U, 11U})
      CHECK(predicted_mean_variance(SurfaceModel{Surface::P2, p}).mean == p + 1);
  }

  TEST_CASE("Ihara bound") {
    CHECK(ihara_lower_bound(5, 13) == Q("14/3"));
    CHECK(ihara_lower_bound(2, 13) == Q("7/6"));
    CHECK_THROWS_AS(ihara_lower_bound(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(ihara_lower_bound(2, 15), std::invalid_argument);
    CHECK_THROWS_AS(ihara_lower_bound(4, 13), std::invalid_argument);
  }
}
