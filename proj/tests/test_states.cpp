#include <doctest.h>

#include <set>

#include "qillum/correlations.hpp"
#include "qillum/error.hpp"
#include "qillum/states.hpp"
#include "support.hpp"

using namespace qillum;
using testsupport::to_eigen;

TEST_CASE("correlation vector validation") {
  CHECK_THROWS_AS(CorrelationVector(1.0000001, 0, 0), DomainError);
  CHECK_THROWS_AS(CorrelationVector(0, -2, 0), DomainError);
  CHECK_THROWS_AS(CorrelationVector(0, 0, std::nan("")), DomainError);
  CHECK_NOTHROW(CorrelationVector(1, -1, 1));
  const CorrelationVector c(0.5, -0.75, 0.25);
  CHECK(c.max_abs() == 0.75);
  CHECK(c.scaled(0.5).c2() == -0.375);
  CHECK_THROWS_AS(c.scaled(1.5), DomainError);
}

TEST_CASE("density matrix matches the Pauli expansion") {
  oracle::Lcg rng{17};
  for (int n = 0; n < 200; ++n) {
    const double a = 2 * rng.next() - 1, b = 2 * rng.next() - 1, c = 2 * rng.next() - 1;
    const CorrelationVector v(a, b, c);
    const auto want = oracle::mmm_density(a, b, c);
    if (!is_physical(v)) {
      CHECK_FALSE(oracle::psd(want, 1e-12));
      continue;
    }
    CHECK((to_eigen(build_density(v).matrix()) - want).norm() < 1e-15);
    auto got = spectrum(v);
    std::sort(got.rbegin(), got.rend());
    const auto ref = oracle::eigenvalues(want);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(got[i] - ref[i]) < 1e-14);
  }
}

TEST_CASE("spectrum ordering") {
  const auto l = spectrum(CorrelationVector(0.1, 0.2, 0.3));
  CHECK(l[0] == doctest::Approx((1 - 0.1 - 0.2 - 0.3) / 4));
  CHECK(l[1] == doctest::Approx((1 - 0.1 + 0.2 + 0.3) / 4));
  CHECK(l[2] == doctest::Approx((1 + 0.1 - 0.2 + 0.3) / 4));
  CHECK(l[3] == doctest::Approx((1 + 0.1 + 0.2 - 0.3) / 4));
}

TEST_CASE("the unit-step micro-grid has eleven physical states") {
  int count = 0, oracle_count = 0;
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      for (int c = -1; c <= 1; ++c) {
        count += is_physical(CorrelationVector(a, b, c));
        oracle_count += oracle::psd(oracle::mmm_density(a, b, c));
      }
  CHECK(oracle_count == 11);
  CHECK(count == 11);
}

TEST_CASE("physicality tolerance") {
  // lambda_1 = -eps / 4 for c = (1, eps/2, eps/2)
  CHECK(is_physical(CorrelationVector(1, 1e-12, 1e-12)));
  CHECK_FALSE(is_physical(CorrelationVector(1, 1e-9, 1e-9)));
}

TEST_CASE("families") {
  CHECK(family_state({Family::Werner, 0.5}) == CorrelationVector(0.5, -0.5, 0.5));
  CHECK(family_state({Family::Alpha, 0.0}) == CorrelationVector(0, 0, -1));
  CHECK(family_state({Family::Alpha, 1.0}) == CorrelationVector(1, -1, 1));
  CHECK(family_state({Family::Beta, 0.5}) == CorrelationVector(1, 0, 0));
  CHECK(family_state({Family::Beta, 1.0}) == CorrelationVector(1, -1, 1));
  CHECK_THROWS_AS(family_state({Family::Beta, 1.5}), DomainError);
  CHECK_THROWS_AS(family_state({Family::Werner, -0.1}), DomainError);
  for (auto f : {Family::Werner, Family::Alpha, Family::Beta})
    for (int i = 0; i <= 100; ++i) CHECK(is_physical(family_state({f, i / 100.0})));
  CHECK(to_string(Family::Alpha) == "alpha");
}

TEST_CASE("property: local orbit preserves spectrum and correlations") {
  oracle::Lcg rng{23};
  for (int n = 0; n < 100; ++n) {
    const CorrelationVector c(2 * rng.next() - 1, 2 * rng.next() - 1, 2 * rng.next() - 1);
    if (!is_physical(c)) continue;
    const auto orbit = local_orbit(c);
    CHECK(orbit.size() == 24);
    CHECK(std::is_sorted(orbit.begin(), orbit.end()));
    CHECK(std::find(orbit.begin(), orbit.end(), c) != orbit.end());
    auto base = spectrum(c);
    std::sort(base.begin(), base.end());
    const auto m = measures(c);
    for (const auto& o : orbit) {
      auto s = spectrum(o);
      std::sort(s.begin(), s.end());
      for (int i = 0; i < 4; ++i) CHECK(s[i] == doctest::Approx(base[i]).epsilon(1e-14));
      const auto mo = measures(o);
      CHECK(std::abs(mo.concurrence - m.concurrence) < 1e-14);
      CHECK(std::abs(mo.discord - m.discord) < 1e-14);
    }
  }
  CHECK(local_orbit(CorrelationVector(0, 0, 0)).size() == 1);
  CHECK(local_orbit(CorrelationVector(1, -1, 1)).size() == 4);
}
