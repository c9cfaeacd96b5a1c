#include <doctest.h>

#include <cmath>

#include "qillum/correlations.hpp"
#include "qillum/error.hpp"
#include "qillum/illumination.hpp"
#include "support.hpp"

using namespace qillum;

namespace {

const CorrelationVector kBell(1, -1, 1);

CorrelationVector random_physical(oracle::Lcg& rng) {
  for (;;) {
    const CorrelationVector c(2 * rng.next() - 1, 2 * rng.next() - 1, 2 * rng.next() - 1);
    if (is_physical(c)) return c;
  }
}

}  // namespace

TEST_CASE("protocol parameters") {
  CHECK_NOTHROW(ProtocolParams(0.0, 0.5));
  CHECK_NOTHROW(ProtocolParams(1.0, 0.999));
  CHECK_THROWS_AS(ProtocolParams(-0.01, 0.5), DomainError);
  CHECK_THROWS_AS(ProtocolParams(1.01, 0.5), DomainError);
  CHECK_THROWS_AS(ProtocolParams(0.5, 0.0), DomainError);
  CHECK_THROWS_AS(ProtocolParams(0.5, 1.0), DomainError);
  CHECK(ProtocolParams(0.5, 0.3).p1() == doctest::Approx(0.7));
}

TEST_CASE("ensemble") {
  const auto e = make_ensemble(CorrelationVector(0.4, -0.2, 0.8), ProtocolParams(0.5, 0.25));
  CHECK(e.target_present == CorrelationVector(0.2, -0.1, 0.4));
  CHECK(e.target_absent == CorrelationVector(0, 0, 0));
  CHECK(e.average[2] == doctest::Approx(0.1));
}

TEST_CASE("Bell resource at full reflectivity") {
  const ProtocolParams params(1.0, 0.5);
  const auto r = quantum_advantage(kBell, params);
  CHECK(r.chi_q == doctest::Approx(0.54879494069539853).epsilon(1e-14));
  CHECK(r.chi_c == doctest::Approx(0.31127812445913286).epsilon(1e-14));
  CHECK(r.qa == doctest::Approx(0.23751681623626567).epsilon(1e-13));
  CHECK(r.delta_enc == doctest::Approx(0.23751681623626567).epsilon(1e-13));
  CHECK_FALSE(r.separable);
  CHECK(r.eof == doctest::Approx(1.0));
}

TEST_CASE("Bell resource at half reflectivity") {
  const ProtocolParams params(0.5, 0.5);
  const auto r = quantum_advantage(kBell, params);
  CHECK(r.chi_q == doctest::Approx(0.10584334459644858).epsilon(1e-13));
  CHECK(r.chi_c == doctest::Approx(0.048794940695398533).epsilon(1e-13));
  CHECK(r.qa == doctest::Approx(0.057048403901050052).epsilon(1e-12));
  CHECK(discord_of_encoding(kBell, params) == doctest::Approx(0.057048403901050052).epsilon(1e-12));
}

TEST_CASE("other frozen states") {
  const auto a = quantum_advantage(CorrelationVector(0.3, -0.2, 0.6), ProtocolParams(0.7, 0.3));
  CHECK(a.chi_q == doctest::Approx(0.034529991312725794).epsilon(1e-12));
  CHECK(a.chi_c == doctest::Approx(0.027901016487334949).epsilon(1e-12));
  CHECK(a.qa == doctest::Approx(0.0066289748253908441).epsilon(1e-11));
  const auto b = quantum_advantage(CorrelationVector(0.6, 0.1, -0.3), ProtocolParams(0.5, 0.5));
  CHECK(b.qa == doctest::Approx(0.0039543261930069648).epsilon(1e-11));
  CHECK(b.delta_enc == doctest::Approx(0.0039543261930069648).epsilon(1e-11));
}

TEST_CASE("joint Holevo information against the matrix reference") {
  oracle::Lcg rng{51};
  for (int n = 0; n < 100; ++n) {
    const auto c = random_physical(rng);
    const double eta = rng.next(), p0 = 0.05 + 0.9 * rng.next();
    const ProtocolParams params(eta, p0);
    const double want = oracle::holevo_joint(c.c1(), c.c2(), c.c3(), eta, p0);
    CHECK(std::abs(holevo_joint(make_ensemble(c, params), params) - want) < 1e-12);
  }
}

TEST_CASE("classical Holevo: fast path, optimiser and brute-force reference agree") {
  oracle::Lcg rng{53};
  for (int n = 0; n < 6; ++n) {
    const auto c = random_physical(rng);
    const double eta = 0.2 + 0.8 * rng.next(), p0 = 0.2 + 0.6 * rng.next();
    const ProtocolParams params(eta, p0);
    const auto ens = make_ensemble(c, params);
    const double fast = holevo_classical_pauli(ens, params).value;
    const double matrix = holevo_classical(ens, params).value;
    const double brute = oracle::holevo_classical_brute(c.c1(), c.c2(), c.c3(), eta, p0);
    CHECK(std::abs(fast - brute) < 1e-12);
    CHECK(std::abs(matrix - fast) < 1e-9);
  }
}

TEST_CASE("classical Holevo picks the dominant axis") {
  const ProtocolParams params(0.8, 0.5);
  const auto ens = make_ensemble(CorrelationVector(0.2, -0.7, 0.1), params);
  const auto best = holevo_classical_pauli(ens, params);
  CHECK(std::abs(std::abs(best.a.unit_vector()[1]) - 1.0) < 1e-15);
  CHECK(std::abs(std::abs(best.b.unit_vector()[1]) - 1.0) < 1e-15);
  // Orthogonal axes carry no correlation: chi_c vanishes.
  CHECK(std::abs(holevo_classical_pauli(ens, params, BasisSense::Min).value) < 1e-15);
  CHECK(holevo_classical(ens, params, BasisSense::Min).value < 1e-9);
}

TEST_CASE("property: quantum advantage equals discord of encoding") {
  oracle::Lcg rng{57};
  for (int n = 0; n < 2000; ++n) {
    const auto c = random_physical(rng);
    const ProtocolParams params(rng.next(), 0.01 + 0.98 * rng.next());
    const auto r = quantum_advantage(c, params);
    CHECK(std::abs(r.qa - r.delta_enc) < 1e-12);
    CHECK(r.qa >= -1e-15);
  }
}

TEST_CASE("discord of encoding against brute-force discord") {
  oracle::Lcg rng{59};
  for (int n = 0; n < 10; ++n) {
    const auto c = random_physical(rng);
    const double eta = rng.next(), p0 = 0.1 + 0.8 * rng.next();
    const double want =
        p0 * oracle::discord_mmm_brute(eta * c.c1(), eta * c.c2(), eta * c.c3()) -
        oracle::discord_mmm_brute(p0 * eta * c.c1(), p0 * eta * c.c2(), p0 * eta * c.c3());
    CHECK(std::abs(discord_of_encoding(c, ProtocolParams(eta, p0)) - want) < 1e-10);
  }
}

TEST_CASE("zero reflectivity carries no information") {
  const auto r = quantum_advantage(kBell, ProtocolParams(0.0, 0.5));
  CHECK(r.chi_q == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(r.chi_c == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(r.qa == 0.0);
}

TEST_CASE("toy protocol curves") {
  std::vector<double> grid;
  for (int i = 0; i <= 100; ++i) grid.push_back(i / 100.0);
  const auto pts = toy_detection_curves(grid);
  REQUIRE(pts.size() == grid.size());
  for (const auto& p : pts) {
    const double e = p.eta;
    CHECK(p.p_joint_posterior == doctest::Approx((1 + 3 * e) / (2 + 3 * e)).epsilon(1e-15));
    CHECK(p.p_local_posterior == doctest::Approx((1 + e) / (2 + e)).epsilon(1e-15));
    CHECK(p.i_joint >= p.i_local - 1e-15);
    const ProtocolParams params(e, 0.5);
    const auto w = quantum_advantage(kBell, params);
    CHECK(std::abs(p.i_joint - w.chi_q) < 1e-12);
    CHECK(std::abs(p.i_local - w.chi_c) < 1e-12);
  }
  CHECK(pts.front().p_joint_posterior == 0.5);
  CHECK(pts.back().p_joint_posterior == doctest::Approx(0.8));
  CHECK(pts.back().i_joint == doctest::Approx(0.54879494069539853).epsilon(1e-14));
  CHECK(pts.back().i_local == doctest::Approx(0.31127812445913286).epsilon(1e-14));
  const std::vector<double> bad{1.5};
  CHECK_THROWS_AS(toy_detection_curves(bad), DomainError);
}

TEST_CASE("high-noise limit and its approach") {
  const ProtocolParams params(0.5, 0.5);
  CHECK(high_noise_limit(params) == 0.0625);
  CHECK(high_noise_limit(ProtocolParams(0.8, 0.3)) == doctest::Approx(0.3 * 0.64 * 0.7));

  const std::vector<double> scales{1e-2, 1e-3};
  // Generic direction: residual is first order (c1 c2 c3 != 0).
  const auto generic = high_noise_asymptotics(CorrelationVector(1, 0.5, 0.3), params, scales);
  CHECK(generic.limit == 0.0625);
  CHECK(generic.points[0].residual == doctest::Approx(-0.0001405393847).epsilon(1e-8));
  CHECK(generic.points[1].residual == doctest::Approx(-1.381331738e-5).epsilon(1e-7));
  CHECK(generic.points[1].observed_order == doctest::Approx(1.0).epsilon(0.02));
  CHECK(std::abs(generic.points[1].extrapolated - 0.0625) < 1e-7);
  // One vanishing component: second order.
  const auto planar = high_noise_asymptotics(CorrelationVector(1, 0.5, 0), params, scales);
  CHECK(planar.points[1].residual == doctest::Approx(-3.66211245e-8).epsilon(1e-6));
  CHECK(planar.points[1].observed_order == doctest::Approx(2.0).epsilon(0.02));

  CHECK_THROWS_AS(high_noise_asymptotics(CorrelationVector(0, 0.5, 0), params, scales),
                  DegenerateDirectionError);
  const std::vector<double> too_big{0.5};
  CHECK_THROWS_AS(high_noise_asymptotics(CorrelationVector(1, 0.5, 0.3), params, too_big),
                  DomainError);
}

TEST_CASE("second-order discord coefficient") {
  const CorrelationVector c(1, 0.5, 0.3);
  CHECK(discord_second_order(c, 1e-2) == doctest::Approx(0.34303783427943904).epsilon(1e-9));
  CHECK(discord_second_order(c, 1e-3) == doctest::Approx(0.34030037466922169).epsilon(1e-8));
  CHECK(discord_second_order(c, 1e-4) == doctest::Approx(0.34003000374306872).epsilon(1e-6));
  // Within 1e-3 relative of c2^2 + c3^2 at s = 1e-3.
  CHECK(std::abs(discord_second_order(c, 1e-3) / 0.34 - 1.0) < 1e-3);
  // The extrapolated estimate meets 1e-4 absolute.
  CHECK(std::abs(discord_second_order_extrapolated(c, 1e-3) - 0.34) < 1e-4);
  CHECK(discord_second_order(CorrelationVector(1, 0, 0), 1e-3) == 0.0);
  CHECK_THROWS_AS(discord_second_order(CorrelationVector(0.3, 1, 0.2), 1e-3), BranchError);
  CHECK_THROWS_AS(discord_second_order(c, 0.1), DomainError);
  CHECK_THROWS_AS(discord_second_order(c, 0.0), DomainError);
}
