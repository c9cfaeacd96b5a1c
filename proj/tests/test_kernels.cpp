#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "qillum/error.hpp"
#include "qillum/kernels.hpp"
#include "qillum/random.hpp"

using namespace qillum;

namespace {

double max_field_gap(const AdvantageRecord& a, const AdvantageRecord& b) {
  double g = 0.0;
  for (int i = 0; i < 4; ++i) g = std::max(g, std::abs(a.lambda[i] - b.lambda[i]));
  for (auto [x, y] : {std::pair{a.concurrence, b.concurrence}, {a.eof, b.eof},
                      {a.delta_in, b.delta_in}, {a.chi_q, b.chi_q}, {a.chi_c, b.chi_c},
                      {a.qa, b.qa}, {a.delta_enc, b.delta_enc}})
    g = std::max(g, std::abs(x - y));
  return g;
}

std::vector<CorrelationVector> edge_states() {
  return {CorrelationVector(0, 0, 0),       CorrelationVector(1, -1, 1),
          CorrelationVector(-1, 1, 1),      CorrelationVector(1, 1, -1),
          CorrelationVector(-1, -1, -1),    CorrelationVector(1, 0, 0),
          CorrelationVector(0, -1, 0),      CorrelationVector(0, 0, 1),
          CorrelationVector(1e-9, 0, 0),    CorrelationVector(1e-9, 1e-9, 1e-9),
          CorrelationVector(0.5, -0.5, 0.5), CorrelationVector(1.0 / 3, -1.0 / 3, 1.0 / 3),
          CorrelationVector(1, 0.5, -0.5),  CorrelationVector(0.25, 0.25, 0.25)};
}

}  // namespace

TEST_CASE("kernel resolution") {
  CHECK(resolve_kernel(KernelKind::Scalar) == KernelKind::Scalar);
  const auto k = resolve_kernel(KernelKind::Auto);
  CHECK(k == (avx2_available() ? KernelKind::Avx2 : KernelKind::Scalar));
  if (!avx2_available()) CHECK_THROWS_AS(resolve_kernel(KernelKind::Avx2), DomainError);
  CHECK(to_string(KernelKind::Scalar) == "scalar");
  CHECK(to_string(KernelKind::Avx2) == "avx2");
}

TEST_CASE("scalar kernel reproduces per-state evaluation") {
  Lcg rng(5);
  std::vector<CorrelationVector> in;
  for (int i = 0; i < 64; ++i) in.push_back(random_physical_state(rng));
  const ProtocolParams params(0.6, 0.4);
  std::vector<AdvantageRecord> out(in.size());
  evaluate_records_scalar(in, params, BasisSense::Max, out);
  for (std::size_t i = 0; i < in.size(); ++i) {
    const auto r = quantum_advantage(in[i], params);
    CHECK(out[i].qa == r.qa);
    CHECK(out[i].delta_in == r.delta_in);
    CHECK(out[i].separable == r.separable);
  }
}

TEST_CASE("property: AVX2 kernel matches the scalar kernel field by field") {
  if (!avx2_available()) return;
  Lcg rng(77);
  std::vector<CorrelationVector> in = edge_states();
  for (int i = 0; i < 4000; ++i) in.push_back(random_physical_state(rng));
  for (auto params : {ProtocolParams(0.5, 0.5), ProtocolParams(1.0, 0.1), ProtocolParams(0.0, 0.9),
                      ProtocolParams(0.03, 0.7)}) {
    for (auto sense : {BasisSense::Max, BasisSense::Min}) {
      std::vector<AdvantageRecord> a(in.size()), b(in.size());
      evaluate_records_scalar(in, params, sense, a);
      evaluate_records_avx2(in, params, sense, b);
      double gap = 0.0;
      for (std::size_t i = 0; i < in.size(); ++i) {
        gap = std::max(gap, max_field_gap(a[i], b[i]));
        CHECK(a[i].separable == b[i].separable);
        CHECK(a[i].c == b[i].c);
      }
      CHECK(gap < 1e-13);
    }
  }
}

TEST_CASE("AVX2 results do not depend on position within a lane group") {
  if (!avx2_available()) return;
  const ProtocolParams params(0.5, 0.5);
  const auto edges = edge_states();
  std::vector<AdvantageRecord> single(1);
  for (const auto& c : edges) {
    const std::vector<CorrelationVector> one{c};
    evaluate_records_avx2(one, params, BasisSense::Max, single);
    for (std::size_t pad = 0; pad < 7; ++pad) {
      std::vector<CorrelationVector> in(pad, CorrelationVector(0.1, 0.2, 0.3));
      in.push_back(c);
      std::vector<AdvantageRecord> out(in.size());
      evaluate_records_avx2(in, params, BasisSense::Max, out);
      CHECK(out.back().qa == single[0].qa);
      CHECK(out.back().eof == single[0].eof);
      CHECK(out.back().delta_in == single[0].delta_in);
    }
  }
}

TEST_CASE("kernels reject bad batches") {
  const ProtocolParams params(0.5, 0.5);
  const std::vector<CorrelationVector> bad{CorrelationVector(0.1, 0.1, 0.1),
                                           CorrelationVector(1, 1, 1)};
  std::vector<AdvantageRecord> out(2), short_out(1);
  CHECK_THROWS_AS(evaluate_records_scalar(bad, params, BasisSense::Max, out), DomainError);
  CHECK_THROWS_AS(evaluate_records(bad, params, BasisSense::Max, short_out, KernelKind::Scalar),
                  DomainError);
  if (avx2_available())
    CHECK_THROWS_AS(evaluate_records_avx2(bad, params, BasisSense::Max, out), DomainError);
  std::vector<AdvantageRecord> none;
  CHECK_NOTHROW(evaluate_records(std::span<const CorrelationVector>{}, params, BasisSense::Max,
                                 none));
}
