#include <algorithm>
#include <cstdint>
#include <numbers>

#include "qillum/error.hpp"
#include "qillum/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define QILLUM_HAVE_AVX2_KERNEL 1
#endif

namespace qillum {

#ifdef QILLUM_HAVE_AVX2_KERNEL

namespace {

#define QILLUM_AVX2 __attribute__((target("avx2,fma")))

// Lane-wise mirror of the scalar closed forms. Every expression keeps the
// operation order of the scalar reference so the only difference is log2.

QILLUM_AVX2 inline __m256d splat(double v) { return _mm256_set1_pd(v); }

QILLUM_AVX2 inline __m256d abs_pd(__m256d x) {
  return _mm256_andnot_pd(_mm256_set1_pd(-0.0), x);
}

QILLUM_AVX2 inline __m256d select(__m256d mask, __m256d if_true, __m256d if_false) {
  return _mm256_blendv_pd(if_false, if_true, mask);
}

// log2(x) for positive normal x. x = m 2^e with m in [sqrt(1/2), sqrt(2)),
// ln m = 2 atanh(s), s = (m - 1)/(m + 1), |s| < 0.1716; twelve odd terms
// reach double precision.
QILLUM_AVX2 inline __m256d log2_pd(__m256d x) {
  const __m256i bits = _mm256_castpd_si256(x);
  const __m256i biased = _mm256_srli_epi64(bits, 52);
  const __m256i mantissa_bits =
      _mm256_or_si256(_mm256_and_si256(bits, _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL)),
                      _mm256_set1_epi64x(0x3FF0000000000000LL));
  __m256d m = _mm256_castsi256_pd(mantissa_bits);
  // biased exponent to double via the 2^52 trick
  const __m256d two52 = splat(4503599627370496.0);
  __m256d e = _mm256_sub_pd(
      _mm256_castsi256_pd(_mm256_or_si256(biased, _mm256_castpd_si256(two52))), two52);
  e = _mm256_sub_pd(e, splat(1023.0));

  const __m256d big = _mm256_cmp_pd(m, splat(std::numbers::sqrt2), _CMP_GT_OQ);
  m = select(big, _mm256_mul_pd(m, splat(0.5)), m);
  e = _mm256_add_pd(e, _mm256_and_pd(big, splat(1.0)));

  const __m256d one = splat(1.0);
  const __m256d s = _mm256_div_pd(_mm256_sub_pd(m, one), _mm256_add_pd(m, one));
  const __m256d z = _mm256_mul_pd(s, s);
  __m256d p = splat(1.0 / 23.0);
  p = _mm256_fmadd_pd(p, z, splat(1.0 / 21.0));
  p = _mm256_fmadd_pd(p, z, splat(1.0 / 19.0));
  p = _mm256_fmadd_pd(p, z, splat(1.0 / 17.0));
  p = _mm256_fmadd_pd(p, z, splat(1.0 / 15.0));
  p = _mm256_fmadd_pd(p, z, splat(1.0 / 13.0));
  p = _mm256_fmadd_pd(p, z, splat(1.0 / 11.0));
  p = _mm256_fmadd_pd(p, z, splat(1.0 / 9.0));
  p = _mm256_fmadd_pd(p, z, splat(1.0 / 7.0));
  p = _mm256_fmadd_pd(p, z, splat(1.0 / 5.0));
  p = _mm256_fmadd_pd(p, z, splat(1.0 / 3.0));
  // ln m = 2 s + 2 s z p  (keeps the leading term exact)
  const __m256d two_s = _mm256_add_pd(s, s);
  const __m256d ln_m = _mm256_fmadd_pd(_mm256_mul_pd(two_s, z), p, two_s);
  return _mm256_fmadd_pd(ln_m, splat(std::numbers::log2e), e);
}

// x log2 x with 0 for x <= 0.
QILLUM_AVX2 inline __m256d xlog2x(__m256d x) {
  const __m256d positive = _mm256_cmp_pd(x, _mm256_setzero_pd(), _CMP_GT_OQ);
  const __m256d safe = select(positive, x, splat(1.0));
  const __m256d v = _mm256_mul_pd(safe, log2_pd(safe));
  return select(positive, v, _mm256_setzero_pd());
}

// spectrum_entropy over four lanes of eigenvalues, summed in order.
QILLUM_AVX2 inline __m256d entropy4(__m256d l1, __m256d l2, __m256d l3, __m256d l4) {
  __m256d s = _mm256_setzero_pd();
  s = _mm256_sub_pd(s, xlog2x(l1));
  s = _mm256_sub_pd(s, xlog2x(l2));
  s = _mm256_sub_pd(s, xlog2x(l3));
  s = _mm256_sub_pd(s, xlog2x(l4));
  return s;
}

struct Spectrum4 {
  __m256d l1, l2, l3, l4;
};

QILLUM_AVX2 inline Spectrum4 spectrum4(__m256d c1, __m256d c2, __m256d c3) {
  const __m256d one = splat(1.0);
  const __m256d q = splat(0.25);
  const __m256d a = _mm256_sub_pd(_mm256_sub_pd(_mm256_sub_pd(one, c1), c2), c3);
  const __m256d b = _mm256_add_pd(_mm256_add_pd(_mm256_sub_pd(one, c1), c2), c3);
  const __m256d c = _mm256_add_pd(_mm256_sub_pd(_mm256_add_pd(one, c1), c2), c3);
  const __m256d d = _mm256_sub_pd(_mm256_add_pd(_mm256_add_pd(one, c1), c2), c3);
  return {_mm256_mul_pd(a, q), _mm256_mul_pd(b, q), _mm256_mul_pd(c, q), _mm256_mul_pd(d, q)};
}

// (1 + y) ln(1 + y), zero when 1 + y <= 0. ln(1 + y) via Kahan's
// log(u) * y / (u - 1), which is y itself when u rounds to 1.
QILLUM_AVX2 inline __m256d one_plus_log1p(__m256d y) {
  const __m256d one = splat(1.0);
  const __m256d u = _mm256_add_pd(one, y);
  const __m256d positive = _mm256_cmp_pd(u, _mm256_setzero_pd(), _CMP_GT_OQ);
  const __m256d unit = _mm256_cmp_pd(u, one, _CMP_EQ_OQ);
  const __m256d safe_u = select(positive, u, one);
  const __m256d um1 = _mm256_sub_pd(safe_u, one);
  const __m256d safe_den = select(unit, one, um1);
  const __m256d ln_u = _mm256_mul_pd(log2_pd(safe_u), splat(std::numbers::ln2));
  const __m256d l1p = select(unit, y, _mm256_div_pd(_mm256_mul_pd(ln_u, y), safe_den));
  return select(positive, _mm256_mul_pd(u, l1p), _mm256_setzero_pd());
}

QILLUM_AVX2 inline __m256d max_abs3(__m256d c1, __m256d c2, __m256d c3) {
  return _mm256_max_pd(_mm256_max_pd(abs_pd(c1), abs_pd(c2)), abs_pd(c3));
}

// Analytic discord. Flags lanes outside [-1e-9, 1 + 1e-9] in `bad`.
QILLUM_AVX2 inline __m256d discord4(__m256d c1, __m256d c2, __m256d c3, __m256d& bad) {
  const __m256d zero = _mm256_setzero_pd();
  const __m256d n1 = _mm256_sub_pd(zero, c1);
  const __m256d y1 = _mm256_sub_pd(_mm256_sub_pd(n1, c2), c3);
  const __m256d y2 = _mm256_add_pd(_mm256_add_pd(n1, c2), c3);
  const __m256d y3 = _mm256_add_pd(_mm256_sub_pd(c1, c2), c3);
  const __m256d y4 = _mm256_sub_pd(_mm256_add_pd(c1, c2), c3);
  const __m256d mutual = _mm256_div_pd(
      _mm256_add_pd(_mm256_add_pd(one_plus_log1p(y1), one_plus_log1p(y2)),
                    _mm256_add_pd(one_plus_log1p(y3), one_plus_log1p(y4))),
      splat(4.0 * std::numbers::ln2));
  const __m256d z = max_abs3(c1, c2, c3);
  const __m256d classical =
      _mm256_div_pd(_mm256_add_pd(one_plus_log1p(z), one_plus_log1p(_mm256_sub_pd(zero, z))),
                    splat(2.0 * std::numbers::ln2));
  const __m256d d = _mm256_sub_pd(mutual, classical);
  bad = _mm256_or_pd(bad, _mm256_or_pd(_mm256_cmp_pd(d, splat(-1e-9), _CMP_LT_OQ),
                                       _mm256_cmp_pd(d, splat(1.0 + 1e-9), _CMP_GT_OQ)));
  return _mm256_min_pd(_mm256_max_pd(d, zero), splat(1.0));
}

// Entropy of the product-dephased state with weights (1 +/- t)/4.
QILLUM_AVX2 inline __m256d dephased_entropy4(__m256d t) {
  const __m256d one = splat(1.0);
  const __m256d hi = _mm256_div_pd(_mm256_add_pd(one, t), splat(4.0));
  const __m256d lo = _mm256_div_pd(_mm256_sub_pd(one, t), splat(4.0));
  return entropy4(hi, hi, lo, lo);
}

// binary_entropy(p) with q = 1 - p, as the scalar shannon loop.
QILLUM_AVX2 inline __m256d binary_entropy4(__m256d p) {
  const __m256d q = _mm256_sub_pd(splat(1.0), p);
  __m256d h = _mm256_setzero_pd();
  h = _mm256_sub_pd(h, xlog2x(p));
  h = _mm256_sub_pd(h, xlog2x(q));
  return h;
}

struct LaneOut {
  alignas(32) double l1[4], l2[4], l3[4], l4[4];
  alignas(32) double concurrence[4], eof[4], delta_in[4], chi_q[4], chi_c[4], qa[4],
      delta_enc[4];
};

QILLUM_AVX2 void evaluate_group(const double* c1p, const double* c2p, const double* c3p,
                                double eta, double p0, double p1, BasisSense sense,
                                LaneOut& out) {
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = splat(1.0);
  const __m256d c1 = _mm256_load_pd(c1p);
  const __m256d c2 = _mm256_load_pd(c2p);
  const __m256d c3 = _mm256_load_pd(c3p);

  const Spectrum4 sp = spectrum4(c1, c2, c3);
  const __m256d min_l = _mm256_min_pd(_mm256_min_pd(sp.l1, sp.l2), _mm256_min_pd(sp.l3, sp.l4));
  if (_mm256_movemask_pd(_mm256_cmp_pd(min_l, splat(-1e-12), _CMP_LT_OQ)) != 0)
    throw DomainError("unphysical correlation vector in AVX2 batch");

  // concurrence and EoF
  const __m256d l_max = _mm256_max_pd(_mm256_max_pd(sp.l1, sp.l2), _mm256_max_pd(sp.l3, sp.l4));
  const __m256d conc = _mm256_max_pd(zero, _mm256_sub_pd(_mm256_mul_pd(splat(2.0), l_max), one));
  const __m256d r = _mm256_sqrt_pd(_mm256_sub_pd(one, _mm256_mul_pd(conc, conc)));
  const __m256d eof_p = _mm256_div_pd(_mm256_add_pd(one, r), splat(2.0));
  const __m256d entangled = _mm256_cmp_pd(conc, zero, _CMP_NEQ_OQ);
  const __m256d eof = select(entangled, binary_entropy4(eof_p), zero);

  // scaled ensembles
  const __m256d s_eta = splat(eta);
  const __m256d s_bar = splat(p0 * eta);
  const __m256d e1 = _mm256_mul_pd(s_eta, c1), e2 = _mm256_mul_pd(s_eta, c2),
                e3 = _mm256_mul_pd(s_eta, c3);
  const __m256d b1 = _mm256_mul_pd(s_bar, c1), b2 = _mm256_mul_pd(s_bar, c2),
                b3 = _mm256_mul_pd(s_bar, c3);

  __m256d bad = zero;
  const __m256d delta_in = discord4(c1, c2, c3, bad);

  const Spectrum4 sp0 = spectrum4(e1, e2, e3);
  const Spectrum4 spb = spectrum4(b1, b2, b3);
  const __m256d quarter = splat(0.25);
  const __m256d s_bar_ent = entropy4(spb.l1, spb.l2, spb.l3, spb.l4);
  const __m256d s0_ent = entropy4(sp0.l1, sp0.l2, sp0.l3, sp0.l4);
  const __m256d s1_ent = entropy4(quarter, quarter, quarter, quarter);
  const __m256d chi_q = _mm256_sub_pd(
      _mm256_sub_pd(s_bar_ent, _mm256_mul_pd(splat(p0), s0_ent)), _mm256_mul_pd(splat(p1), s1_ent));

  __m256d chi_c;
  if (sense == BasisSense::Min) {
    const __m256d h0 = dephased_entropy4(zero);
    chi_c = _mm256_sub_pd(_mm256_sub_pd(h0, _mm256_mul_pd(splat(p0), h0)),
                          _mm256_mul_pd(splat(p1), h0));
  } else {
    // dominant axis of eta c, first index wins ties
    __m256d t0 = e1, tb = b1, best = abs_pd(e1);
    const __m256d take2 = _mm256_cmp_pd(abs_pd(e2), best, _CMP_GT_OQ);
    t0 = select(take2, e2, t0);
    tb = select(take2, b2, tb);
    best = select(take2, abs_pd(e2), best);
    const __m256d take3 = _mm256_cmp_pd(abs_pd(e3), best, _CMP_GT_OQ);
    t0 = select(take3, e3, t0);
    tb = select(take3, b3, tb);
    chi_c = _mm256_sub_pd(
        _mm256_sub_pd(dephased_entropy4(tb), _mm256_mul_pd(splat(p0), dephased_entropy4(t0))),
        _mm256_mul_pd(splat(p1), dephased_entropy4(zero)));
  }

  const __m256d d0 = discord4(e1, e2, e3, bad);
  const __m256d db = discord4(b1, b2, b3, bad);
  if (_mm256_movemask_pd(bad) != 0)
    throw NumericalFailure("discord outside [0, 1] beyond rounding in AVX2 batch", 0.0);

  _mm256_store_pd(out.l1, sp.l1);
  _mm256_store_pd(out.l2, sp.l2);
  _mm256_store_pd(out.l3, sp.l3);
  _mm256_store_pd(out.l4, sp.l4);
  _mm256_store_pd(out.concurrence, conc);
  _mm256_store_pd(out.eof, eof);
  _mm256_store_pd(out.delta_in, delta_in);
  _mm256_store_pd(out.chi_q, chi_q);
  _mm256_store_pd(out.chi_c, chi_c);
  _mm256_store_pd(out.qa, _mm256_sub_pd(chi_q, chi_c));
  _mm256_store_pd(out.delta_enc, _mm256_sub_pd(_mm256_mul_pd(splat(p0), d0), db));
}

#undef QILLUM_AVX2

}  // namespace

void evaluate_records_avx2(std::span<const CorrelationVector> in, const ProtocolParams& params,
                           BasisSense sense, std::span<AdvantageRecord> out) {
  if (in.size() != out.size()) throw DomainError("input and output sizes differ");
  if (!avx2_available()) throw DomainError("AVX2 kernel requested but not supported on this CPU");

  alignas(32) double c1[4], c2[4], c3[4];
  LaneOut lanes;
  for (std::size_t base = 0; base < in.size(); base += 4) {
    const std::size_t n = std::min<std::size_t>(4, in.size() - base);
    // pad the tail with the maximally mixed state
    for (std::size_t k = 0; k < 4; ++k) {
      const CorrelationVector c = k < n ? in[base + k] : CorrelationVector{};
      c1[k] = c.c1();
      c2[k] = c.c2();
      c3[k] = c.c3();
    }
    evaluate_group(c1, c2, c3, params.eta(), params.p0(), params.p1(), sense, lanes);
    for (std::size_t k = 0; k < n; ++k) {
      AdvantageRecord& r = out[base + k];
      r.c = in[base + k];
      r.lambda = {lanes.l1[k], lanes.l2[k], lanes.l3[k], lanes.l4[k]};
      r.concurrence = lanes.concurrence[k];
      r.eof = lanes.eof[k];
      r.delta_in = lanes.delta_in[k];
      r.chi_q = lanes.chi_q[k];
      r.chi_c = lanes.chi_c[k];
      r.qa = lanes.qa[k];
      r.delta_enc = lanes.delta_enc[k];
      r.separable = r.concurrence == 0.0;
    }
  }
}

#else

void evaluate_records_avx2(std::span<const CorrelationVector>, const ProtocolParams&, BasisSense,
                           std::span<AdvantageRecord>) {
  throw DomainError("AVX2 kernel not compiled for this architecture");
}

#endif

}  // namespace qillum
