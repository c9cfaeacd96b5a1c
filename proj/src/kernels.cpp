#include "qillum/kernels.hpp"

#include "qillum/error.hpp"

namespace qillum {

std::string_view to_string(KernelKind k) {
  switch (k) {
    case KernelKind::Auto: return "auto";
    case KernelKind::Scalar: return "scalar";
    case KernelKind::Avx2: return "avx2";
  }
  return "?";
}

bool avx2_available() {
#if defined(__x86_64__) || defined(_M_X64)
  static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return ok;
#else
  return false;
#endif
}

KernelKind resolve_kernel(KernelKind k) {
  if (k == KernelKind::Auto) return avx2_available() ? KernelKind::Avx2 : KernelKind::Scalar;
  if (k == KernelKind::Avx2 && !avx2_available())
    throw DomainError("AVX2 kernel requested but not supported on this CPU");
  return k;
}

void evaluate_records_scalar(std::span<const CorrelationVector> in, const ProtocolParams& params,
                             BasisSense sense, std::span<AdvantageRecord> out) {
  if (in.size() != out.size()) throw DomainError("input and output sizes differ");
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = quantum_advantage(in[i], params, sense);
}

void evaluate_records(std::span<const CorrelationVector> in, const ProtocolParams& params,
                      BasisSense sense, std::span<AdvantageRecord> out, KernelKind kind) {
  switch (resolve_kernel(kind)) {
    case KernelKind::Avx2: evaluate_records_avx2(in, params, sense, out); return;
    default: evaluate_records_scalar(in, params, sense, out); return;
  }
}

}  // namespace qillum
