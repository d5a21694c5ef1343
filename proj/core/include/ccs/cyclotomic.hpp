#pragma once

#include <cstdint>
#include <vector>

namespace ccs {

/// Maximum supported root-of-unity order.
inline constexpr int kMaxModulus = 256;

/// An integer combination sum_k coeffs[k] * xi^k of q-th roots of unity,
/// xi = e^{2*pi*i/q}. The representation is not unique (Z[xi] has
/// relations), so equality must go through is_zero of a difference.
struct RootOfUnitySum {
  int q = 1;
  std::vector<std::int64_t> coeffs;  // size q

  static RootOfUnitySum zero(int q);
};

/// xi^(k mod q) as a sum.
RootOfUnitySum unit(std::int64_t k, int q);

RootOfUnitySum add(const RootOfUnitySum& a, const RootOfUnitySum& b);
RootOfUnitySum sub(const RootOfUnitySum& a, const RootOfUnitySum& b);

/// Complex conjugate: coeffs[k] -> coeffs[(q-k) mod q].
RootOfUnitySum conjugate(const RootOfUnitySum& s);

/// Coefficients of the q-th cyclotomic polynomial Phi_q, ascending degree.
/// Computed by exact integer division Phi_q = (x^q - 1) / prod_{d|q, d<q} Phi_d.
std::vector<std::int64_t> cyclotomic_polynomial(int q);

/// Exact test: true iff sum_k coeffs[k] * xi^k = 0, decided by checking
/// that the coefficient polynomial is divisible by Phi_q over Z.
bool is_zero(const RootOfUnitySum& s);

/// |sum_k coeffs[k] * e^{2*pi*i*k/q}| in floating point. Only for
/// reporting; verdicts always use is_zero.
double magnitude(const RootOfUnitySum& s);

}  // namespace ccs
