#include "ccs/cyclotomic.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ccs {

namespace {

void check_modulus(int q) {
  if (q < 1) throw std::domain_error("root-of-unity modulus must be >= 1");
  if (q > kMaxModulus) {
    throw std::domain_error("root-of-unity modulus capped at " +
                            std::to_string(kMaxModulus));
  }
}

// Exact division of a by b over Z; b must be monic and must divide a.
std::vector<std::int64_t> divide_exact(std::vector<std::int64_t> a,
                                       const std::vector<std::int64_t>& b) {
  if (a.size() < b.size()) throw std::logic_error("divide_exact: degree underflow");
  std::vector<std::int64_t> quot(a.size() - b.size() + 1, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    std::int64_t coeff = a[k + b.size() - 1];
    quot[k] = coeff;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= coeff * b[j];
  }
  for (std::int64_t r : a) {
    if (r != 0) throw std::logic_error("divide_exact: division not exact");
  }
  return quot;
}

}  // namespace

RootOfUnitySum RootOfUnitySum::zero(int q) {
  check_modulus(q);
  return RootOfUnitySum{q, std::vector<std::int64_t>(static_cast<std::size_t>(q), 0)};
}

RootOfUnitySum unit(std::int64_t k, int q) {
  RootOfUnitySum s = RootOfUnitySum::zero(q);
  std::int64_t r = ((k % q) + q) % q;
  s.coeffs[static_cast<std::size_t>(r)] = 1;
  return s;
}

RootOfUnitySum add(const RootOfUnitySum& a, const RootOfUnitySum& b) {
  if (a.q != b.q) throw std::domain_error("add: modulus mismatch");
  RootOfUnitySum s = a;
  for (std::size_t k = 0; k < s.coeffs.size(); ++k) s.coeffs[k] += b.coeffs[k];
  return s;
}

RootOfUnitySum sub(const RootOfUnitySum& a, const RootOfUnitySum& b) {
  if (a.q != b.q) throw std::domain_error("sub: modulus mismatch");
  RootOfUnitySum s = a;
  for (std::size_t k = 0; k < s.coeffs.size(); ++k) s.coeffs[k] -= b.coeffs[k];
  return s;
}

RootOfUnitySum conjugate(const RootOfUnitySum& s) {
  RootOfUnitySum c = RootOfUnitySum::zero(s.q);
  for (std::size_t k = 0; k < s.coeffs.size(); ++k) {
    c.coeffs[(s.coeffs.size() - k) % s.coeffs.size()] = s.coeffs[k];
  }
  return c;
}

namespace {

std::vector<std::int64_t> compute_cyclotomic(int q) {
  // x^q - 1 divided by the cyclotomic polynomials of the proper divisors.
  std::vector<std::int64_t> num(static_cast<std::size_t>(q) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(q)] = 1;
  for (int d = 1; d < q; ++d) {
    if (q % d == 0) num = divide_exact(std::move(num), cyclotomic_polynomial(d));
  }
  return num;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(int q) {
  check_modulus(q);
  static std::array<std::vector<std::int64_t>, kMaxModulus + 1> cache;
  static std::recursive_mutex cache_mutex;  // compute_cyclotomic recurses
  std::lock_guard<std::recursive_mutex> lock(cache_mutex);
  auto& entry = cache[static_cast<std::size_t>(q)];
  if (entry.empty()) entry = compute_cyclotomic(q);
  return entry;
}

bool is_zero(const RootOfUnitySum& s) {
  check_modulus(s.q);
  const std::vector<std::int64_t> phi = cyclotomic_polynomial(s.q);
  const std::size_t deg = phi.size() - 1;  // Phi_q is monic of this degree
  std::vector<std::int64_t> rem = s.coeffs;
  for (std::size_t k = rem.size(); k-- > deg;) {
    const std::int64_t coeff = rem[k];
    if (coeff == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) rem[k - deg + j] -= coeff * phi[j];
  }
  for (std::size_t k = 0; k < deg; ++k) {
    if (rem[k] != 0) return false;
  }
  return true;
}

double magnitude(const RootOfUnitySum& s) {
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t k = 0; k < s.coeffs.size(); ++k) {
    if (s.coeffs[k] == 0) continue;
    double angle = 2.0 * std::numbers::pi * static_cast<double>(k) /
                   static_cast<double>(s.q);
    acc += static_cast<double>(s.coeffs[k]) *
           std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return std::abs(acc);
}

}  // namespace ccs
