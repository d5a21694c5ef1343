#pragma once

#include <cstdint>
#include <vector>

namespace ccs {

/// Little-endian base-q digit vector: digits[0] is the least significant
/// digit, so value = sum digits[k] * q^k.
using RadixIndex = std::vector<int>;

/// q^m as a 64-bit value. Throws std::overflow_error if it does not fit.
std::uint64_t pow_u64(std::uint64_t q, unsigned m);

/// Decompose i into m base-q digits, little-endian.
/// Throws std::out_of_range unless 0 <= i < q^m.
RadixIndex to_digits(std::uint64_t i, int q, int m);

/// Inverse of to_digits.
std::uint64_t from_digits(const RadixIndex& digits, int q);

}  // namespace ccs
