#include "ccs/radix.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace ccs {

std::uint64_t pow_u64(std::uint64_t q, unsigned m) {
  std::uint64_t result = 1;
  for (unsigned k = 0; k < m; ++k) {
    if (q != 0 && result > std::numeric_limits<std::uint64_t>::max() / q) {
      throw std::overflow_error("pow_u64: " + std::to_string(q) + "^" +
                                std::to_string(m) + " overflows 64 bits");
    }
    result *= q;
  }
  return result;
}

RadixIndex to_digits(std::uint64_t i, int q, int m) {
  if (q < 2) throw std::out_of_range("to_digits: modulus must be >= 2");
  if (m < 1) throw std::out_of_range("to_digits: digit count must be >= 1");
  if (i >= pow_u64(static_cast<std::uint64_t>(q), static_cast<unsigned>(m))) {
    throw std::out_of_range("to_digits: index " + std::to_string(i) +
                            " out of range for q=" + std::to_string(q) +
                            ", m=" + std::to_string(m));
  }
  RadixIndex digits(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    digits[static_cast<std::size_t>(k)] =
        static_cast<int>(i % static_cast<std::uint64_t>(q));
    i /= static_cast<std::uint64_t>(q);
  }
  return digits;
}

std::uint64_t from_digits(const RadixIndex& digits, int q) {
  std::uint64_t value = 0;
  std::uint64_t place = 1;
  for (int d : digits) {
    if (d < 0 || d >= q) throw std::out_of_range("from_digits: digit out of [0, q)");
    value += static_cast<std::uint64_t>(d) * place;
    place *= static_cast<std::uint64_t>(q);
  }
  return value;
}

}  // namespace ccs
