#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ccs/radix.hpp"

namespace ccs {

/// One product term c * prod_s x_s^{e_s} of an extended Boolean function.
/// Variable indices are 1-based; exponents lie in [1, q-1].
struct Monomial {
  std::map<int, int> factors;  // variable index -> exponent
  int coefficient = 0;         // element of Z_q
};

/// A polynomial map Z_q^m -> Z_q. Immutable once built; helpers return
/// new functions.
struct ExtendedBooleanFunction {
  int q = 2;
  int m = 1;
  std::vector<Monomial> terms;
  int constant = 0;
};

/// A length-L sequence of Z_q symbols.
struct QarySequence {
  int q = 2;
  std::vector<int> values;

  std::size_t length() const { return values.size(); }
};

/// Evaluate f at a point given by its digit vector. Digits must be m
/// values in [0, q). Powers are computed as integer products of the
/// digit reduced mod q at every step, so non-prime q is handled the
/// same way as prime q.
int evaluate(const ExtendedBooleanFunction& f, const RadixIndex& point);

/// First L entries of the full radix-q expansion of f
/// (values[i] = f applied to the base-q digits of i).
/// Throws std::out_of_range unless 1 <= L <= q^m.
QarySequence expand(const ExtendedBooleanFunction& f, std::uint64_t L);

/// Same truncated expansion but with the index decomposed in base 2
/// instead of base q; values are still reduced mod q. This is the
/// indexing convention of generalized Boolean functions with q-ary
/// outputs. Requires 1 <= L <= 2^m.
QarySequence expand_binary_index(const ExtendedBooleanFunction& f,
                                 std::uint64_t L);

/// f plus a linear form: offsets maps variable index (1-based) to a
/// Z_q coefficient; constant_delta is added to the constant term.
ExtendedBooleanFunction add_linear(const ExtendedBooleanFunction& f,
                                   const std::map<int, int>& offsets,
                                   int constant_delta);

}  // namespace ccs
