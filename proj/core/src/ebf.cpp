#include "ccs/ebf.hpp"

#include <stdexcept>

namespace ccs {

namespace {

int pow_mod(int base, int exp, int q) {
  int result = 1 % q;
  base %= q;
  for (int e = 0; e < exp; ++e) result = (result * base) % q;
  return result;
}

}  // namespace

int evaluate(const ExtendedBooleanFunction& f, const RadixIndex& point) {
  if (static_cast<int>(point.size()) != f.m) {
    throw std::invalid_argument("evaluate: point has wrong arity");
  }
  int acc = ((f.constant % f.q) + f.q) % f.q;
  for (const Monomial& term : f.terms) {
    int prod = ((term.coefficient % f.q) + f.q) % f.q;
    for (const auto& [var, exp] : term.factors) {
      prod = (prod * pow_mod(point[static_cast<std::size_t>(var - 1)], exp, f.q)) % f.q;
    }
    acc = (acc + prod) % f.q;
  }
  return acc;
}

namespace {

QarySequence expand_with_radix(const ExtendedBooleanFunction& f, int radix,
                               std::uint64_t L) {
  const std::uint64_t full =
      pow_u64(static_cast<std::uint64_t>(radix), static_cast<unsigned>(f.m));
  if (L < 1 || L > full) {
    throw std::out_of_range("expand: length out of [1, radix^m]");
  }
  QarySequence seq;
  seq.q = f.q;
  seq.values.reserve(L);
  // Incrementally maintained digit vector; avoids a division chain per i.
  RadixIndex digits(static_cast<std::size_t>(f.m), 0);
  for (std::uint64_t i = 0; i < L; ++i) {
    seq.values.push_back(evaluate(f, digits));
    for (std::size_t k = 0; k < digits.size(); ++k) {
      if (++digits[k] < radix) break;
      digits[k] = 0;
    }
  }
  return seq;
}

}  // namespace

QarySequence expand(const ExtendedBooleanFunction& f, std::uint64_t L) {
  return expand_with_radix(f, f.q, L);
}

QarySequence expand_binary_index(const ExtendedBooleanFunction& f,
                                 std::uint64_t L) {
  return expand_with_radix(f, 2, L);
}

ExtendedBooleanFunction add_linear(const ExtendedBooleanFunction& f,
                                   const std::map<int, int>& offsets,
                                   int constant_delta) {
  ExtendedBooleanFunction g = f;
  for (const auto& [var, coeff] : offsets) {
    if (var < 1 || var > f.m) {
      throw std::invalid_argument("add_linear: variable index out of [1, m]");
    }
    int c = ((coeff % f.q) + f.q) % f.q;
    if (c == 0) continue;
    Monomial term;
    term.factors[var] = 1;
    term.coefficient = c;
    g.terms.push_back(term);
  }
  g.constant = (((g.constant + constant_delta) % f.q) + f.q) % f.q;
  return g;
}

}  // namespace ccs
