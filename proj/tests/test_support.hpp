#pragma once

// Shared fixtures: the two worked parameter sets used across the suites
// plus random generators for property tests.

#include <numeric>
#include <random>

#include "ccs/constructions.hpp"

namespace ccs::testing {

// Quaternary (16,4,64,16)-ZCCS parameters.
inline Thm3Params example2_params() {
  Thm3Params p;
  p.q = 4;
  p.m = 3;
  p.v = 1;
  p.d = 1;
  p.plan.blocks = {{2, 1}};
  p.a_quad[{1, 1}] = 1;
  p.h_power = {{{1, 1}, 1}, {{2, 1}, 2}, {{3, 1}, 2},
               {{1, 2}, 3}, {{2, 2}, 1}, {{3, 2}, 0},
               {{1, 3}, 2}, {{2, 3}, 1}, {{3, 3}, 3}};
  p.h0 = 1;
  p.b = 1;
  return p;
}

// The quaternary base function of example2_params as a standalone EBF.
inline ExtendedBooleanFunction example2_base() {
  const Thm3Params p = example2_params();
  ExtendedBooleanFunction f;
  f.q = p.q;
  f.m = p.m;
  f.constant = p.h0;
  Monomial quad;
  quad.factors[1] = 1;
  quad.factors[2] = 1;
  quad.coefficient = 1;
  f.terms.push_back(quad);
  for (const auto& [key, c] : p.h_power) {
    if (c % p.q == 0) continue;
    Monomial t;
    t.factors[key.first] = key.second;
    t.coefficient = c;
    f.terms.push_back(t);
  }
  return f;
}

// Ternary (3,27,108)-MOCS parameters; every coefficient equal to 1.
inline Thm1Params example1_params() {
  Thm1Params p;
  p.q = 3;
  p.m = 5;
  p.v = 1;
  p.d = 2;
  p.d_prime = 1;
  p.plan.blocks = {{1, 2}, {3, 4}};
  p.u = 3;
  for (int a = 1; a <= 2; ++a) p.a_quad[{a, 1}] = 1;
  for (int a = 1; a <= 2; ++a) {
    for (int b = 1; b <= 2; ++b) p.b_cross[{a, b, 1}] = 1;
  }
  for (int s = 1; s <= 5; ++s) {
    for (int l = 1; l <= 2; ++l) p.c_power[{s, l}] = 1;
  }
  p.c0 = 1;
  p.c = 1;
  p.a_m = 1;
  return p;
}

inline int random_unit(std::mt19937& rng, int q) {
  std::uniform_int_distribution<int> dist(1, q - 1);
  int u = dist(rng);
  while (std::gcd(u, q) != 1) u = dist(rng);
  return u;
}

inline QarySequence random_sequence(std::mt19937& rng, int q, std::size_t L) {
  std::uniform_int_distribution<int> dist(0, q - 1);
  QarySequence s;
  s.q = q;
  s.values.resize(L);
  for (auto& v : s.values) v = dist(rng);
  return s;
}

}  // namespace ccs::testing
