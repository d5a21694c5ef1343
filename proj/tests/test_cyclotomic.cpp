#include <doctest.h>

#include <random>
#include <stdexcept>

#include "ccs/cyclotomic.hpp"

using namespace ccs;

namespace {

// Schoolbook product, the independent route for checking Phi_q values.
std::vector<std::int64_t> poly_mul(const std::vector<std::int64_t>& a,
                                   const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

RootOfUnitySum random_sum(std::mt19937& rng, int q) {
  std::uniform_int_distribution<std::int64_t> coeff(-100, 100);
  RootOfUnitySum s = RootOfUnitySum::zero(q);
  for (auto& c : s.coeffs) c = coeff(rng);
  return s;
}

}  // namespace

TEST_CASE("unit") {
  CHECK(unit(0, 4).coeffs == std::vector<std::int64_t>{1, 0, 0, 0});
  CHECK(unit(5, 4).coeffs == std::vector<std::int64_t>{0, 1, 0, 0});
  CHECK(unit(2, 2).coeffs == std::vector<std::int64_t>{1, 0});
  CHECK(unit(-1, 4).coeffs == std::vector<std::int64_t>{0, 0, 0, 1});
}

TEST_CASE("add and conjugate") {
  auto s = add(unit(0, 3), unit(1, 3));
  CHECK(s.coeffs == std::vector<std::int64_t>{1, 1, 0});
  CHECK(conjugate(unit(1, 4)).coeffs == std::vector<std::int64_t>{0, 0, 0, 1});
  RootOfUnitySum real = RootOfUnitySum::zero(2);
  real.coeffs = {5, 0};
  CHECK(conjugate(real).coeffs == std::vector<std::int64_t>{5, 0});
  CHECK_THROWS_AS(add(unit(0, 3), unit(0, 4)), std::domain_error);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<std::int64_t>{1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
  CHECK_THROWS_AS(cyclotomic_polynomial(kMaxModulus + 1), std::domain_error);
}

TEST_CASE("product of cyclotomic factors recovers x^q - 1") {
  for (int q : {2, 3, 4, 6, 8, 12, 30}) {
    std::vector<std::int64_t> prod{1};
    for (int d = 1; d <= q; ++d) {
      if (q % d == 0) prod = poly_mul(prod, cyclotomic_polynomial(d));
    }
    std::vector<std::int64_t> expected(static_cast<std::size_t>(q) + 1, 0);
    expected[0] = -1;
    expected[static_cast<std::size_t>(q)] = 1;
    CHECK(prod == expected);
  }
}

TEST_CASE("is_zero") {
  RootOfUnitySum s = RootOfUnitySum::zero(3);
  s.coeffs = {1, 1, 1};
  CHECK(is_zero(s));
  RootOfUnitySum t = RootOfUnitySum::zero(4);
  t.coeffs = {1, 0, 1, 0};
  CHECK(is_zero(t));
  t.coeffs = {1, 1, 0, 0};
  CHECK_FALSE(is_zero(t));
}

TEST_CASE("magnitude") {
  RootOfUnitySum s = RootOfUnitySum::zero(5);
  s.coeffs = {64, 0, 0, 0, 0};
  CHECK(magnitude(s) == doctest::Approx(64.0));
  RootOfUnitySum t = RootOfUnitySum::zero(3);
  t.coeffs = {1, 1, 1};
  CHECK(magnitude(t) < 1e-12);
  RootOfUnitySum u = RootOfUnitySum::zero(4);
  u.coeffs = {1, 1, 0, 0};
  CHECK(magnitude(u) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("is_zero matches magnitude on random sums") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 2000; ++trial) {
    int q = 2 + static_cast<int>(rng() % 11);
    auto s = random_sum(rng, q);
    CHECK(is_zero(s) == (magnitude(s) < 1e-9));
  }
}

TEST_CASE("algebraic laws on random sums") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    int q = 2 + static_cast<int>(rng() % 11);
    auto a = random_sum(rng, q);
    auto b = random_sum(rng, q);
    auto c = random_sum(rng, q);
    CHECK(add(a, b).coeffs == add(b, a).coeffs);
    CHECK(add(add(a, b), c).coeffs == add(a, add(b, c)).coeffs);
    CHECK(conjugate(add(a, b)).coeffs ==
          add(conjugate(a), conjugate(b)).coeffs);
    CHECK(conjugate(conjugate(a)).coeffs == a.coeffs);
    CHECK(is_zero(sub(a, a)));
  }
}
