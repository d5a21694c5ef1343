#include <doctest.h>

#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

#include "ccs/correlation.hpp"
#include "test_support.hpp"

using namespace ccs;
using ccs::testing::random_sequence;

namespace {

// Independent oracle: direct double loop over index pairs (i, i+tau)
// in complex arithmetic.
std::complex<double> naive_accf(const QarySequence& a, const QarySequence& b,
                                std::int64_t tau) {
  std::complex<double> acc{0.0, 0.0};
  const auto L = static_cast<std::int64_t>(a.length());
  for (std::int64_t i = 0; i < L; ++i) {
    for (std::int64_t k = 0; k < L; ++k) {
      if (k - i != tau) continue;
      double angle = 2.0 * std::numbers::pi *
                     static_cast<double>(a.values[static_cast<std::size_t>(i)] -
                                         b.values[static_cast<std::size_t>(k)]) /
                     static_cast<double>(a.q);
      acc += std::complex<double>(std::cos(angle), std::sin(angle));
    }
  }
  return acc;
}

std::complex<double> as_complex(const RootOfUnitySum& s) {
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t k = 0; k < s.coeffs.size(); ++k) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(k) /
                   static_cast<double>(s.q);
    acc += static_cast<double>(s.coeffs[k]) *
           std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return acc;
}

SequenceFamily golay_family() {
  SequenceFamily family;
  family.q = 2;
  SequenceSet set;
  set.q = 2;
  set.sequences = {QarySequence{2, {0, 0, 0, 1}}, QarySequence{2, {0, 0, 1, 0}}};
  family.sets.push_back(set);
  return family;
}

}  // namespace

TEST_CASE("accf basics") {
  std::mt19937 rng(31);
  auto a = random_sequence(rng, 5, 16);
  auto r0 = accf(a, a, 0);
  CHECK(r0.coeffs[0] == 16);
  for (std::size_t k = 1; k < 5; ++k) CHECK(r0.coeffs[k] == 0);

  QarySequence x{2, {0, 1}}, y{2, {0, 0}};
  CHECK(accf(x, y, 1).coeffs == std::vector<std::int64_t>{1, 0});
  CHECK(accf(x, y, 0).coeffs == std::vector<std::int64_t>{1, 1});
  CHECK(is_zero(accf(x, y, 0)));

  CHECK_THROWS_AS(accf(x, y, 2), std::domain_error);
  CHECK_THROWS_AS(accf(x, QarySequence{2, {0, 0, 0}}, 0), std::domain_error);
  CHECK_THROWS_AS(accf(x, QarySequence{3, {0, 0}}, 0), std::domain_error);
}

TEST_CASE("conjugate symmetry") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    int q = 2 + static_cast<int>(rng() % 7);
    std::size_t L = 2 + rng() % 31;
    auto a = random_sequence(rng, q, L);
    auto b = random_sequence(rng, q, L);
    std::int64_t tau = static_cast<std::int64_t>(rng() % L);
    CHECK(accf(a, b, -tau).coeffs == conjugate(accf(b, a, tau)).coeffs);
  }
}

TEST_CASE("accf agrees with the naive double-loop oracle") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    int q = 2 + static_cast<int>(rng() % 7);
    std::size_t L = 2 + rng() % 63;
    auto a = random_sequence(rng, q, L);
    auto b = random_sequence(rng, q, L);
    std::int64_t tau = static_cast<std::int64_t>(rng() % L);
    if (rng() % 2) tau = -tau;
    CHECK(std::abs(as_complex(accf(a, b, tau)) - naive_accf(a, b, tau)) < 1e-9);
  }
}

TEST_CASE("set_ccf diagonal") {
  std::mt19937 rng(43);
  SequenceSet set;
  set.q = 3;
  for (int k = 0; k < 4; ++k) set.sequences.push_back(random_sequence(rng, 3, 10));
  auto diag = set_ccf(set, set, 0);
  CHECK(diag.coeffs == std::vector<std::int64_t>{40, 0, 0});

  SequenceSet other = set;
  other.sequences.pop_back();
  CHECK_THROWS_AS(set_ccf(set, other, 0), std::domain_error);
}

TEST_CASE("single GCS family has full zone") {
  auto family = golay_family();
  CHECK(measure_zcz(family) == 4);
}

TEST_CASE("profile spans every shift") {
  auto family = golay_family();
  auto p = profile(family, 0, 0);
  CHECK(p.values.size() == 7);
  CHECK(p.min_shift == -3);
  CHECK(p.magnitude_at(0) == doctest::Approx(8.0));
  for (std::int64_t tau = 1; tau <= 3; ++tau) {
    CHECK(is_zero(p.at(tau)));
    CHECK(is_zero(p.at(-tau)));
    CHECK(p.magnitude_at(tau) == doctest::Approx(p.magnitude_at(-tau)));
  }
  CHECK_THROWS_AS(profile(family, 0, 1), std::out_of_range);
}

TEST_CASE("pairwise profiles cover every ordered pair") {
  std::mt19937 rng(53);
  SequenceFamily family;
  family.q = 4;
  for (int i = 0; i < 3; ++i) {
    SequenceSet set;
    set.q = 4;
    for (int k = 0; k < 2; ++k) set.sequences.push_back(random_sequence(rng, 4, 12));
    family.sets.push_back(set);
  }
  auto profiles = pairwise_profiles(family);
  REQUIRE(profiles.size() == 9);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::int64_t tau = 0; tau < 12; ++tau) {
        CHECK(profiles[pair_index(i, j, 3)][static_cast<std::size_t>(tau)].coeffs ==
              set_ccf(family.sets[i], family.sets[j], tau).coeffs);
      }
    }
  }
}

TEST_CASE("pairwise profiles are thread-count invariant") {
  std::mt19937 rng(47);
  SequenceFamily family;
  family.q = 3;
  for (int i = 0; i < 4; ++i) {
    SequenceSet set;
    set.q = 3;
    for (int k = 0; k < 3; ++k) set.sequences.push_back(random_sequence(rng, 3, 20));
    family.sets.push_back(set);
  }
  setenv("CCS_THREADS", "1", 1);
  auto serial = pairwise_profiles(family);
  setenv("CCS_THREADS", "4", 1);
  auto parallel = pairwise_profiles(family);
  unsetenv("CCS_THREADS");
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t p = 0; p < serial.size(); ++p) {
    for (std::size_t t = 0; t < serial[p].size(); ++t) {
      CHECK(serial[p][t].coeffs == parallel[p][t].coeffs);
    }
  }
}
