#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ccs/constructions.hpp"
#include "ccs/verification.hpp"
#include "test_support.hpp"

using namespace ccs;
using ccs::testing::example1_params;
using ccs::testing::example2_params;

TEST_CASE("validate rejects bad parameters") {
  auto p3 = example2_params();
  p3.b = 2;  // gcd(2,4) = 2
  auto r = validate(p3);
  REQUIRE_FALSE(r.ok());
  CHECK(r.message().find("gcd(b,q)") != std::string::npos);

  auto p1 = example1_params();
  p1.d_prime = p1.d;
  auto r1 = validate(p1);
  REQUIRE_FALSE(r1.ok());
  CHECK(r1.message().find("0<d'<d<m") != std::string::npos);

  CHECK(validate(example2_params()).ok());
  CHECK(validate(example1_params()).ok());
}

TEST_CASE("validate reports every violation at once") {
  Thm1Params p = example1_params();
  p.d_prime = p.d;
  p.v = p.m;
  auto r = validate(p);
  CHECK(r.violations.size() >= 2);
}

TEST_CASE("mocs_length") {
  CHECK(mocs_length(example1_params()) == 108);

  // binary special case: all a_k = 0, a_m = 1 gives 2^{m-1} + 2^u
  Thm1Params p;
  p.q = 2;
  p.m = 4;
  p.v = 1;
  p.d = 2;
  p.d_prime = 1;
  p.plan.blocks = {{1}, {2, 3}};
  p.u = 2;
  p.a_m = 1;
  CHECK(mocs_length(p) == 8 + 4);

  auto p5 = example1_params();
  p5.a_m = 2;
  CHECK(mocs_length(p5) == 2 * 81 + 27);
}

TEST_CASE("build_mocs") {
  auto family = build_mocs(example1_params());
  CHECK(family.set_count() == 3);
  CHECK(family.set_size() == 27);
  CHECK(family.length() == 108);

  Thm1Params p;
  p.q = 2;
  p.m = 4;
  p.v = 1;
  p.d = 2;
  p.d_prime = 1;
  p.plan.blocks = {{1}, {2, 3}};
  p.u = 2;
  p.a_m = 1;
  auto small = build_mocs(p);
  CHECK(small.set_count() == 2);
  CHECK(small.set_size() == 8);
  CHECK(small.length() == 12);
  auto report = verify_mocs(small);
  CHECK(report.confirmed);
  CHECK(report.kind_confirmed == FamilyKind::MOCS);

  p.d_prime = p.d;
  CHECK_THROWS_AS(build_mocs(p), ValidationError);
}

TEST_CASE("build_ccc") {
  Thm2Params p;
  p.q = 3;
  p.m = 3;
  p.d = 2;
  p.plan.blocks = {{1, 2}, {3}};
  auto family = build_ccc(p);
  CHECK(family.set_count() == 9);
  CHECK(family.set_size() == 9);
  CHECK(family.length() == 27);
  auto report = verify_mocs(family);
  CHECK(report.confirmed);
  CHECK(report.kind_confirmed == FamilyKind::CCC);

  Thm2Params p2;
  p2.q = 2;
  p2.m = 3;
  p2.d = 2;
  p2.plan.blocks = {{1, 2}, {3}};
  auto binary = build_ccc(p2);
  CHECK(binary.set_count() == 4);
  CHECK(binary.length() == 8);
  CHECK(verify_mocs(binary).kind_confirmed == FamilyKind::CCC);
}

TEST_CASE("build_zccs reproduces the quaternary worked example") {
  auto family = build_zccs(example2_params());
  CHECK(family.set_count() == 16);
  CHECK(family.set_size() == 4);
  CHECK(family.length() == 64);
  CHECK(family.claimed->zcz_width == 16);
  CHECK(std::vector<int>(family.sets[3].sequences[0].values.begin(),
                         family.sets[3].sequences[0].values.begin() + 8) ==
        std::vector<int>{1, 2, 1, 2, 1, 3, 3, 1});
  CHECK(std::vector<int>(family.sets[10].sequences[0].values.begin(),
                         family.sets[10].sequences[0].values.begin() + 8) ==
        std::vector<int>{1, 1, 3, 3, 1, 2, 1, 2});
}

TEST_CASE("build_zccs with v=0 matches the CCC shape") {
  Thm3Params p;
  p.q = 3;
  p.m = 3;
  p.v = 0;
  p.d = 2;
  p.plan.blocks = {{1, 2}, {3}};
  auto family = build_zccs(p);
  CHECK(family.set_count() == 9);
  CHECK(family.set_size() == 9);
  CHECK(family.length() == 27);
  CHECK(verify_mocs(family).kind_confirmed == FamilyKind::CCC);
}

TEST_CASE("zccs sequences have block-offset structure") {
  auto family = build_zccs(example2_params());
  const std::size_t block = 16;  // q^{m-v}
  for (const auto& set : family.sets) {
    for (const auto& seq : set.sequences) {
      for (std::size_t e = 1; e < seq.length() / block; ++e) {
        int delta = (seq.values[e * block] - seq.values[0] + seq.q) % seq.q;
        for (std::size_t t = 0; t < block; ++t) {
          CHECK((seq.values[t] + delta) % seq.q == seq.values[e * block + t]);
        }
      }
    }
  }
}

TEST_CASE("build_gcs_lemma3") {
  Lemma3Params p;
  p.q = 2;
  p.m = 3;
  p.k = 1;
  p.v = 1;
  p.pi = {1, 2, 3};
  // f = x_1 x_2 comes from the q/2 chain with no extra coefficients
  auto set = build_gcs_lemma3(p);
  CHECK(set.size() == 4);
  CHECK(set.length() == 6);
  CHECK(verify_gcs(set).confirmed);

  p.v = 0;
  CHECK(gcs_lemma3_length(p) == 5);

  p.q = 3;
  CHECK_THROWS_AS(build_gcs_lemma3(p), std::invalid_argument);
}

TEST_CASE("lemma3 holds for q=4 with assorted shapes") {
  for (auto [m, k, v] : {std::tuple{3, 1, 1}, {4, 2, 1}, {4, 1, 2}, {5, 2, 2}}) {
    Lemma3Params p;
    p.q = 4;
    p.m = m;
    p.k = k;
    p.v = v;
    p.pi.resize(static_cast<std::size_t>(m));
    std::iota(p.pi.begin(), p.pi.end(), 1);
    p.length_bits.assign(static_cast<std::size_t>(std::max(k - 1, 0)), 1);
    auto set = build_gcs_lemma3(p);
    CHECK(set.size() == pow_u64(2, static_cast<unsigned>(k + 1)));
    CHECK(verify_gcs(set).confirmed);
  }
}

TEST_CASE("lemma3 rejects a bad permutation") {
  Lemma3Params p;
  p.q = 2;
  p.m = 4;
  p.k = 2;
  p.v = 0;
  p.pi = {1, 2, 4, 3};  // pi(m) != m
  auto r = validate(p);
  CHECK_FALSE(r.ok());
}
