#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "ccs/correlation.hpp"
#include "ccs/ebf.hpp"

namespace ccs {

/// Ordered partition of {1..m'} into d blocks; blocks[a][b] is the image
/// of b+1 under the block's bijection (pi_{a+1}(b+1) in 1-based terms).
struct PartitionPlan {
  std::vector<std::vector<int>> blocks;

  std::size_t block_count() const { return blocks.size(); }
  std::size_t total_size() const;
};

// Coefficient maps. Quadratic chain coefficients are keyed (alpha, beta),
// cross coefficients (alpha, beta, k), power coefficients (s, l); all
// indices 1-based.
using QuadCoeffs = std::map<std::pair<int, int>, int>;
using CrossCoeffs = std::map<std::tuple<int, int, int>, int>;
using PowerCoeffs = std::map<std::pair<int, int>, int>;

/// Flexible-length MOCS generator parameters: builds q^{d'} sets of
/// q^{v+d} sequences of length a_m q^{m-1} + sum a_k q^{m-v+k-1} + q^u.
struct Thm1Params {
  int q = 2;
  int m = 0;
  int v = 0;
  int d = 0;
  int d_prime = 0;
  PartitionPlan plan;  // partition of {1..m-v}
  int u = 0;
  QuadCoeffs a_quad;    // defaults to 1
  CrossCoeffs b_cross;  // defaults to 0
  PowerCoeffs c_power;  // defaults to 0
  int c0 = 0;
  int c = 1;                      // p-term multiplier, coprime with q
  std::vector<int> length_digits; // a_1..a_{v-1}
  int a_m = 1;
};

/// CCC generator parameters: q^d sets of q^d sequences of length q^m.
struct Thm2Params {
  int q = 2;
  int m = 0;
  int d = 0;
  PartitionPlan plan;  // partition of {1..m}
  QuadCoeffs a_quad;
  PowerCoeffs h_power;
  int h0 = 0;
};

/// Optimal ZCCS generator parameters: q^{v+d} sets of q^d sequences of
/// length q^m with zone width q^{m-v}.
struct Thm3Params {
  int q = 2;
  int m = 0;
  int v = 0;
  int d = 0;
  PartitionPlan plan;  // partition of {1..m-v}
  QuadCoeffs a_quad;
  PowerCoeffs h_power;
  int h0 = 0;
  int b = 1;  // coprime with q
};

/// Even-q GCS generator parameters (binary-indexed expansion).
struct Lemma3Params {
  int q = 2;  // must be even
  int m = 0;
  int k = 0;
  int v = 0;
  std::vector<int> pi;       // permutation of {1..m}
  QuadCoeffs c_cross;        // keyed (alpha, s)
  std::map<int, int> c_lin;  // keyed s
  int c0 = 0;
  std::vector<int> length_bits;  // a_1..a_{k-1}, each 0 or 1
};

struct ValidationResult {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  std::string message() const;
};

ValidationResult validate(const Thm1Params& p);
ValidationResult validate(const Thm2Params& p);
ValidationResult validate(const Thm3Params& p);
ValidationResult validate(const Lemma3Params& p);

/// Thrown by the builders when validation fails; carries every violated
/// condition.
struct ValidationError : std::runtime_error {
  ValidationResult result;
  explicit ValidationError(ValidationResult r);
};

std::uint64_t mocs_length(const Thm1Params& p);
std::uint64_t gcs_lemma3_length(const Lemma3Params& p);

SequenceFamily build_mocs(const Thm1Params& p);
SequenceFamily build_ccc(const Thm2Params& p);
SequenceFamily build_zccs(const Thm3Params& p);
SequenceSet build_gcs_lemma3(const Lemma3Params& p);

}  // namespace ccs
