#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ccs/correlation.hpp"

namespace ccs {

struct Violation {
  std::size_t set_i = 0;
  std::size_t set_j = 0;
  std::int64_t tau = 0;
  double magnitude = 0.0;
};

/// Cap on recorded violations per report; the total count keeps growing.
inline constexpr std::size_t kMaxRecordedViolations = 100;

struct BoundReport {
  bool lemma1_applicable = false;  // only meaningful when Z = L
  bool lemma1_ok = true;           // M <= N
  bool lemma2_ok = true;           // M <= N * floor(L/Z)
  bool optimal = false;            // M == N * floor(L/Z)
};

struct VerificationReport {
  std::optional<FamilyKind> kind_claimed;
  std::optional<FamilyKind> kind_confirmed;
  std::size_t set_count = 0;       // M
  std::size_t set_size = 0;        // N
  std::uint64_t length = 0;        // L
  int q = 2;
  std::uint64_t measured_z = 0;
  bool bound_lemma1_ok = true;
  bool bound_lemma2_ok = true;
  bool optimal = false;
  bool confirmed = false;
  std::vector<Violation> violations;  // capped at kMaxRecordedViolations
  std::size_t violation_count = 0;    // uncapped
  double wall_time_seconds = 0.0;
};

/// Check sum of AACFs vanishes for all 0 < |tau| <= L-1.
VerificationReport verify_gcs(const SequenceSet& set);

/// Check every set is a GCS and every cross pair has zero set-correlation
/// at every shift including tau = 0. Confirms CCC additionally when M = N.
VerificationReport verify_mocs(const SequenceFamily& family);

/// Measure the zero correlation zone and confirm it covers claimed_z.
/// Throws std::domain_error unless 1 <= claimed_z <= L.
VerificationReport verify_zccs(const SequenceFamily& family,
                               std::uint64_t claimed_z);

/// Lemma 1 / Lemma 2 set-size bounds for parameters (M, N, L, Z).
BoundReport check_bounds(std::uint64_t M, std::uint64_t N, std::uint64_t L,
                         std::uint64_t Z);

}  // namespace ccs
