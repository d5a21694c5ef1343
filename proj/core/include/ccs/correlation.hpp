#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ccs/cyclotomic.hpp"
#include "ccs/ebf.hpp"

namespace ccs {

enum class FamilyKind { GCS, MOCS, CCC, ZCCS };

std::string to_string(FamilyKind k);
std::optional<FamilyKind> family_kind_from_string(const std::string& s);

/// N sequences of uniform length and modulus.
struct SequenceSet {
  int q = 2;
  std::vector<QarySequence> sequences;

  std::size_t size() const { return sequences.size(); }
  std::size_t length() const {
    return sequences.empty() ? 0 : sequences.front().length();
  }
};

struct FamilyClaim {
  FamilyKind kind = FamilyKind::ZCCS;
  std::optional<std::uint64_t> zcz_width;
};

/// M sequence sets sharing N, L and q.
struct SequenceFamily {
  int q = 2;
  std::vector<SequenceSet> sets;
  std::optional<FamilyClaim> claimed;

  std::size_t set_count() const { return sets.size(); }
  std::size_t set_size() const {
    return sets.empty() ? 0 : sets.front().size();
  }
  std::size_t length() const { return sets.empty() ? 0 : sets.front().length(); }
};

/// Aperiodic cross-correlation of a against b at shift tau.
/// For tau >= 0 this is sum_{i=0}^{L-1-tau} xi^{a_i - b_{i+tau}};
/// negative shifts use R_{b,a}(-tau) = conj(R_{a,b}(tau)).
RootOfUnitySum accf(const QarySequence& a, const QarySequence& b,
                    std::int64_t tau);

/// Sequence-wise sum of accf over the members of two equally shaped sets.
RootOfUnitySum set_ccf(const SequenceSet& a, const SequenceSet& b,
                       std::int64_t tau);

struct CorrelationProfile {
  // index t corresponds to tau = t - (L-1); spans -(L-1)..L-1
  std::int64_t min_shift = 0;
  std::vector<RootOfUnitySum> values;
  std::vector<double> magnitudes;

  const RootOfUnitySum& at(std::int64_t tau) const;
  double magnitude_at(std::int64_t tau) const;
};

/// Full set-correlation profile of family sets i and j over every shift.
CorrelationProfile profile(const SequenceFamily& family, std::size_t i,
                           std::size_t j);

/// Largest Z >= 1 such that all auto set-correlations vanish for
/// 0 < |tau| < Z and all cross set-correlations vanish for |tau| < Z.
/// Returns L when the family is a full MOCS and 0 when some cross
/// correlation at tau = 0 is nonzero.
std::uint64_t measure_zcz(const SequenceFamily& family);

/// Positive-shift set-correlation profiles for every ordered set pair,
/// evaluated with up to CCS_THREADS workers (0 or unset = hardware
/// concurrency). Entry for (i, j) holds set_ccf(S_i, S_j, tau) at
/// index tau, tau in [0, L-1]. Both orders of a cross pair are present
/// because set_ccf(S_i, S_j, -tau) = conj(set_ccf(S_j, S_i, tau)), so
/// this covers negative shifts too. Order of results is deterministic.
std::vector<std::vector<RootOfUnitySum>> pairwise_profiles(
    const SequenceFamily& family);

/// Index of ordered pair (i, j) in the pairwise_profiles layout.
std::size_t pair_index(std::size_t i, std::size_t j, std::size_t M);

/// Worker budget derived from the CCS_THREADS environment variable.
unsigned worker_count();

}  // namespace ccs
