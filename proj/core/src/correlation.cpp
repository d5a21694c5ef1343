#include "ccs/correlation.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace ccs {

std::string to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::GCS: return "gcs";
    case FamilyKind::MOCS: return "mocs";
    case FamilyKind::CCC: return "ccc";
    case FamilyKind::ZCCS: return "zccs";
  }
  return "?";
}

std::optional<FamilyKind> family_kind_from_string(const std::string& s) {
  if (s == "gcs") return FamilyKind::GCS;
  if (s == "mocs") return FamilyKind::MOCS;
  if (s == "ccc") return FamilyKind::CCC;
  if (s == "zccs") return FamilyKind::ZCCS;
  return std::nullopt;
}

RootOfUnitySum accf(const QarySequence& a, const QarySequence& b,
                    std::int64_t tau) {
  if (a.q != b.q) throw std::domain_error("accf: modulus mismatch");
  if (a.length() != b.length()) throw std::domain_error("accf: length mismatch");
  const std::int64_t L = static_cast<std::int64_t>(a.length());
  if (tau <= -L || tau >= L) throw std::domain_error("accf: |tau| >= L");
  if (tau < 0) return conjugate(accf(b, a, -tau));
  RootOfUnitySum sum = RootOfUnitySum::zero(a.q);
  for (std::int64_t i = 0; i < L - tau; ++i) {
    int e = a.values[static_cast<std::size_t>(i)] -
            b.values[static_cast<std::size_t>(i + tau)];
    sum.coeffs[static_cast<std::size_t>(((e % a.q) + a.q) % a.q)] += 1;
  }
  return sum;
}

RootOfUnitySum set_ccf(const SequenceSet& a, const SequenceSet& b,
                       std::int64_t tau) {
  if (a.q != b.q) throw std::domain_error("set_ccf: modulus mismatch");
  if (a.size() != b.size() || a.length() != b.length()) {
    throw std::domain_error("set_ccf: shape mismatch");
  }
  RootOfUnitySum sum = RootOfUnitySum::zero(a.q);
  for (std::size_t k = 0; k < a.size(); ++k) {
    sum = add(sum, accf(a.sequences[k], b.sequences[k], tau));
  }
  return sum;
}

namespace {

// All positive-shift correlations of one sequence pair in both orders
// in a single O(L^2) pass: fwd[tau] accumulates xi^{a_i - b_{i+tau}}
// and rev[tau] accumulates xi^{b_i - a_{i+tau}}.
void accumulate_pair(const QarySequence& a, const QarySequence& b,
                     std::vector<RootOfUnitySum>& fwd,
                     std::vector<RootOfUnitySum>& rev) {
  const std::size_t L = a.length();
  const int q = a.q;
  for (std::size_t tau = 0; tau < L; ++tau) {
    auto& fc = fwd[tau].coeffs;
    auto& rc = rev[tau].coeffs;
    for (std::size_t i = 0; i + tau < L; ++i) {
      int e = a.values[i] - b.values[i + tau];
      fc[static_cast<std::size_t>(((e % q) + q) % q)] += 1;
      int r = b.values[i] - a.values[i + tau];
      rc[static_cast<std::size_t>(((r % q) + q) % q)] += 1;
    }
  }
}

std::vector<RootOfUnitySum> zero_profile(int q, std::size_t L) {
  return std::vector<RootOfUnitySum>(L, RootOfUnitySum::zero(q));
}

}  // namespace

unsigned worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  const char* env = std::getenv("CCS_THREADS");
  if (env == nullptr) return hw;
  long v = std::strtol(env, nullptr, 10);
  if (v <= 0) return hw;
  return static_cast<unsigned>(v);
}

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t M) {
  return i * M + j;
}

std::vector<std::vector<RootOfUnitySum>> pairwise_profiles(
    const SequenceFamily& family) {
  const std::size_t M = family.set_count();
  const std::size_t L = family.length();
  std::vector<std::vector<RootOfUnitySum>> profiles(M * M);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < M; ++i) {
    for (std::size_t j = i; j < M; ++j) pairs.emplace_back(i, j);
  }
  const unsigned workers =
      std::min<unsigned>(worker_count(), static_cast<unsigned>(pairs.size()));
  auto run = [&](std::size_t begin, std::size_t step) {
    for (std::size_t t = begin; t < pairs.size(); t += step) {
      auto [i, j] = pairs[t];
      auto fwd = zero_profile(family.q, L);
      auto rev = zero_profile(family.q, L);
      const auto& Si = family.sets[i];
      const auto& Sj = family.sets[j];
      for (std::size_t k = 0; k < Si.size(); ++k) {
        accumulate_pair(Si.sequences[k], Sj.sequences[k], fwd, rev);
      }
      profiles[pair_index(i, j, M)] = std::move(fwd);
      if (i != j) profiles[pair_index(j, i, M)] = std::move(rev);
    }
  };
  if (workers <= 1) {
    run(0, 1);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w, workers);
    for (auto& t : threads) t.join();
  }
  return profiles;
}

const RootOfUnitySum& CorrelationProfile::at(std::int64_t tau) const {
  return values.at(static_cast<std::size_t>(tau - min_shift));
}

double CorrelationProfile::magnitude_at(std::int64_t tau) const {
  return magnitudes.at(static_cast<std::size_t>(tau - min_shift));
}

CorrelationProfile profile(const SequenceFamily& family, std::size_t i,
                           std::size_t j) {
  if (i >= family.set_count() || j >= family.set_count()) {
    throw std::out_of_range("profile: set index out of range");
  }
  const std::int64_t L = static_cast<std::int64_t>(family.length());
  CorrelationProfile p;
  p.min_shift = -(L - 1);
  p.values.reserve(static_cast<std::size_t>(2 * L - 1));
  for (std::int64_t tau = -(L - 1); tau <= L - 1; ++tau) {
    p.values.push_back(set_ccf(family.sets[i], family.sets[j], tau));
  }
  p.magnitudes.reserve(p.values.size());
  for (const auto& v : p.values) p.magnitudes.push_back(magnitude(v));
  return p;
}

std::uint64_t measure_zcz(const SequenceFamily& family) {
  const std::size_t M = family.set_count();
  const std::uint64_t L = family.length();
  if (M == 0 || L == 0) throw std::domain_error("measure_zcz: empty family");
  const auto profiles = pairwise_profiles(family);
  // Cross pairs at tau = 0 first; a nonzero value there means no zone.
  for (std::size_t i = 0; i < M; ++i) {
    for (std::size_t j = i + 1; j < M; ++j) {
      if (!is_zero(profiles[pair_index(i, j, M)][0])) return 0;
    }
  }
  // Auto negative shifts are conjugates of positive ones; cross negative
  // shifts are conjugates of the opposite order, so both orders appear.
  for (std::uint64_t tau = 1; tau < L; ++tau) {
    for (std::size_t i = 0; i < M; ++i) {
      for (std::size_t j = i; j < M; ++j) {
        if (!is_zero(profiles[pair_index(i, j, M)][tau])) return tau;
        if (i != j && !is_zero(profiles[pair_index(j, i, M)][tau])) return tau;
      }
    }
  }
  return L;
}

}  // namespace ccs
