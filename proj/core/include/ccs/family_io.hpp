#pragma once

#include <string>
#include <variant>

#include <nlohmann/json_fwd.hpp>

#include "ccs/constructions.hpp"
#include "ccs/verification.hpp"

namespace ccs {

inline constexpr const char* kToolkitVersion = "0.1.0";

using ConstructionConfig =
    std::variant<Thm1Params, Thm2Params, Thm3Params, Lemma3Params>;

/// Thrown on malformed config or family JSON (unknown keys, wrong
/// shapes, out-of-range symbols).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parse a construction config. Keys: theorem, q, m, v, d, d_prime,
/// partition, u, coeffs, length_digits (and k, pi, length_bits for the
/// even-q GCS construction). Unknown keys are rejected.
ConstructionConfig parse_construction_config(const nlohmann::json& j);
ConstructionConfig load_construction_config(const std::string& path);

/// Inverse of parse_construction_config, up to coefficient defaults.
nlohmann::json config_to_json(const ConstructionConfig& cfg);

/// Build whichever family the config describes. A single GCS comes back
/// as a one-set family claiming Z = L.
SequenceFamily build_from_config(const ConstructionConfig& cfg);

/// Family file round-trip. Serialization is deterministic: same family
/// and provenance give byte-identical output.
nlohmann::json family_to_json(const SequenceFamily& family,
                              const nlohmann::json& provenance);
SequenceFamily family_from_json(const nlohmann::json& j);

SequenceFamily load_family(const std::string& path);

/// Write text to path atomically (temp file + rename).
void atomic_write(const std::string& path, const std::string& contents);

nlohmann::json report_to_json(const VerificationReport& report);

std::string profile_to_csv(const CorrelationProfile& profile);

}  // namespace ccs
