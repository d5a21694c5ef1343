// Command-line front end for complementary sequence set construction,
// verification, correlation profiling, and parameter enumeration.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ccs/enumerate.hpp"
#include "ccs/family_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitInvalidParams = 2;
constexpr int kExitRefuted = 3;

struct Claim {
  ccs::FamilyKind kind;
  std::optional<std::uint64_t> zcz_width;
};

// "KIND" or "KIND,Z", e.g. "zccs,16".
std::optional<Claim> parse_claim(const std::string& text) {
  std::string kind_text = text;
  std::optional<std::uint64_t> z;
  if (auto comma = text.find(','); comma != std::string::npos) {
    kind_text = text.substr(0, comma);
    try {
      z = std::stoull(text.substr(comma + 1));
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  auto kind = ccs::family_kind_from_string(kind_text);
  if (!kind) return std::nullopt;
  return Claim{*kind, z};
}

void emit_report(const ccs::VerificationReport& report,
                 const std::string& out_path) {
  const std::string text = ccs::report_to_json(report).dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    ccs::atomic_write(out_path, text);
  }
}

int cmd_generate(const std::string& config_path, const std::string& out_path) {
  nlohmann::json raw;
  {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "error: cannot open " << config_path << "\n";
      return kExitIo;
    }
    try {
      in >> raw;
    } catch (const nlohmann::json::exception& e) {
      std::cerr << "error: config parse failed: " << e.what() << "\n";
      return kExitIo;
    }
  }
  ccs::ConstructionConfig cfg;
  try {
    cfg = ccs::parse_construction_config(raw);
  } catch (const ccs::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidParams;
  }
  ccs::SequenceFamily family;
  try {
    family = ccs::build_from_config(cfg);
  } catch (const ccs::ValidationError& e) {
    std::cerr << "invalid parameters:\n";
    for (const auto& violation : e.result.violations) {
      std::cerr << "  - " << violation << "\n";
    }
    return kExitInvalidParams;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return kExitInvalidParams;
  }
  try {
    ccs::atomic_write(out_path,
                      ccs::family_to_json(family, raw).dump(2) + "\n");
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}

int cmd_verify(const std::string& family_path, const std::string& claim_text,
               const std::string& out_path) {
  ccs::SequenceFamily family;
  try {
    family = ccs::load_family(family_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }

  std::optional<Claim> claim;
  if (!claim_text.empty()) {
    claim = parse_claim(claim_text);
    if (!claim) {
      std::cerr << "error: bad --claim \"" << claim_text << "\"\n";
      return kExitInvalidParams;
    }
  } else if (family.claimed) {
    claim = Claim{family.claimed->kind, family.claimed->zcz_width};
  } else {
    claim = Claim{ccs::FamilyKind::MOCS, std::nullopt};
  }

  ccs::VerificationReport report;
  try {
    switch (claim->kind) {
      case ccs::FamilyKind::GCS:
        if (family.set_count() != 1) {
          std::cerr << "error: gcs claim needs a single-set family\n";
          return kExitInvalidParams;
        }
        report = ccs::verify_gcs(family.sets[0]);
        break;
      case ccs::FamilyKind::MOCS:
      case ccs::FamilyKind::CCC:
        report = ccs::verify_mocs(family);
        if (claim->kind == ccs::FamilyKind::CCC &&
            report.kind_confirmed != ccs::FamilyKind::CCC) {
          report.confirmed = false;
        }
        report.kind_claimed = claim->kind;
        break;
      case ccs::FamilyKind::ZCCS: {
        std::uint64_t z = claim->zcz_width.value_or(family.length());
        report = ccs::verify_zccs(family, z);
        break;
      }
    }
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidParams;
  }

  try {
    emit_report(report, out_path);
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return report.confirmed ? kExitOk : kExitRefuted;
}

int cmd_profile(const std::string& family_path, const std::string& pair_text,
                const std::string& out_path) {
  ccs::SequenceFamily family;
  try {
    family = ccs::load_family(family_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  std::size_t i = 0, j = 0;
  if (std::sscanf(pair_text.c_str(), "%zu,%zu", &i, &j) != 2) {
    std::cerr << "error: --pair must be I,J\n";
    return kExitInvalidParams;
  }
  ccs::CorrelationProfile prof;
  try {
    prof = ccs::profile(family, i, j);
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidParams;
  }
  try {
    ccs::atomic_write(out_path, ccs::profile_to_csv(prof));
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}

int cmd_enumerate(const ccs::EnumerateOptions& opts) {
  std::vector<ccs::EnumeratedTuple> tuples;
  try {
    tuples = ccs::enumerate_tuples(opts);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidParams;
  }
  for (const auto& t : tuples) std::cout << t.describe() << "\n";
  std::cerr << tuples.size() << " tuple(s)\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-ary complementary code set toolkit"};
  app.require_subcommand(1);

  std::string config_path, out_path, family_path, claim_text, pair_text;
  ccs::EnumerateOptions enum_opts;

  auto* generate = app.add_subcommand("generate", "build a family from a config");
  generate->add_option("--config", config_path, "construction config (JSON)")
      ->required();
  generate->add_option("--out", out_path, "output family file")->required();

  auto* verify = app.add_subcommand("verify", "verify a family file");
  verify->add_option("family", family_path, "family file (JSON)")->required();
  verify->add_option("--claim", claim_text, "claim KIND[,Z] to check");
  verify->add_option("--out", out_path, "write report here instead of stdout");

  auto* profile = app.add_subcommand("profile", "emit a correlation profile CSV");
  profile->add_option("family", family_path, "family file (JSON)")->required();
  profile->add_option("--pair", pair_text, "set indices I,J")->required();
  profile->add_option("--out", out_path, "output CSV path")->required();

  auto* enumerate = app.add_subcommand("enumerate", "list valid parameter tuples");
  enumerate->add_option("--q", enum_opts.q, "modulus")->required();
  enumerate->add_option("--theorem", enum_opts.theorem,
                        "mocs_thm1|ccc_thm2|zccs_thm3|gcs_lemma3")
      ->required();
  enumerate->add_option("--max-length", enum_opts.max_length, "length cap");
  enumerate->add_flag("--all-orders", enum_opts.all_orders,
                      "enumerate within-block orders too");
  enumerate->add_option("--limit", enum_opts.limit, "stop after this many tuples");

  CLI11_PARSE(app, argc, argv);

  if (generate->parsed()) return cmd_generate(config_path, out_path);
  if (verify->parsed()) return cmd_verify(family_path, claim_text, out_path);
  if (profile->parsed()) return cmd_profile(family_path, pair_text, out_path);
  return cmd_enumerate(enum_opts);
}
