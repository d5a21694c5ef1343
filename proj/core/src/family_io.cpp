#include "ccs/family_io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ccs {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!allowed.count(key)) {
      throw ParseError("unknown key \"" + key + "\" in " + where);
    }
  }
}

int get_int(const json& j, const std::string& key) {
  if (!j.contains(key)) throw ParseError("missing key \"" + key + "\"");
  if (!j[key].is_number_integer()) throw ParseError("key \"" + key + "\" must be an integer");
  return j[key].get<int>();
}

int get_int_or(const json& j, const std::string& key, int fallback) {
  return j.contains(key) ? get_int(j, key) : fallback;
}

PartitionPlan parse_partition(const json& j) {
  if (!j.is_array()) throw ParseError("partition must be a list of lists");
  PartitionPlan plan;
  for (const auto& block : j) {
    if (!block.is_array()) throw ParseError("partition must be a list of lists");
    plan.blocks.push_back(block.get<std::vector<int>>());
  }
  return plan;
}

std::vector<int> parse_key_indices(const std::string& key, std::size_t arity) {
  std::vector<int> out;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(std::stoi(part));
  if (out.size() != arity) {
    throw ParseError("coefficient key \"" + key + "\" must have " +
                     std::to_string(arity) + " comma-separated indices");
  }
  return out;
}

QuadCoeffs parse_pair_map(const json& j, const std::string& name) {
  QuadCoeffs out;
  if (!j.is_object()) throw ParseError(name + " must be a map");
  for (const auto& [key, value] : j.items()) {
    auto idx = parse_key_indices(key, 2);
    out[{idx[0], idx[1]}] = value.get<int>();
  }
  return out;
}

CrossCoeffs parse_triple_map(const json& j, const std::string& name) {
  CrossCoeffs out;
  if (!j.is_object()) throw ParseError(name + " must be a map");
  for (const auto& [key, value] : j.items()) {
    auto idx = parse_key_indices(key, 3);
    out[{idx[0], idx[1], idx[2]}] = value.get<int>();
  }
  return out;
}

std::map<int, int> parse_single_map(const json& j, const std::string& name) {
  std::map<int, int> out;
  if (!j.is_object()) throw ParseError(name + " must be a map");
  for (const auto& [key, value] : j.items()) {
    out[std::stoi(key)] = value.get<int>();
  }
  return out;
}

json coeffs_section(const json& j, const std::set<std::string>& allowed) {
  if (!j.contains("coeffs")) return json::object();
  const json& c = j["coeffs"];
  reject_unknown_keys(c, allowed, "coeffs");
  return c;
}

}  // namespace

ConstructionConfig parse_construction_config(const json& j) {
  if (!j.is_object()) throw ParseError("config must be a JSON object");
  if (!j.contains("theorem")) throw ParseError("missing key \"theorem\"");
  const std::string theorem = j["theorem"].get<std::string>();

  if (theorem == "mocs_thm1") {
    reject_unknown_keys(j, {"theorem", "q", "m", "v", "d", "d_prime",
                            "partition", "u", "coeffs", "length_digits"},
                        "config");
    Thm1Params p;
    p.q = get_int(j, "q");
    p.m = get_int(j, "m");
    p.v = get_int(j, "v");
    p.d = get_int(j, "d");
    p.d_prime = get_int(j, "d_prime");
    p.u = get_int(j, "u");
    if (!j.contains("partition")) throw ParseError("missing key \"partition\"");
    p.plan = parse_partition(j["partition"]);
    json c = coeffs_section(j, {"a_quad", "b_cross", "c_power", "c0", "c"});
    if (c.contains("a_quad")) p.a_quad = parse_pair_map(c["a_quad"], "a_quad");
    if (c.contains("b_cross")) p.b_cross = parse_triple_map(c["b_cross"], "b_cross");
    if (c.contains("c_power")) p.c_power = parse_pair_map(c["c_power"], "c_power");
    p.c0 = get_int_or(c, "c0", 0);
    p.c = get_int_or(c, "c", 1);
    if (j.contains("length_digits")) {
      auto digits = j["length_digits"].get<std::vector<int>>();
      if (digits.empty()) throw ParseError("length_digits must end with a_m");
      p.a_m = digits.back();
      digits.pop_back();
      p.length_digits = std::move(digits);
    } else {
      p.a_m = 1;
      p.length_digits.assign(static_cast<std::size_t>(std::max(p.v - 1, 0)), 0);
    }
    return p;
  }

  if (theorem == "ccc_thm2") {
    reject_unknown_keys(j, {"theorem", "q", "m", "d", "partition", "coeffs"},
                        "config");
    Thm2Params p;
    p.q = get_int(j, "q");
    p.m = get_int(j, "m");
    p.d = get_int(j, "d");
    if (!j.contains("partition")) throw ParseError("missing key \"partition\"");
    p.plan = parse_partition(j["partition"]);
    json c = coeffs_section(j, {"a_quad", "h_power", "h0"});
    if (c.contains("a_quad")) p.a_quad = parse_pair_map(c["a_quad"], "a_quad");
    if (c.contains("h_power")) p.h_power = parse_pair_map(c["h_power"], "h_power");
    p.h0 = get_int_or(c, "h0", 0);
    return p;
  }

  if (theorem == "zccs_thm3") {
    reject_unknown_keys(j, {"theorem", "q", "m", "v", "d", "partition", "coeffs"},
                        "config");
    Thm3Params p;
    p.q = get_int(j, "q");
    p.m = get_int(j, "m");
    p.v = get_int(j, "v");
    p.d = get_int(j, "d");
    if (!j.contains("partition")) throw ParseError("missing key \"partition\"");
    p.plan = parse_partition(j["partition"]);
    json c = coeffs_section(j, {"a_quad", "h_power", "h0", "b"});
    if (c.contains("a_quad")) p.a_quad = parse_pair_map(c["a_quad"], "a_quad");
    if (c.contains("h_power")) p.h_power = parse_pair_map(c["h_power"], "h_power");
    p.h0 = get_int_or(c, "h0", 0);
    p.b = get_int_or(c, "b", 1);
    return p;
  }

  if (theorem == "gcs_lemma3") {
    reject_unknown_keys(j, {"theorem", "q", "m", "k", "v", "pi", "coeffs",
                            "length_bits"},
                        "config");
    Lemma3Params p;
    p.q = get_int(j, "q");
    p.m = get_int(j, "m");
    p.k = get_int(j, "k");
    p.v = get_int(j, "v");
    if (!j.contains("pi")) throw ParseError("missing key \"pi\"");
    p.pi = j["pi"].get<std::vector<int>>();
    json c = coeffs_section(j, {"c_cross", "c_lin", "c0"});
    if (c.contains("c_cross")) p.c_cross = parse_pair_map(c["c_cross"], "c_cross");
    if (c.contains("c_lin")) p.c_lin = parse_single_map(c["c_lin"], "c_lin");
    p.c0 = get_int_or(c, "c0", 0);
    if (j.contains("length_bits")) {
      p.length_bits = j["length_bits"].get<std::vector<int>>();
    } else {
      p.length_bits.assign(static_cast<std::size_t>(std::max(p.k - 1, 0)), 0);
    }
    return p;
  }

  throw ParseError("unknown theorem \"" + theorem + "\"");
}

namespace {

json pair_map_to_json(const QuadCoeffs& m) {
  json out = json::object();
  for (const auto& [key, value] : m) {
    out[std::to_string(key.first) + "," + std::to_string(key.second)] = value;
  }
  return out;
}

json triple_map_to_json(const CrossCoeffs& m) {
  json out = json::object();
  for (const auto& [key, value] : m) {
    out[std::to_string(std::get<0>(key)) + "," + std::to_string(std::get<1>(key)) +
        "," + std::to_string(std::get<2>(key))] = value;
  }
  return out;
}

json single_map_to_json(const std::map<int, int>& m) {
  json out = json::object();
  for (const auto& [key, value] : m) out[std::to_string(key)] = value;
  return out;
}

json partition_to_json(const PartitionPlan& plan) {
  json out = json::array();
  for (const auto& block : plan.blocks) out.push_back(block);
  return out;
}

}  // namespace

json config_to_json(const ConstructionConfig& cfg) {
  return std::visit(
      [](const auto& p) -> json {
        using T = std::decay_t<decltype(p)>;
        json j;
        if constexpr (std::is_same_v<T, Thm1Params>) {
          j["theorem"] = "mocs_thm1";
          j["q"] = p.q;
          j["m"] = p.m;
          j["v"] = p.v;
          j["d"] = p.d;
          j["d_prime"] = p.d_prime;
          j["partition"] = partition_to_json(p.plan);
          j["u"] = p.u;
          j["coeffs"] = {{"a_quad", pair_map_to_json(p.a_quad)},
                         {"b_cross", triple_map_to_json(p.b_cross)},
                         {"c_power", pair_map_to_json(p.c_power)},
                         {"c0", p.c0},
                         {"c", p.c}};
          std::vector<int> digits = p.length_digits;
          digits.push_back(p.a_m);
          j["length_digits"] = digits;
        } else if constexpr (std::is_same_v<T, Thm2Params>) {
          j["theorem"] = "ccc_thm2";
          j["q"] = p.q;
          j["m"] = p.m;
          j["d"] = p.d;
          j["partition"] = partition_to_json(p.plan);
          j["coeffs"] = {{"a_quad", pair_map_to_json(p.a_quad)},
                         {"h_power", pair_map_to_json(p.h_power)},
                         {"h0", p.h0}};
        } else if constexpr (std::is_same_v<T, Thm3Params>) {
          j["theorem"] = "zccs_thm3";
          j["q"] = p.q;
          j["m"] = p.m;
          j["v"] = p.v;
          j["d"] = p.d;
          j["partition"] = partition_to_json(p.plan);
          j["coeffs"] = {{"a_quad", pair_map_to_json(p.a_quad)},
                         {"h_power", pair_map_to_json(p.h_power)},
                         {"h0", p.h0},
                         {"b", p.b}};
        } else {
          j["theorem"] = "gcs_lemma3";
          j["q"] = p.q;
          j["m"] = p.m;
          j["k"] = p.k;
          j["v"] = p.v;
          j["pi"] = p.pi;
          j["coeffs"] = {{"c_cross", pair_map_to_json(p.c_cross)},
                         {"c_lin", single_map_to_json(p.c_lin)},
                         {"c0", p.c0}};
          j["length_bits"] = p.length_bits;
        }
        return j;
      },
      cfg);
}

ConstructionConfig load_construction_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(std::string("config parse error: ") + e.what());
  }
  return parse_construction_config(j);
}

SequenceFamily build_from_config(const ConstructionConfig& cfg) {
  return std::visit(
      [](const auto& params) -> SequenceFamily {
        using T = std::decay_t<decltype(params)>;
        if constexpr (std::is_same_v<T, Thm1Params>) {
          return build_mocs(params);
        } else if constexpr (std::is_same_v<T, Thm2Params>) {
          return build_ccc(params);
        } else if constexpr (std::is_same_v<T, Thm3Params>) {
          return build_zccs(params);
        } else {
          SequenceSet set = build_gcs_lemma3(params);
          SequenceFamily family;
          family.q = set.q;
          std::uint64_t L = set.length();
          family.sets.push_back(std::move(set));
          family.claimed = FamilyClaim{FamilyKind::GCS, L};
          return family;
        }
      },
      cfg);
}

json family_to_json(const SequenceFamily& family, const json& provenance) {
  json j;
  j["q"] = family.q;
  j["L"] = family.length();
  j["M"] = family.set_count();
  j["N"] = family.set_size();
  if (family.claimed) {
    j["kind_claimed"] = to_string(family.claimed->kind);
    if (family.claimed->zcz_width) j["claimed_Z"] = *family.claimed->zcz_width;
  }
  json sets = json::array();
  for (const auto& set : family.sets) {
    json seqs = json::array();
    for (const auto& seq : set.sequences) seqs.push_back(seq.values);
    sets.push_back(std::move(seqs));
  }
  j["sets"] = std::move(sets);
  if (!provenance.is_null()) j["provenance"] = provenance;
  return j;
}

SequenceFamily family_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("family file must be a JSON object");
  SequenceFamily family;
  try {
    family.q = j.at("q").get<int>();
    const auto L = j.at("L").get<std::uint64_t>();
    const auto M = j.at("M").get<std::size_t>();
    const auto N = j.at("N").get<std::size_t>();
    const json& sets = j.at("sets");
    if (sets.size() != M) throw ParseError("family file: M does not match sets");
    for (const auto& set_json : sets) {
      if (set_json.size() != N) throw ParseError("family file: N does not match sets");
      SequenceSet set;
      set.q = family.q;
      for (const auto& seq_json : set_json) {
        QarySequence seq;
        seq.q = family.q;
        seq.values = seq_json.get<std::vector<int>>();
        if (seq.values.size() != L) throw ParseError("family file: L does not match sequence");
        for (int s : seq.values) {
          if (s < 0 || s >= family.q) throw ParseError("family file: symbol out of [0, q)");
        }
        set.sequences.push_back(std::move(seq));
      }
      family.sets.push_back(std::move(set));
    }
    if (j.contains("kind_claimed")) {
      auto kind = family_kind_from_string(j["kind_claimed"].get<std::string>());
      if (!kind) throw ParseError("family file: unknown kind_claimed");
      FamilyClaim claim;
      claim.kind = *kind;
      if (j.contains("claimed_Z")) claim.zcz_width = j["claimed_Z"].get<std::uint64_t>();
      family.claimed = claim;
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("family file parse error: ") + e.what());
  }
  return family;
}

SequenceFamily load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(std::string("family file parse error: ") + e.what());
  }
  return family_from_json(j);
}

void atomic_write(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::ios_base::failure("cannot open " + tmp + " for writing");
    out << contents;
    if (!out) throw std::ios_base::failure("write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw std::ios_base::failure("rename failed for " + path);
  }
}

json report_to_json(const VerificationReport& report) {
  json j;
  j["kind_claimed"] =
      report.kind_claimed ? json(to_string(*report.kind_claimed)) : json(nullptr);
  j["kind_confirmed"] =
      report.kind_confirmed ? json(to_string(*report.kind_confirmed)) : json(nullptr);
  j["M"] = report.set_count;
  j["N"] = report.set_size;
  j["L"] = report.length;
  j["q"] = report.q;
  j["measured_Z"] = report.measured_z;
  j["bound_lemma1_ok"] = report.bound_lemma1_ok;
  j["bound_lemma2_ok"] = report.bound_lemma2_ok;
  j["optimal"] = report.optimal;
  j["confirmed"] = report.confirmed;
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"i", v.set_i},
                          {"j", v.set_j},
                          {"tau", v.tau},
                          {"magnitude", v.magnitude}});
  }
  j["violations"] = std::move(violations);
  j["violation_count"] = report.violation_count;
  j["wall_time_seconds"] = report.wall_time_seconds;
  j["version"] = kToolkitVersion;
  return j;
}

std::string profile_to_csv(const CorrelationProfile& profile) {
  std::ostringstream out;
  out << "tau,magnitude\n";
  for (std::size_t t = 0; t < profile.magnitudes.size(); ++t) {
    const std::int64_t tau = profile.min_shift + static_cast<std::int64_t>(t);
    double mag = profile.magnitudes[t];
    // Exact zeros print as 0 so the zone is visible without tolerance.
    if (is_zero(profile.values[t])) mag = 0.0;
    out << tau << ',' << mag << '\n';
  }
  return out.str();
}

}  // namespace ccs
