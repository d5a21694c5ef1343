#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ccs/family_io.hpp"

namespace ccs {

/// One valid parameter tuple together with the family shape it yields.
struct EnumeratedTuple {
  ConstructionConfig config;
  std::uint64_t set_count = 0;   // M
  std::uint64_t set_size = 0;    // N
  std::uint64_t length = 0;      // L
  std::uint64_t zcz_width = 0;   // Z (= L for MOCS/CCC/GCS)
  std::string describe() const;
};

struct EnumerateOptions {
  int q = 2;
  std::string theorem;  // mocs_thm1 | ccc_thm2 | zccs_thm3 | gcs_lemma3
  std::uint64_t max_length = 64;
  bool all_orders = false;  // enumerate within-block orders too
  std::size_t limit = 0;    // 0 = unlimited
};

/// Every valid parameter tuple for the requested construction with
/// resulting length <= max_length. Partition shapes are enumerated as
/// ordered compositions with blocks in index order; within-block orders
/// default to ascending unless all_orders is set.
std::vector<EnumeratedTuple> enumerate_tuples(const EnumerateOptions& opts);

}  // namespace ccs
