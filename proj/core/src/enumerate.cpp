#include "ccs/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ccs {

namespace {

// q^e <= limit without risking 64-bit overflow.
bool pow_le(std::uint64_t q, unsigned e, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (unsigned k = 0; k < e; ++k) {
    if (r > limit / q) return false;
    r *= q;
  }
  return r <= limit;
}

// All ordered compositions of n into d positive parts.
std::vector<std::vector<int>> compositions(int n, int d) {
  std::vector<std::vector<int>> out;
  if (d == 1) {
    if (n >= 1) out.push_back({n});
    return out;
  }
  for (int first = 1; first <= n - (d - 1); ++first) {
    for (auto rest : compositions(n - first, d - 1)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  }
  return out;
}

// Blocks as consecutive index ranges, entries ascending.
PartitionPlan canonical_plan(const std::vector<int>& shape) {
  PartitionPlan plan;
  int next = 1;
  for (int size : shape) {
    std::vector<int> block(static_cast<std::size_t>(size));
    std::iota(block.begin(), block.end(), next);
    next += size;
    plan.blocks.push_back(std::move(block));
  }
  return plan;
}

// Within-block orderings of a canonical plan (the theorems allow any
// bijection per block). Emits every combination of block permutations.
void for_each_order(const PartitionPlan& base, bool all_orders,
                    const std::function<void(const PartitionPlan&)>& fn) {
  if (!all_orders) {
    fn(base);
    return;
  }
  PartitionPlan plan = base;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == plan.blocks.size()) {
      fn(plan);
      return;
    }
    std::vector<int> block = base.blocks[idx];
    std::sort(block.begin(), block.end());
    do {
      plan.blocks[idx] = block;
      rec(idx + 1);
    } while (std::next_permutation(block.begin(), block.end()));
  };
  rec(0);
}

bool full(const std::vector<EnumeratedTuple>& out, const EnumerateOptions& o) {
  return o.limit != 0 && out.size() >= o.limit;
}

void enumerate_thm1(const EnumerateOptions& o, std::vector<EnumeratedTuple>& out) {
  const auto q = static_cast<std::uint64_t>(o.q);
  for (int m = 3; pow_le(q, static_cast<unsigned>(m - 1), o.max_length); ++m) {
    for (int v = 1; v < m; ++v) {
      for (int d = 2; d < m && d <= m - v; ++d) {
        for (int d_prime = 1; d_prime < d; ++d_prime) {
          for (const auto& shape : compositions(m - v, d)) {
            for_each_order(canonical_plan(shape), o.all_orders,
                           [&](const PartitionPlan& plan) {
              int before = 0;
              for (int a = 0; a < d_prime; ++a) before += shape[static_cast<std::size_t>(a)];
              int m_next = shape[static_cast<std::size_t>(d_prime)];
              for (int u = before + 1; u < before + m_next; ++u) {
                // length digit grids a_1..a_{v-1} in Z_q, a_m in Z_q*
                std::vector<int> digits(static_cast<std::size_t>(v - 1), 0);
                std::function<void(std::size_t)> fill = [&](std::size_t k) {
                  if (full(out, o)) return;
                  if (k == digits.size()) {
                    for (int a_m = 1; a_m < o.q; ++a_m) {
                      Thm1Params p;
                      p.q = o.q; p.m = m; p.v = v; p.d = d; p.d_prime = d_prime;
                      p.plan = plan; p.u = u;
                      p.length_digits = digits; p.a_m = a_m;
                      if (!validate(p).ok()) continue;
                      std::uint64_t L = mocs_length(p);
                      if (L > o.max_length) continue;
                      if (full(out, o)) return;
                      out.push_back(EnumeratedTuple{
                          p, pow_u64(q, static_cast<unsigned>(d_prime)),
                          pow_u64(q, static_cast<unsigned>(v + d)), L, L});
                    }
                    return;
                  }
                  for (int a = 0; a < o.q; ++a) {
                    digits[k] = a;
                    fill(k + 1);
                  }
                };
                fill(0);
                if (full(out, o)) return;
              }
            });
            if (full(out, o)) return;
          }
        }
      }
    }
  }
}

void enumerate_thm2(const EnumerateOptions& o, std::vector<EnumeratedTuple>& out) {
  const auto q = static_cast<std::uint64_t>(o.q);
  for (int m = 3; pow_le(q, static_cast<unsigned>(m), o.max_length); ++m) {
    const std::uint64_t L = pow_u64(q, static_cast<unsigned>(m));
    for (int d = 2; d < m; ++d) {
      for (const auto& shape : compositions(m, d)) {
        for_each_order(canonical_plan(shape), o.all_orders,
                       [&](const PartitionPlan& plan) {
          if (full(out, o)) return;
          Thm2Params p;
          p.q = o.q; p.m = m; p.d = d; p.plan = plan;
          if (!validate(p).ok()) return;
          const std::uint64_t count = pow_u64(q, static_cast<unsigned>(d));
          out.push_back(EnumeratedTuple{p, count, count, L, L});
        });
        if (full(out, o)) return;
      }
    }
  }
}

void enumerate_thm3(const EnumerateOptions& o, std::vector<EnumeratedTuple>& out) {
  const auto q = static_cast<std::uint64_t>(o.q);
  for (int m = 2; pow_le(q, static_cast<unsigned>(m), o.max_length); ++m) {
    const std::uint64_t L = pow_u64(q, static_cast<unsigned>(m));
    for (int v = 1; v < m; ++v) {
      for (int d = 1; d <= m - v; ++d) {
        for (const auto& shape : compositions(m - v, d)) {
          for_each_order(canonical_plan(shape), o.all_orders,
                         [&](const PartitionPlan& plan) {
            if (full(out, o)) return;
            Thm3Params p;
            p.q = o.q; p.m = m; p.v = v; p.d = d; p.plan = plan;
            if (!validate(p).ok()) return;
            out.push_back(EnumeratedTuple{
                p, pow_u64(q, static_cast<unsigned>(v + d)),
                pow_u64(q, static_cast<unsigned>(d)), L,
                pow_u64(q, static_cast<unsigned>(m - v))});
          });
          if (full(out, o)) return;
        }
      }
    }
  }
}

void enumerate_lemma3(const EnumerateOptions& o, std::vector<EnumeratedTuple>& out) {
  if (o.q % 2 != 0) return;
  for (int m = 2; pow_le(2, static_cast<unsigned>(m - 1), o.max_length); ++m) {
    for (int k = 1; k <= m; ++k) {
      for (int v = 0; v <= m - k; ++v) {
        std::vector<int> bits(static_cast<std::size_t>(std::max(k - 1, 0)), 0);
        std::function<void(std::size_t)> fill = [&](std::size_t idx) {
          if (full(out, o)) return;
          if (idx == bits.size()) {
            Lemma3Params p;
            p.q = o.q; p.m = m; p.k = k; p.v = v;
            p.pi.resize(static_cast<std::size_t>(m));
            std::iota(p.pi.begin(), p.pi.end(), 1);
            p.length_bits = bits;
            if (!validate(p).ok()) return;
            std::uint64_t L = gcs_lemma3_length(p);
            if (L > o.max_length) return;
            out.push_back(EnumeratedTuple{
                p, 1, pow_u64(2, static_cast<unsigned>(k + 1)), L, L});
            return;
          }
          for (int b = 0; b <= 1; ++b) {
            bits[idx] = b;
            fill(idx + 1);
          }
        };
        fill(0);
        if (full(out, o)) return;
      }
    }
  }
}

}  // namespace

std::string EnumeratedTuple::describe() const {
  std::ostringstream out;
  nlohmann::json j = config_to_json(config);
  j.erase("coeffs");
  out << "(" << set_count << "," << set_size << "," << length;
  if (zcz_width != length) out << "," << zcz_width;
  out << ")  " << j.dump();
  return out.str();
}

std::vector<EnumeratedTuple> enumerate_tuples(const EnumerateOptions& opts) {
  if (opts.q < 2) throw std::invalid_argument("enumerate: q must be >= 2");
  std::vector<EnumeratedTuple> out;
  if (opts.theorem == "mocs_thm1") {
    enumerate_thm1(opts, out);
  } else if (opts.theorem == "ccc_thm2") {
    enumerate_thm2(opts, out);
  } else if (opts.theorem == "zccs_thm3") {
    enumerate_thm3(opts, out);
  } else if (opts.theorem == "gcs_lemma3") {
    enumerate_lemma3(opts, out);
  } else {
    throw std::invalid_argument("enumerate: unknown theorem \"" + opts.theorem +
                                "\"");
  }
  return out;
}

}  // namespace ccs
