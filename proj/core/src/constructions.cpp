#include "ccs/constructions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ccs {

std::size_t PartitionPlan::total_size() const {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  return n;
}

std::string ValidationResult::message() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i > 0) out << "; ";
    out << violations[i];
  }
  return out.str();
}

ValidationError::ValidationError(ValidationResult r)
    : std::runtime_error("invalid construction parameters: " + r.message()),
      result(std::move(r)) {}

namespace {

int mod_q(long long v, int q) { return static_cast<int>(((v % q) + q) % q); }

bool coprime(int a, int q) { return std::gcd(((a % q) + q) % q, q) == 1; }

void require_modulus(std::vector<std::string>& v, int q) {
  if (q < 2) v.push_back("q must be >= 2");
  if (q > kMaxModulus) v.push_back("q exceeds the supported cap of 256");
}

// Blocks must form a set partition of {1..n} with injective orderings.
void check_partition(std::vector<std::string>& v, const PartitionPlan& plan,
                     int n, int expected_blocks) {
  if (static_cast<int>(plan.block_count()) != expected_blocks) {
    v.push_back("partition must have exactly d = " +
                std::to_string(expected_blocks) + " blocks");
    return;
  }
  std::set<int> seen;
  for (const auto& block : plan.blocks) {
    if (block.empty()) v.push_back("partition blocks must be nonempty");
    for (int x : block) {
      if (x < 1 || x > n) {
        v.push_back("partition entry " + std::to_string(x) +
                    " outside {1.." + std::to_string(n) + "}");
      } else if (!seen.insert(x).second) {
        v.push_back("partition entry " + std::to_string(x) + " repeated");
      }
    }
  }
  if (static_cast<int>(seen.size()) != n &&
      v.empty()) {  // only when entries were otherwise well-formed
    v.push_back("partition does not cover {1.." + std::to_string(n) + "}");
  }
}

void check_quad_coeffs(std::vector<std::string>& v, const QuadCoeffs& a_quad,
                       const PartitionPlan& plan, int q) {
  for (const auto& [key, val] : a_quad) {
    auto [alpha, beta] = key;
    if (alpha < 1 || alpha > static_cast<int>(plan.block_count())) {
      v.push_back("a_quad index alpha=" + std::to_string(alpha) + " out of range");
      continue;
    }
    int ma = static_cast<int>(plan.blocks[static_cast<std::size_t>(alpha - 1)].size());
    if (beta < 1 || beta > ma - 1) {
      v.push_back("a_quad index beta=" + std::to_string(beta) +
                  " out of range for block " + std::to_string(alpha));
    }
    if (!coprime(val, q) || mod_q(val, q) == 0) {
      v.push_back("gcd(a_{" + std::to_string(alpha) + "," + std::to_string(beta) +
                  "},q)!=1");
    }
  }
}

int quad_coeff(const QuadCoeffs& a_quad, int alpha, int beta) {
  auto it = a_quad.find({alpha, beta});
  return it == a_quad.end() ? 1 : it->second;
}

int power_coeff(const PowerCoeffs& c_power, int s, int l) {
  auto it = c_power.find({s, l});
  return it == c_power.end() ? 0 : it->second;
}

// Quadratic chain a_{alpha,beta} x_{pi_a(b)} x_{pi_a(b+1)} within each block.
void append_chain_terms(ExtendedBooleanFunction& f, const PartitionPlan& plan,
                        const QuadCoeffs& a_quad) {
  for (std::size_t a = 0; a < plan.block_count(); ++a) {
    const auto& block = plan.blocks[a];
    for (std::size_t b = 0; b + 1 < block.size(); ++b) {
      Monomial t;
      t.factors[block[b]] = 1;
      t.factors[block[b + 1]] = 1;
      t.coefficient = mod_q(quad_coeff(a_quad, static_cast<int>(a + 1),
                                       static_cast<int>(b + 1)),
                            f.q);
      f.terms.push_back(std::move(t));
    }
  }
}

// Power terms sum_{l=1}^{q-1} sum_{s=1}^{s_max} c_{s,l} x_s^l.
void append_power_terms(ExtendedBooleanFunction& f, const PowerCoeffs& coeffs,
                        int s_max) {
  for (int l = 1; l <= f.q - 1; ++l) {
    for (int s = 1; s <= s_max; ++s) {
      int c = mod_q(power_coeff(coeffs, s, l), f.q);
      if (c == 0) continue;
      Monomial t;
      t.factors[s] = l;
      t.coefficient = c;
      f.terms.push_back(std::move(t));
    }
  }
}

}  // namespace

ValidationResult validate(const Thm1Params& p) {
  ValidationResult r;
  auto& v = r.violations;
  require_modulus(v, p.q);
  if (!(0 < p.d_prime && p.d_prime < p.d && p.d < p.m)) v.push_back("0<d'<d<m required");
  if (!(p.v >= 1 && p.v < p.m)) v.push_back("1<=v<m required");
  if (p.q >= 2 && p.m >= 1 && p.v >= 1 && p.v < p.m && p.d >= 1) {
    check_partition(v, p.plan, p.m - p.v, p.d);
  }
  if (!v.empty()) return r;

  // u range: sum of the first d' block sizes < u < that plus m_{d'+1}
  int before = 0;
  for (int a = 0; a < p.d_prime; ++a) {
    before += static_cast<int>(p.plan.blocks[static_cast<std::size_t>(a)].size());
  }
  int m_next = static_cast<int>(p.plan.blocks[static_cast<std::size_t>(p.d_prime)].size());
  if (!(before < p.u && p.u < before + m_next)) {
    v.push_back("u must satisfy sum_{a<=d'} m_a < u < sum_{a<=d'+1} m_a");
  } else {
    // prefix-set condition with u' = u - sum_{a<=d'} m_a
    int u_prime = p.u - before;
    std::set<int> prefix;
    for (int a = 0; a < p.d_prime; ++a) {
      for (int x : p.plan.blocks[static_cast<std::size_t>(a)]) prefix.insert(x);
    }
    const auto& next = p.plan.blocks[static_cast<std::size_t>(p.d_prime)];
    for (int b = 0; b < u_prime; ++b) prefix.insert(next[static_cast<std::size_t>(b)]);
    bool ok = static_cast<int>(prefix.size()) == p.u;
    for (int x = 1; ok && x <= p.u; ++x) ok = prefix.count(x) > 0;
    if (!ok) {
      v.push_back("prefix-set condition failed: first u' entries of the d'+1 "
                  "blocks must cover {1..u}");
    }
  }

  check_quad_coeffs(v, p.a_quad, p.plan, p.q);
  if (!coprime(p.c, p.q) || mod_q(p.c, p.q) == 0) v.push_back("gcd(c,q)!=1");
  if (static_cast<int>(p.length_digits.size()) != std::max(p.v - 1, 0)) {
    v.push_back("length_digits must list a_1..a_{v-1} (" +
                std::to_string(std::max(p.v - 1, 0)) + " entries)");
  }
  for (int a : p.length_digits) {
    if (a < 0 || a >= p.q) v.push_back("length digit a_k outside Z_q");
  }
  if (p.a_m <= 0 || p.a_m >= p.q) v.push_back("a_m must lie in Z_q*");
  return r;
}

ValidationResult validate(const Thm2Params& p) {
  ValidationResult r;
  auto& v = r.violations;
  require_modulus(v, p.q);
  if (!(2 <= p.d && p.d < p.m)) v.push_back("2<=d<m required");
  if (p.q >= 2 && p.m >= 1 && p.d >= 1) check_partition(v, p.plan, p.m, p.d);
  if (v.empty()) check_quad_coeffs(v, p.a_quad, p.plan, p.q);
  return r;
}

ValidationResult validate(const Thm3Params& p) {
  ValidationResult r;
  auto& v = r.violations;
  require_modulus(v, p.q);
  if (!(p.v >= 0 && p.v < p.m)) v.push_back("0<=v<m required");
  if (!(p.d >= 1 && p.d <= p.m - p.v)) v.push_back("1<=d<=m-v required");
  if (p.q >= 2 && p.v >= 0 && p.v < p.m && p.d >= 1) {
    check_partition(v, p.plan, p.m - p.v, p.d);
  }
  if (v.empty()) check_quad_coeffs(v, p.a_quad, p.plan, p.q);
  if (!coprime(p.b, p.q) || mod_q(p.b, p.q) == 0) v.push_back("gcd(b,q)!=1");
  return r;
}

ValidationResult validate(const Lemma3Params& p) {
  ValidationResult r;
  auto& v = r.violations;
  require_modulus(v, p.q);
  if (p.q % 2 != 0) v.push_back("q must be even");
  if (!(p.k >= 1 && p.k <= p.m)) v.push_back("1<=k<=m required");
  if (!(p.v >= 0 && p.v <= p.m - p.k)) v.push_back("0<=v<=m-k required");
  if (static_cast<int>(p.pi.size()) != p.m) {
    v.push_back("pi must be a permutation of {1..m}");
    return r;
  }
  std::set<int> seen(p.pi.begin(), p.pi.end());
  if (static_cast<int>(seen.size()) != p.m || *seen.begin() != 1 ||
      *seen.rbegin() != p.m) {
    v.push_back("pi must be a permutation of {1..m}");
    return r;
  }
  if (!v.empty()) return r;

  auto pi = [&](int t) { return p.pi[static_cast<std::size_t>(t - 1)]; };
  for (int t = p.m - p.k + 1; t < p.m; ++t) {
    if (!(pi(t) < pi(t + 1))) v.push_back("pi(m-k+1)<...<pi(m) required");
  }
  if (pi(p.m) != p.m) v.push_back("pi(m)=m required");
  if (p.v > 0) {
    std::set<int> head;
    for (int t = 1; t <= p.v; ++t) head.insert(pi(t));
    bool ok = static_cast<int>(head.size()) == p.v && *head.rbegin() == p.v;
    if (!ok) v.push_back("{pi(1)..pi(v)} must equal {1..v}");
  }
  // Condition (3): vacuous when m-k < 2.
  for (int alpha = 1; alpha <= p.k - 1; ++alpha) {
    for (int t = 2; t <= p.m - p.k; ++t) {
      if (pi(t) < pi(p.m - p.k + alpha) && !(pi(t - 1) < pi(p.m - p.k + alpha))) {
        v.push_back("ordering condition (3) failed at alpha=" +
                    std::to_string(alpha) + ", t=" + std::to_string(t));
      }
    }
  }
  if (static_cast<int>(p.length_bits.size()) != std::max(p.k - 1, 0)) {
    v.push_back("length_bits must list a_1..a_{k-1} (" +
                std::to_string(std::max(p.k - 1, 0)) + " entries)");
  }
  for (int a : p.length_bits) {
    if (a != 0 && a != 1) v.push_back("length bit outside {0,1}");
  }
  for (const auto& [key, val] : p.c_cross) {
    auto [alpha, s] = key;
    if (alpha < 1 || alpha > p.k || s < 1 || s > p.m - p.k) {
      v.push_back("c_cross index out of range");
    }
    (void)val;
  }
  for (const auto& [s, val] : p.c_lin) {
    if (s < 1 || s > p.m) v.push_back("c_lin index out of range");
    (void)val;
  }
  return r;
}

std::uint64_t mocs_length(const Thm1Params& p) {
  ValidationResult r = validate(p);
  if (!r.ok()) throw ValidationError(std::move(r));
  const auto q = static_cast<std::uint64_t>(p.q);
  std::uint64_t L = static_cast<std::uint64_t>(p.a_m) *
                    pow_u64(q, static_cast<unsigned>(p.m - 1));
  for (int k = 1; k <= p.v - 1; ++k) {
    L += static_cast<std::uint64_t>(p.length_digits[static_cast<std::size_t>(k - 1)]) *
         pow_u64(q, static_cast<unsigned>(p.m - p.v + k - 1));
  }
  L += pow_u64(q, static_cast<unsigned>(p.u));
  return L;
}

std::uint64_t gcs_lemma3_length(const Lemma3Params& p) {
  ValidationResult r = validate(p);
  if (!r.ok()) throw ValidationError(std::move(r));
  std::uint64_t L = pow_u64(2, static_cast<unsigned>(p.m - 1));
  for (int alpha = 1; alpha <= p.k - 1; ++alpha) {
    int bit = p.length_bits[static_cast<std::size_t>(alpha - 1)];
    int pos = p.pi[static_cast<std::size_t>(p.m - p.k + alpha - 1)];
    L += static_cast<std::uint64_t>(bit) * pow_u64(2, static_cast<unsigned>(pos - 1));
  }
  L += pow_u64(2, static_cast<unsigned>(p.v));
  return L;
}

namespace {

// Expand the p-indexed sets and n-indexed sequences of a construction
// whose per-sequence function is base + a linear form chosen by (p, n).
SequenceFamily expand_grid(
    const ExtendedBooleanFunction& base, int q, std::uint64_t L,
    std::uint64_t set_count, std::uint64_t seqs_per_set,
    const std::function<std::map<int, int>(const RadixIndex& p_digits,
                                           const RadixIndex& n_digits)>& offsets,
    int p_digit_count, int n_digit_count) {
  SequenceFamily family;
  family.q = q;
  family.sets.reserve(set_count);
  for (std::uint64_t p = 0; p < set_count; ++p) {
    RadixIndex pd = to_digits(p, q, p_digit_count);
    SequenceSet set;
    set.q = q;
    set.sequences.reserve(seqs_per_set);
    for (std::uint64_t n = 0; n < seqs_per_set; ++n) {
      RadixIndex nd = to_digits(n, q, n_digit_count);
      set.sequences.push_back(expand(add_linear(base, offsets(pd, nd), 0), L));
    }
    family.sets.push_back(std::move(set));
  }
  return family;
}

}  // namespace

SequenceFamily build_mocs(const Thm1Params& p) {
  ValidationResult r = validate(p);
  if (!r.ok()) throw ValidationError(std::move(r));
  const std::uint64_t L = mocs_length(p);

  ExtendedBooleanFunction f;
  f.q = p.q;
  f.m = p.m;
  f.constant = mod_q(p.c0, p.q);
  append_chain_terms(f, p.plan, p.a_quad);
  // Cross terms b_{alpha,beta,k} x_{pi_a(b)} x_{m-v+k}.
  for (std::size_t a = 0; a < p.plan.block_count(); ++a) {
    const auto& block = p.plan.blocks[a];
    for (std::size_t b = 0; b < block.size(); ++b) {
      for (int k = 1; k <= p.v; ++k) {
        auto it = p.b_cross.find({static_cast<int>(a + 1), static_cast<int>(b + 1), k});
        if (it == p.b_cross.end()) continue;
        int c = mod_q(it->second, p.q);
        if (c == 0) continue;
        Monomial t;
        t.factors[block[b]] = 1;
        t.factors[p.m - p.v + k] = 1;
        t.coefficient = c;
        f.terms.push_back(std::move(t));
      }
    }
  }
  append_power_terms(f, p.c_power, p.m);

  auto offsets = [&p](const RadixIndex& pd, const RadixIndex& nd) {
    std::map<int, int> o;
    for (int a = 0; a < p.d; ++a) {
      int var = p.plan.blocks[static_cast<std::size_t>(a)].front();
      o[var] = mod_q(o[var] + nd[static_cast<std::size_t>(a)], p.q);
    }
    for (int k = 1; k <= p.v; ++k) {
      int var = p.m - p.v + k;
      o[var] = mod_q(o[var] + nd[static_cast<std::size_t>(p.d + k - 1)], p.q);
    }
    for (int a = 0; a < p.d_prime; ++a) {
      int var = p.plan.blocks[static_cast<std::size_t>(a)].back();
      o[var] = mod_q(o[var] +
                         static_cast<long long>(p.c) * pd[static_cast<std::size_t>(a)],
                     p.q);
    }
    return o;
  };

  const auto q = static_cast<std::uint64_t>(p.q);
  SequenceFamily family = expand_grid(
      f, p.q, L, pow_u64(q, static_cast<unsigned>(p.d_prime)),
      pow_u64(q, static_cast<unsigned>(p.v + p.d)), offsets, p.d_prime,
      p.v + p.d);
  family.claimed = FamilyClaim{FamilyKind::MOCS, L};
  return family;
}

SequenceFamily build_ccc(const Thm2Params& p) {
  ValidationResult r = validate(p);
  if (!r.ok()) throw ValidationError(std::move(r));

  ExtendedBooleanFunction f;
  f.q = p.q;
  f.m = p.m;
  f.constant = mod_q(p.h0, p.q);
  append_chain_terms(f, p.plan, p.a_quad);
  append_power_terms(f, p.h_power, p.m);

  auto offsets = [&p](const RadixIndex& pd, const RadixIndex& nd) {
    std::map<int, int> o;
    for (int a = 0; a < p.d; ++a) {
      const auto& block = p.plan.blocks[static_cast<std::size_t>(a)];
      o[block.front()] = mod_q(o[block.front()] + nd[static_cast<std::size_t>(a)], p.q);
      o[block.back()] = mod_q(o[block.back()] + pd[static_cast<std::size_t>(a)], p.q);
    }
    return o;
  };

  const auto q = static_cast<std::uint64_t>(p.q);
  const std::uint64_t count = pow_u64(q, static_cast<unsigned>(p.d));
  const std::uint64_t L = pow_u64(q, static_cast<unsigned>(p.m));
  SequenceFamily family =
      expand_grid(f, p.q, L, count, count, offsets, p.d, p.d);
  family.claimed = FamilyClaim{FamilyKind::CCC, L};
  return family;
}

SequenceFamily build_zccs(const Thm3Params& p) {
  ValidationResult r = validate(p);
  if (!r.ok()) throw ValidationError(std::move(r));

  ExtendedBooleanFunction f;
  f.q = p.q;
  f.m = p.m;
  f.constant = mod_q(p.h0, p.q);
  append_chain_terms(f, p.plan, p.a_quad);
  append_power_terms(f, p.h_power, p.m);

  auto offsets = [&p](const RadixIndex& pd, const RadixIndex& nd) {
    std::map<int, int> o;
    for (int a = 0; a < p.d; ++a) {
      const auto& block = p.plan.blocks[static_cast<std::size_t>(a)];
      o[block.front()] = mod_q(o[block.front()] + nd[static_cast<std::size_t>(a)], p.q);
      o[block.back()] =
          mod_q(o[block.back()] +
                    static_cast<long long>(p.b) * pd[static_cast<std::size_t>(a)],
                p.q);
    }
    for (int k = 1; k <= p.v; ++k) {
      int var = p.m - p.v + k;
      o[var] = mod_q(o[var] + static_cast<long long>(p.b) *
                                  pd[static_cast<std::size_t>(p.d + k - 1)],
                     p.q);
    }
    return o;
  };

  const auto q = static_cast<std::uint64_t>(p.q);
  SequenceFamily family = expand_grid(
      f, p.q, pow_u64(q, static_cast<unsigned>(p.m)),
      pow_u64(q, static_cast<unsigned>(p.v + p.d)),
      pow_u64(q, static_cast<unsigned>(p.d)), offsets, p.v + p.d, p.d);
  family.claimed =
      FamilyClaim{FamilyKind::ZCCS, pow_u64(q, static_cast<unsigned>(p.m - p.v))};
  return family;
}

SequenceSet build_gcs_lemma3(const Lemma3Params& p) {
  ValidationResult r = validate(p);
  if (!r.ok()) {
    if (p.q % 2 != 0) {
      throw std::invalid_argument("build_gcs_lemma3: q must be even");
    }
    throw ValidationError(std::move(r));
  }
  const std::uint64_t L = gcs_lemma3_length(p);
  auto pi = [&](int t) { return p.pi[static_cast<std::size_t>(t - 1)]; };
  const int half = p.q / 2;

  ExtendedBooleanFunction f;
  f.q = p.q;
  f.m = p.m;
  f.constant = mod_q(p.c0, p.q);
  for (int s = 1; s <= p.m - p.k - 1; ++s) {
    Monomial t;
    t.factors[pi(s)] = 1;
    t.factors[pi(s + 1)] = 1;
    t.coefficient = half;
    f.terms.push_back(std::move(t));
  }
  for (int alpha = 1; alpha <= p.k; ++alpha) {
    for (int s = 1; s <= p.m - p.k; ++s) {
      auto it = p.c_cross.find({alpha, s});
      if (it == p.c_cross.end()) continue;
      int c = mod_q(it->second, p.q);
      if (c == 0) continue;
      Monomial t;
      t.factors[pi(p.m - p.k + alpha)] = 1;
      t.factors[pi(s)] = 1;
      t.coefficient = c;
      f.terms.push_back(std::move(t));
    }
  }
  for (const auto& [s, c] : p.c_lin) {
    int cv = mod_q(c, p.q);
    if (cv == 0) continue;
    Monomial t;
    t.factors[s] = 1;
    t.coefficient = cv;
    f.terms.push_back(std::move(t));
  }

  SequenceSet set;
  set.q = p.q;
  const std::uint64_t count = pow_u64(2, static_cast<unsigned>(p.k + 1));
  set.sequences.reserve(count);
  for (std::uint64_t dbits = 0; dbits < count; ++dbits) {
    RadixIndex d = to_digits(dbits, 2, p.k + 1);
    std::map<int, int> o;
    for (int alpha = 1; alpha <= p.k; ++alpha) {
      int var = pi(p.m - p.k + alpha);
      o[var] = mod_q(o[var] + half * d[static_cast<std::size_t>(alpha - 1)], p.q);
    }
    o[pi(1)] = mod_q(o[pi(1)] + half * d[static_cast<std::size_t>(p.k)], p.q);
    // Binary-indexed expansion: these sequences live on {0,1}^m points.
    set.sequences.push_back(expand_binary_index(add_linear(f, o, 0), L));
  }
  return set;
}

}  // namespace ccs
