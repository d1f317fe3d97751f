#include "peakpoly/perm_oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <string>
#include <thread>

#include "peakpoly/error.hpp"

namespace peakpoly {
namespace {

// Per-shard tallies. Counts for n <= 13 fit comfortably in 64 bits.
struct Tally {
  std::vector<std::uint64_t> a;
  std::vector<std::uint64_t> b;
  std::uint64_t alt = 0;
  std::uint64_t reverse_alt = 0;

  explicit Tally(std::size_t width) : a(width, 0), b(width, 0) {}

  Tally& operator+=(const Tally& o) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += o.a[i];
    for (std::size_t i = 0; i < b.size(); ++i) b[i] += o.b[i];
    alt += o.alt;
    reverse_alt += o.reverse_alt;
    return *this;
  }
};

// Runs shard(i) for i in [0, count) on up to `jobs` threads and sums the
// results in shard order.
template <typename ShardFn>
Tally run_sharded(std::size_t count, std::size_t width, unsigned jobs, ShardFn shard) {
  std::vector<Tally> results(count, Tally(width));
  const unsigned workers = std::clamp<unsigned>(jobs, 1U, static_cast<unsigned>(std::max<std::size_t>(count, 1)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = shard(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) results[i] = shard(i);
      });
    }
    for (auto& t : pool) t.join();
  }
  Tally total(width);
  for (const auto& r : results) total += r;
  return total;
}

void check_limit(int n, int limit, const char* what) {
  if (n < 1 || n > limit) {
    throw Error(Errc::kLimitExceeded,
                std::string(what) + " n=" + std::to_string(n) + " outside [1, " + std::to_string(limit) + "]");
  }
}

// One pass over pi(1..n) stored at pi[0..n-1].
inline void tally_perm(const int* pi, int n, Tally& t, bool want_des) {
  int pk = 0;
  int lpk = 0;
  int des = 0;
  bool alt = true;
  bool ralt = true;
  int prev = 0;
  for (int i = 0; i + 1 < n; ++i) {
    const bool down = pi[i] > pi[i + 1];
    if (down) {
      ++des;
      if (prev < pi[i]) {
        ++lpk;
        if (i > 0) ++pk;
      }
    }
    // Position i+1 (1-based) is odd exactly when i is even.
    const bool odd = (i % 2) == 0;
    alt = alt && (down == odd);
    ralt = ralt && (down != odd);
    prev = pi[i];
  }
  if (want_des) {
    ++t.a[des];
  } else {
    ++t.a[pk];
    ++t.b[lpk];
  }
  t.alt += alt ? 1 : 0;
  t.reverse_alt += ralt ? 1 : 0;
}

Tally enumerate_perms(int n, unsigned jobs, bool want_des) {
  const auto width = static_cast<std::size_t>(n + 1);
  return run_sharded(static_cast<std::size_t>(n), width, jobs, [n, width, want_des](std::size_t shard) {
    Tally t(width);
    std::vector<int> pi(static_cast<std::size_t>(n));
    const int first = static_cast<int>(shard) + 1;
    pi[0] = first;
    for (int v = 1, j = 1; v <= n; ++v) {
      if (v != first) pi[static_cast<std::size_t>(j++)] = v;
    }
    do {
      tally_perm(pi.data(), n, t, want_des);
    } while (std::next_permutation(pi.begin() + 1, pi.end()));
    return t;
  });
}

inline void tally_signed(const int* w, int n, Tally& t) {
  int des_b = w[0] < 0 ? 1 : 0;
  for (int i = 0; i + 1 < n; ++i) des_b += w[i] > w[i + 1] ? 1 : 0;
  const int ades = des_b + (w[n - 1] > 0 ? 1 : 0);
  ++t.a[des_b];
  ++t.b[ades];
}

Tally enumerate_signed(int n, unsigned jobs) {
  const auto width = static_cast<std::size_t>(n + 2);
  // Shard by the signed value of w(1): shards 0..n-1 positive, n..2n-1 negative.
  return run_sharded(static_cast<std::size_t>(2 * n), width, jobs, [n, width](std::size_t shard) {
    Tally t(width);
    const int abs_first = static_cast<int>(shard % static_cast<std::size_t>(n)) + 1;
    const int first = shard < static_cast<std::size_t>(n) ? abs_first : -abs_first;
    std::vector<int> rest;
    rest.reserve(static_cast<std::size_t>(n - 1));
    for (int v = 1; v <= n; ++v) {
      if (v != abs_first) rest.push_back(v);
    }
    std::vector<int> w(static_cast<std::size_t>(n));
    w[0] = first;
    const std::uint32_t masks = 1U << static_cast<unsigned>(n - 1);
    do {
      for (std::uint32_t mask = 0; mask < masks; ++mask) {
        for (int j = 0; j < n - 1; ++j) {
          const int v = rest[static_cast<std::size_t>(j)];
          w[static_cast<std::size_t>(j + 1)] = (mask >> static_cast<unsigned>(j)) & 1U ? -v : v;
        }
        tally_signed(w.data(), n, t);
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
    return t;
  });
}

StatDistribution to_distribution(int n, Stat stat, const std::vector<std::uint64_t>& counts) {
  StatDistribution d{n, stat, {}};
  std::size_t last = counts.size();
  while (last > 0 && counts[last - 1] == 0) --last;
  d.counts.reserve(last);
  for (std::size_t i = 0; i < last; ++i) d.counts.emplace_back(static_cast<unsigned long>(counts[i]));
  return d;
}

}  // namespace

std::string_view to_string(Stat stat) {
  switch (stat) {
    case Stat::kPk: return "pk";
    case Stat::kLpk: return "lpk";
    case Stat::kDes: return "des";
    case Stat::kDesB: return "desb";
    case Stat::kAdes: return "ades";
  }
  return "?";
}

PermStats perm_stats(std::span<const int> pi) {
  const int n = static_cast<int>(pi.size());
  if (n < 1) throw Error(Errc::kNotAPermutation, "empty permutation");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : pi) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw Error(Errc::kNotAPermutation, "value " + std::to_string(v) + " breaks bijectivity on [n]");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  PermStats s;
  int prev = 0;
  for (int i = 0; i + 1 < n; ++i) {
    const int cur = pi[static_cast<std::size_t>(i)];
    const int nxt = pi[static_cast<std::size_t>(i) + 1];
    if (cur > nxt) {
      ++s.des;
      if (prev < cur) {
        ++s.lpk;
        if (i > 0) ++s.pk;
      }
    }
    prev = cur;
  }
  return s;
}

SignedStats signed_stats(std::span<const int> omega) {
  const int n = static_cast<int>(omega.size());
  if (n < 1) throw Error(Errc::kNotASignedPermutation, "empty signed permutation");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : omega) {
    const int a = v < 0 ? -v : v;
    if (a < 1 || a > n || seen[static_cast<std::size_t>(a)]) {
      throw Error(Errc::kNotASignedPermutation, "value " + std::to_string(v) + " breaks bijectivity on +-[n]");
    }
    seen[static_cast<std::size_t>(a)] = true;
  }
  SignedStats s;
  int prev = 0;
  for (int v : omega) {
    if (prev > v) ++s.des_b;
    prev = v;
  }
  s.ades = s.des_b + (prev > 0 ? 1 : 0);
  return s;
}

StatDistribution distribution(int n, Stat stat, const OracleConfig& config) {
  if (stat != Stat::kPk && stat != Stat::kLpk && stat != Stat::kDes) {
    throw Error(Errc::kInvalidArgument, "statistic " + std::string(to_string(stat)) + " is not defined on S_n");
  }
  check_limit(n, config.perm_limit, "S_n");
  const bool want_des = stat == Stat::kDes;
  const Tally t = enumerate_perms(n, config.jobs, want_des);
  return to_distribution(n, stat, stat == Stat::kLpk ? t.b : t.a);
}

StatDistribution signed_distribution(int n, Stat stat, const OracleConfig& config) {
  if (stat != Stat::kDesB && stat != Stat::kAdes) {
    throw Error(Errc::kInvalidArgument, "statistic " + std::string(to_string(stat)) + " is not a signed statistic");
  }
  check_limit(n, config.signed_limit, "signed");
  const Tally t = enumerate_signed(n, config.jobs);
  return to_distribution(n, stat, stat == Stat::kDesB ? t.a : t.b);
}

Integer count_alternating(int n, const OracleConfig& config) {
  check_limit(n, config.perm_limit, "S_n");
  return Integer(static_cast<unsigned long>(enumerate_perms(n, config.jobs, true).alt));
}

Integer count_reverse_alternating(int n, const OracleConfig& config) {
  check_limit(n, config.perm_limit, "S_n");
  return Integer(static_cast<unsigned long>(enumerate_perms(n, config.jobs, true).reverse_alt));
}

}  // namespace peakpoly
