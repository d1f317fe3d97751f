#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "peakpoly/rational.hpp"

namespace peakpoly {

// Statistics of an ordinary permutation of [n].
struct PermStats {
  int pk = 0;   // interior peaks, positions 2..n-1
  int lpk = 0;  // left peaks, positions 1..n-1 with pi(0) = 0
  int des = 0;  // descents, positions 1..n-1
  friend bool operator==(const PermStats&, const PermStats&) = default;
};

// Statistics of a signed permutation given by its window (w(1), ..., w(n)).
struct SignedStats {
  int des_b = 0;  // descents over positions 0..n-1, w(0) = 0
  int ades = 0;   // descents over positions 0..n, w(0) = w(n+1) = 0
  friend bool operator==(const SignedStats&, const SignedStats&) = default;
};

enum class Stat { kPk, kLpk, kDes, kDesB, kAdes };

std::string_view to_string(Stat stat);

struct StatDistribution {
  int n = 0;
  Stat stat = Stat::kPk;
  std::vector<Integer> counts;  // counts[k] = #objects with statistic value k
};

struct OracleConfig {
  int perm_limit = 10;    // largest n enumerated over S_n
  int signed_limit = 7;   // largest n enumerated over signed permutations
  unsigned jobs = 1;      // worker threads; never changes results
};

// pi holds pi(1..n) as values 1..n. Throws Errc::kNotAPermutation.
PermStats perm_stats(std::span<const int> pi);

// omega holds the window with |omega(i)| a permutation of [n].
// Throws Errc::kNotASignedPermutation.
SignedStats signed_stats(std::span<const int> omega);

// Exact distribution of pk, lpk or des over S_n by full enumeration.
// Throws Errc::kLimitExceeded when n is outside [1, config.perm_limit].
StatDistribution distribution(int n, Stat stat, const OracleConfig& config = {});

// Exact distribution of des_b or ades over all 2^n n! signed permutations.
StatDistribution signed_distribution(int n, Stat stat, const OracleConfig& config = {});

// Number of alternating permutations pi(1) > pi(2) < pi(3) > ... in S_n.
Integer count_alternating(int n, const OracleConfig& config = {});

// Number of reverse alternating permutations pi(1) < pi(2) > pi(3) < ... in S_n.
Integer count_reverse_alternating(int n, const OracleConfig& config = {});

}  // namespace peakpoly
