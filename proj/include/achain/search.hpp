#pragma once

#include <cstdint>
#include <vector>

#include "achain/chain.hpp"

namespace achain {

struct SearchConfig {
  std::uint64_t max_nodes = 1'000'000'000;
  bool star_only = false;
  unsigned worker_count = 1;
  /// Node counts and certificates independent of worker_count.
  bool deterministic = true;
};

struct SearchOutcome {
  std::uint64_t n = 1;
  std::size_t length = 0;
  Chain certificate;
  std::uint64_t nodes_expanded = 0;
  /// Every depth below `length` was exhausted. When false, `length` and
  /// `certificate` are only the best upper bound known when the budget ran out.
  bool proven_minimal = false;
};

/// Largest target the fixed-width search accepts.
inline constexpr std::uint64_t kMaxSearchTarget = std::uint64_t{1} << 62;

/// Iterative deepening from lower_bound(n). At each depth a depth-first
/// branch and bound over ascending chains, candidates in descending order.
SearchOutcome exact_length(std::uint64_t n, const SearchConfig& cfg = {});

/// exact_length restricted to star steps (l*(n)).
SearchOutcome minimal_star_length(std::uint64_t n, SearchConfig cfg = {});

inline constexpr std::uint64_t kOracleLimit = 4096;

/// l(n) for every 1 <= n <= limit by layered enumeration of all ascending
/// chains with elements <= limit; entry 0 is unused. Throws LimitTooLarge
/// above kOracleLimit.
std::vector<int> bfs_oracle(std::uint64_t limit);

}  // namespace achain
