#pragma once

// Test-only reference computations. Nothing here calls into the library's
// search or lift code paths.

#include <cstdint>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

inline bool reach(std::vector<std::uint64_t>& chain, std::uint64_t n, int steps_left) {
  const std::uint64_t top = chain.back();
  if (top == n) return true;
  if (steps_left == 0) return false;
  const std::size_t size = chain.size();
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const std::uint64_t v = chain[i] + chain[j];
      if (v <= top || v > n) continue;
      chain.push_back(v);
      const bool ok = reach(chain, n, steps_left - 1);
      chain.pop_back();
      if (ok) return true;
    }
  }
  return false;
}

}  // namespace detail

/// l(n) by plain enumeration of ascending chains, no pruning beyond
/// elements <= n. Only usable for n below ~100.
inline int brute_force_length(std::uint64_t n) {
  for (int depth = 0;; ++depth) {
    std::vector<std::uint64_t> chain{1};
    if (detail::reach(chain, n, depth)) return depth;
  }
}

inline BigInt mersenne(std::uint64_t n) {
  BigInt v = 1;
  v <<= n;
  return v - 1;
}

/// Random star chain with every element <= limit; at least one step.
inline std::vector<std::uint64_t> random_star_chain(std::mt19937_64& rng, std::uint64_t limit) {
  std::vector<std::uint64_t> chain{1, 2};
  std::uniform_int_distribution<int> stop(0, 11);
  for (;;) {
    std::uniform_int_distribution<std::size_t> pick(0, chain.size() - 1);
    const std::uint64_t next = chain.back() + chain[pick(rng)];
    if (next > limit || stop(rng) == 0) break;
    chain.push_back(next);
  }
  return chain;
}

/// Random ascending addition chain (any two earlier operands), <= limit.
inline std::vector<std::uint64_t> random_chain(std::mt19937_64& rng, std::uint64_t limit,
                                               std::size_t max_steps) {
  std::vector<std::uint64_t> chain{1};
  while (chain.size() <= max_steps) {
    std::vector<std::uint64_t> options;
    for (std::size_t i = 0; i < chain.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        const std::uint64_t v = chain[i] + chain[j];
        if (v > chain.back() && v <= limit) options.push_back(v);
      }
    }
    if (options.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    chain.push_back(options[pick(rng)]);
  }
  return chain;
}

}  // namespace oracle
