#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "achain/chain.hpp"

namespace achain {

/// (2^ones - 1) * 2^shift: a block of `ones` one bits followed by `shift`
/// zero bits. Every element of a lifted chain has this shape, which keeps
/// chains for 2^n - 1 at O(n) memory instead of O(n^2) bits.
struct Run {
  std::uint64_t ones = 1;
  std::uint64_t shift = 0;

  BigInt value() const;

  friend bool operator==(const Run&, const Run&) = default;
};

/// Value order without materialising either side.
bool value_less(const Run& a, const Run& b) noexcept;

/// A chain for 2^n - 1 built from a chain for n.
///
/// Elements are ascending runs; steps follow the Chain convention (step k
/// justifies element k, i >= j). A doubling step (i == j) counts toward
/// shifts_total, everything else toward adds_total. Construction always
/// ends with verify_lift; a failure there throws std::logic_error.
class LiftedChain {
 public:
  const std::vector<Run>& elements() const noexcept { return elements_; }
  std::span<const Step> steps() const noexcept { return steps_; }
  const Step& step(std::size_t k) const { return steps_.at(k - 1); }

  /// Chain for n.
  const Chain& source() const noexcept { return source_; }
  /// n, the target of source().
  std::uint64_t exponent() const noexcept { return exponent_; }

  std::size_t length() const noexcept { return elements_.size() - 1; }
  std::uint64_t shifts_total() const noexcept { return shifts_total_; }
  std::uint64_t adds_total() const noexcept { return adds_total_; }

  /// Element values as big integers. O(n^2) bits; meant for small n.
  std::vector<BigInt> values() const;
  Chain to_chain() const;

 private:
  friend class LiftBuilder;
  LiftedChain() = default;

  std::vector<Run> elements_;
  std::vector<Step> steps_;
  Chain source_;
  std::uint64_t exponent_ = 1;
  std::uint64_t shifts_total_ = 0;
  std::uint64_t adds_total_ = 0;
};

struct LiftCheck {
  bool ok = false;
  /// First element whose sum equation, ordering or final value fails.
  std::optional<std::size_t> failing_index;

  explicit operator bool() const noexcept { return ok; }
};

/// Checks every element against its justified operands with big-integer
/// arithmetic and the final element against 2^n - 1.
LiftCheck verify_lift(const LiftedChain& l);
LiftCheck verify_mersenne_chain(std::uint64_t n, std::span<const Run> elements,
                                std::span<const Step> steps);
LiftCheck verify_mersenne_chain(std::uint64_t n, std::span<const BigInt> elements,
                                std::span<const Step> steps);

/// Brauer lift of a star chain: for a_k = a_{k-1} + a_j emit a_j doublings
/// of 2^{a_{k-1}} - 1 and one addition of 2^{a_j} - 1.
/// Length (n - 1) + l(c). Throws NotStarError for non-star chains.
LiftedChain lift_star(const Chain& c);

/// Lift using the chain's own justifications. Each a_k = a_i + a_j becomes
/// 2^{a_k} - 1 = 2^{a_j} (2^{a_i} - 1) + (2^{a_j} - 1). Shifted copies of
/// each 2^{a_i} - 1 are cached, so a later step needing a longer shift of
/// the same base only pays for the extra doublings.
LiftedChain lift_general(const Chain& c);

/// 2^a - 1 -> 2^{2a} - 1 through the factor (2^a + 1): a doublings and one
/// addition. Source becomes double_extend(source).
LiftedChain lift_double(const LiftedChain& l);

/// 2^a - 1 -> 2^{a+1} - 1 as 2 (2^a - 1) + 1: one doubling and one addition.
/// Source becomes increment_extend(source).
LiftedChain lift_increment(const LiftedChain& l);

/// (n - 1) + l(c): the length lift_star produces for a star chain c.
std::uint64_t star_lift_length(const Chain& c);

/// chain-v1 output of the materialised values.
void write_lifted(std::ostream& out, const LiftedChain& l, bool with_steps = true);

}  // namespace achain
