#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "achain/errors.hpp"

namespace achain {

using BigInt = boost::multiprecision::cpp_int;

/// Justification of one chain element: elements[i] + elements[j], with i >= j.
struct Step {
  std::size_t i = 0;
  std::size_t j = 0;

  friend bool operator==(const Step&, const Step&) = default;
};

/// An addition chain 1 = a_0 < a_1 < ... < a_r in canonical ascending form,
/// with one justification per element after the first.
///
/// Instances only come out of validate(), canonicalize() or with_steps(),
/// so every Chain satisfies its sum equations exactly.
class Chain {
 public:
  /// Chain [1].
  Chain();

  /// Uses the supplied justifications as-is (after normalising i >= j).
  /// steps.size() must equal elements.size() - 1.
  static Chain with_steps(std::vector<BigInt> elements, std::vector<Step> steps);

  const std::vector<BigInt>& elements() const noexcept { return elements_; }
  /// Justification for element k, k >= 1.
  const Step& step(std::size_t k) const { return steps_.at(k - 1); }
  std::span<const Step> steps() const noexcept { return steps_; }

  std::size_t length() const noexcept { return elements_.size() - 1; }
  const BigInt& target() const noexcept { return elements_.back(); }
  const BigInt& operator[](std::size_t k) const { return elements_[k]; }

  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  friend Chain validate(std::vector<BigInt> raw);
  Chain(std::vector<BigInt> elements, std::vector<Step> steps)
      : elements_(std::move(elements)), steps_(std::move(steps)) {}

  std::vector<BigInt> elements_;
  std::vector<Step> steps_;
};

struct ChainStats {
  std::size_t lambda = 0;
  std::size_t nu = 0;
  std::size_t small_steps = 0;
  bool star = false;
};

/// Finds a justification for every element of an ascending sequence.
/// Ties prefer the largest i, then the largest j.
Chain validate(std::vector<BigInt> raw);

/// Sorts, drops duplicates, then validates.
Chain canonicalize(std::vector<BigInt> raw);

ChainStats stats(const Chain& c);

/// floor(log2 n), n >= 1.
std::size_t lambda(const BigInt& n);
/// Number of one bits.
std::size_t nu(const BigInt& n);

/// lambda(n) + ceil(log2 nu(n)).
std::size_t lower_bound(const BigInt& n);

/// Left-to-right square-and-multiply chain, length lambda(n) + nu(n) - 1.
Chain binary_chain(const BigInt& n);

/// True iff every element k >= 1 can be written as a_{k-1} + a_j.
bool is_star(const Chain& c);

/// Same elements re-justified so that every step uses its predecessor.
/// Throws NotStarError naming the first element with no such justification.
Chain star_assignment(const Chain& c);

/// Narrowing with a range check; throws DomainError when v does not fit.
std::uint64_t to_u64(const BigInt& v);

/// Convenience for literals: to_bigints({1, 2, 3}).
std::vector<BigInt> to_bigints(std::span<const std::uint64_t> values);
std::vector<BigInt> to_bigints(std::initializer_list<std::uint64_t> values);

}  // namespace achain
