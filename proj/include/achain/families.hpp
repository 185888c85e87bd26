#pragma once

#include <cstdint>
#include <optional>

#include "achain/chain.hpp"
#include "achain/lift.hpp"

namespace achain {

/// U_m = 23 * 2^m + 7 and its pivot X_m = 23 * 2^m.
struct UFamily {
  std::uint64_t m = 0;

  BigInt x() const;
  BigInt u() const;
};

/// n = 2^{2m+k+7} + 2^{2m+k+5} + 2^{m+k+4} + 2^{m+k+3} + 2^{m+2} + 2^{m+1} + 1
///   = 2^{m+k+3} alpha + beta,
/// alpha = 2 (2^{m+3} + 1) + (2^{m+2} + 1), beta = 2^{m+2} + 2^{m+1} + 1.
struct Family2 {
  std::uint64_t m = 1;
  std::uint64_t k = 3;

  /// Throws DomainError unless m >= 1 and k >= 3.
  static Family2 make(std::uint64_t m, std::uint64_t k);

  BigInt n() const;
  BigInt alpha() const;
  BigInt beta() const;
};

/// [1, 2, 3, 5, 10, 20, 23, 46, ..., 23 * 2^m, 23 * 2^m + 3], length m + 7.
Chain x3_chain(std::uint64_t m);

/// [1, 2, 3, 5, 7, 10, 20, 23, 46, ..., 23 * 2^m, U_m], length m + 8.
Chain u_chain(std::uint64_t m);

/// Chain for 2^{U_m} - 1 of length U_m + m + 7, m >= 1:
/// lift x3_chain(m - 1) to 2^{X+3} - 1, multiply by (2^{X+3} + 1), then
/// double and add one, since 2^{U_m} - 1 = 2 (2^{X+3} - 1)(2^{X+3} + 1) + 1
/// with X = X_{m-1}.
LiftedChain u_mersenne_chain(std::uint64_t m);

BigInt family2_n(std::uint64_t m, std::uint64_t k);

/// Ascending chain of length 2m + k + 11 with star justifications.
Chain family2_chain(std::uint64_t m, std::uint64_t k);

/// Same elements, but 2^{m+3} + 1 is justified as 2^{m+2} + (2^{m+2} + 1)
/// instead of beta + 2^{m+1}. Non-star; the shifted copy of
/// 2^{2^{m+2}+1} - 1 built for beta is then reused.
Chain family2_listing_chain(std::uint64_t m, std::uint64_t k);

/// lift_general over family2_listing_chain; length (n - 1) + 2m + k + 11.
LiftedChain family2_mersenne_chain(std::uint64_t m, std::uint64_t k);

/// m with n = U_m, if any.
std::optional<std::uint64_t> match_u_family(const BigInt& n);
/// (m, k) with n = family2_n(m, k), if any.
std::optional<Family2> match_family2(const BigInt& n);

}  // namespace achain
