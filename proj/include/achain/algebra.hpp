#pragma once

#include <cstdint>

#include "achain/chain.hpp"

namespace achain {

/// Factor method: c1 followed by a_r * b_1, ..., a_r * b_l.
/// Target n1 * n2, length l(c1) + l(c2). Step (x, y) of c2 becomes
/// (r + x, r + y), so star inputs give a star product.
Chain product(const Chain& c1, const Chain& c2);

/// Appends 2n justified as (r, r).
Chain double_extend(const Chain& c);

/// Appends n + 1 justified as (r, 0).
Chain increment_extend(const Chain& c);

/// [1, 2, 4, ..., 2^t, 2^t + 1], t >= 1.
Chain pow2_plus1_chain(std::uint64_t t);

}  // namespace achain
