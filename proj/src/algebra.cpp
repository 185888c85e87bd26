#include "achain/algebra.hpp"

#include <string>

namespace achain {

Chain product(const Chain& c1, const Chain& c2) {
  const std::size_t r = c1.length();
  const BigInt& top = c1.target();

  std::vector<BigInt> elements = c1.elements();
  std::vector<Step> steps(c1.steps().begin(), c1.steps().end());
  elements.reserve(elements.size() + c2.length());
  steps.reserve(steps.size() + c2.length());
  for (std::size_t t = 1; t <= c2.length(); ++t) {
    elements.push_back(top * c2[t]);
    steps.push_back({r + c2.step(t).i, r + c2.step(t).j});
  }
  // Every a_r * b_t exceeds a_r, so the union is already ascending and
  // duplicate-free; with_steps re-checks each sum.
  return Chain::with_steps(std::move(elements), std::move(steps));
}

Chain double_extend(const Chain& c) {
  std::vector<BigInt> elements = c.elements();
  std::vector<Step> steps(c.steps().begin(), c.steps().end());
  elements.push_back(c.target() * 2);
  steps.push_back({c.length(), c.length()});
  return Chain::with_steps(std::move(elements), std::move(steps));
}

Chain increment_extend(const Chain& c) {
  std::vector<BigInt> elements = c.elements();
  std::vector<Step> steps(c.steps().begin(), c.steps().end());
  elements.push_back(c.target() + 1);
  steps.push_back({c.length(), 0});
  return Chain::with_steps(std::move(elements), std::move(steps));
}

Chain pow2_plus1_chain(std::uint64_t t) {
  if (t == 0) throw DomainError("pow2_plus1_chain needs t >= 1");
  std::vector<BigInt> elements{BigInt(1)};
  std::vector<Step> steps;
  elements.reserve(t + 2);
  for (std::uint64_t s = 1; s <= t; ++s) {
    elements.push_back(elements.back() * 2);
    steps.push_back({elements.size() - 2, elements.size() - 2});
  }
  elements.push_back(elements.back() + 1);
  steps.push_back({elements.size() - 2, 0});
  return Chain::with_steps(std::move(elements), std::move(steps));
}

}  // namespace achain
