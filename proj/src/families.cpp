#include "achain/families.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "achain/algebra.hpp"

namespace achain {

namespace {

BigInt pow2(std::uint64_t e) {
  BigInt v = 1;
  v <<= e;
  return v;
}

// 1, 2, 3, 5, 10, 20, 23
std::vector<BigInt> twenty_three_prefix() { return to_bigints({1, 2, 3, 5, 10, 20, 23}); }

}  // namespace

BigInt UFamily::x() const { return BigInt(23) << m; }
BigInt UFamily::u() const { return x() + 7; }

Family2 Family2::make(std::uint64_t m, std::uint64_t k) {
  if (m < 1) throw DomainError("family2 needs m >= 1, got " + std::to_string(m));
  if (k < 3) throw DomainError("family2 needs k >= 3, got " + std::to_string(k));
  return Family2{m, k};
}

BigInt Family2::n() const {
  return pow2(2 * m + k + 7) + pow2(2 * m + k + 5) + pow2(m + k + 4) + pow2(m + k + 3) +
         pow2(m + 2) + pow2(m + 1) + 1;
}

BigInt Family2::alpha() const { return 2 * (pow2(m + 3) + 1) + (pow2(m + 2) + 1); }

BigInt Family2::beta() const { return pow2(m + 2) + pow2(m + 1) + 1; }

Chain x3_chain(std::uint64_t m) {
  auto elements = twenty_three_prefix();
  for (std::uint64_t t = 0; t < m; ++t) elements.push_back(elements.back() * 2);
  elements.push_back(elements.back() + 3);
  return validate(std::move(elements));
}

Chain u_chain(std::uint64_t m) {
  if (m < 1) throw DomainError("u_chain needs m >= 1");
  auto elements = to_bigints({1, 2, 3, 5, 7, 10, 20, 23});
  for (std::uint64_t t = 0; t < m; ++t) elements.push_back(elements.back() * 2);
  elements.push_back(elements.back() + 7);
  return validate(std::move(elements));
}

LiftedChain u_mersenne_chain(std::uint64_t m) {
  if (m < 1) throw DomainError("u_mersenne_chain needs m >= 1");
  LiftedChain half = lift_star(x3_chain(m - 1));
  LiftedChain lifted = lift_increment(lift_double(half));
  if (lifted.source().target() != UFamily{m}.u()) {
    throw std::logic_error("u_mersenne_chain source does not end at U_m");
  }
  return lifted;
}

BigInt family2_n(std::uint64_t m, std::uint64_t k) {
  BigInt n = Family2::make(m, k).n();
  if (nu(n) != 7) throw std::logic_error("family2 value without seven one bits");
  return n;
}

namespace {

struct Family2Layout {
  std::vector<BigInt> elements;
  std::size_t idx_low_pow;   // 2^{m+1}
  std::size_t idx_top_pow;   // 2^{m+2}
  std::size_t idx_plus_one;  // 2^{m+2} + 1
  std::size_t idx_beta;
  std::size_t idx_upper;     // 2^{m+3} + 1
};

Family2Layout family2_layout(const Family2& f) {
  Family2Layout out;
  auto& e = out.elements;
  e.push_back(1);
  for (std::uint64_t t = 1; t <= f.m + 2; ++t) e.push_back(pow2(t));
  out.idx_top_pow = e.size() - 1;
  out.idx_low_pow = out.idx_top_pow - 1;
  e.push_back(pow2(f.m + 2) + 1);
  out.idx_plus_one = e.size() - 1;
  e.push_back(f.beta());
  out.idx_beta = e.size() - 1;
  e.push_back(pow2(f.m + 3) + 1);
  out.idx_upper = e.size() - 1;
  e.push_back(2 * (pow2(f.m + 3) + 1));
  e.push_back(f.alpha());
  for (std::uint64_t t = 0; t < f.m + f.k + 3; ++t) e.push_back(e.back() * 2);
  e.push_back(f.n());
  return out;
}

}  // namespace

Chain family2_chain(std::uint64_t m, std::uint64_t k) {
  const Family2 f = Family2::make(m, k);
  return validate(family2_layout(f).elements);
}

Chain family2_listing_chain(std::uint64_t m, std::uint64_t k) {
  const Family2 f = Family2::make(m, k);
  Family2Layout layout = family2_layout(f);
  const Chain star = validate(layout.elements);
  std::vector<Step> steps(star.steps().begin(), star.steps().end());
  steps[layout.idx_upper - 1] = {layout.idx_plus_one, layout.idx_top_pow};
  steps[layout.idx_beta - 1] = {layout.idx_plus_one, layout.idx_low_pow};
  return Chain::with_steps(std::move(layout.elements), std::move(steps));
}

LiftedChain family2_mersenne_chain(std::uint64_t m, std::uint64_t k) {
  const Chain listing = family2_listing_chain(m, k);
  LiftedChain lifted = lift_general(listing);
  if (lifted.length() != star_lift_length(star_assignment(listing))) {
    throw std::logic_error("family2 lift does not match the star-lift length");
  }
  return lifted;
}

std::optional<std::uint64_t> match_u_family(const BigInt& n) {
  if (n <= 7) return std::nullopt;
  BigInt rest = n - 7;
  if (rest % 23 != 0) return std::nullopt;
  rest /= 23;
  if (nu(rest) != 1) return std::nullopt;
  return static_cast<std::uint64_t>(lambda(rest));
}

std::optional<Family2> match_family2(const BigInt& n) {
  if (n <= 0 || nu(n) != 7) return std::nullopt;
  std::vector<std::uint64_t> bits;
  for (std::size_t b = 0, top = lambda(n); b <= top; ++b) {
    if (boost::multiprecision::bit_test(n, static_cast<unsigned>(b))) bits.push_back(b);
  }
  if (bits[0] != 0 || bits[1] < 2) return std::nullopt;
  const std::uint64_t m = bits[1] - 1;
  if (bits[3] < m + 6) return std::nullopt;
  const std::uint64_t k = bits[3] - m - 3;
  const Family2 f{m, k};
  if (f.n() != n) return std::nullopt;
  return f;
}

}  // namespace achain
