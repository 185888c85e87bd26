#include "achain/chain.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace achain {

namespace {

std::string str(const BigInt& v) { return v.str(); }

// Index of value within elements[0, end), or end if absent.
std::size_t find_before(const std::vector<BigInt>& elements, const BigInt& value, std::size_t end) {
  auto first = elements.begin();
  auto last = elements.begin() + static_cast<std::ptrdiff_t>(end);
  auto it = std::lower_bound(first, last, value);
  if (it != last && *it == value) return static_cast<std::size_t>(it - first);
  return end;
}

void check_shape(const std::vector<BigInt>& elements) {
  if (elements.empty()) throw ChainError(ChainError::Kind::empty, 0, "empty sequence");
  for (std::size_t k = 0; k < elements.size(); ++k) {
    if (elements[k] <= 0) {
      throw ChainError(ChainError::Kind::not_positive, k,
                       "element " + std::to_string(k) + " is not positive");
    }
  }
  if (elements[0] != 1) {
    throw ChainError(ChainError::Kind::first_not_one, 0, "first element is " + str(elements[0]));
  }
  for (std::size_t k = 1; k < elements.size(); ++k) {
    if (elements[k] <= elements[k - 1]) {
      throw ChainError(ChainError::Kind::not_ascending, k,
                       "element " + std::to_string(k) + " (" + str(elements[k]) +
                           ") does not exceed its predecessor");
    }
  }
}

}  // namespace

Chain::Chain() : elements_{BigInt(1)} {}

Chain Chain::with_steps(std::vector<BigInt> elements, std::vector<Step> steps) {
  check_shape(elements);
  if (steps.size() != elements.size() - 1) {
    throw ChainError(ChainError::Kind::bad_justification, 0,
                     "expected " + std::to_string(elements.size() - 1) + " justifications, got " +
                         std::to_string(steps.size()));
  }
  for (std::size_t k = 1; k < elements.size(); ++k) {
    Step& s = steps[k - 1];
    if (s.i < s.j) std::swap(s.i, s.j);
    if (s.i >= k || elements[s.i] + elements[s.j] != elements[k]) {
      throw ChainError(ChainError::Kind::bad_justification, k,
                       "element " + std::to_string(k) + " is not a_" + std::to_string(s.i) +
                           " + a_" + std::to_string(s.j));
    }
  }
  Chain c;
  c.elements_ = std::move(elements);
  c.steps_ = std::move(steps);
  return c;
}

Chain validate(std::vector<BigInt> raw) {
  check_shape(raw);
  std::vector<Step> steps;
  steps.reserve(raw.size() - 1);
  for (std::size_t k = 1; k < raw.size(); ++k) {
    bool found = false;
    for (std::size_t i = k; i-- > 0;) {
      if (2 * raw[i] < raw[k]) break;
      BigInt rest = raw[k] - raw[i];
      std::size_t j = find_before(raw, rest, i + 1);
      if (j <= i) {
        steps.push_back({i, j});
        found = true;
        break;
      }
    }
    if (!found) {
      throw ChainError(ChainError::Kind::no_justification, k,
                       "element " + std::to_string(k) + " (" + str(raw[k]) +
                           ") is not a sum of two earlier elements");
    }
  }
  return Chain(std::move(raw), std::move(steps));
}

Chain canonicalize(std::vector<BigInt> raw) {
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  return validate(std::move(raw));
}

std::size_t lambda(const BigInt& n) {
  if (n <= 0) throw DomainError("lambda of non-positive value");
  return static_cast<std::size_t>(boost::multiprecision::msb(n));
}

std::size_t nu(const BigInt& n) {
  if (n < 0) throw DomainError("nu of negative value");
  std::size_t count = 0;
  const auto& backend = n.backend();
  const auto* limbs = backend.limbs();
  for (std::size_t i = 0; i < backend.size(); ++i) {
    count += static_cast<std::size_t>(__builtin_popcountll(limbs[i]));
  }
  return count;
}

std::size_t lower_bound(const BigInt& n) {
  std::size_t v = nu(n);
  std::size_t ceil_log = 0;
  while ((std::size_t{1} << ceil_log) < v) ++ceil_log;
  return lambda(n) + ceil_log;
}

Chain binary_chain(const BigInt& n) {
  if (n < 1) throw DomainError("binary_chain needs n >= 1");
  std::vector<BigInt> elements{BigInt(1)};
  std::vector<Step> steps;
  BigInt acc = 1;
  for (std::size_t bit = lambda(n); bit-- > 0;) {
    acc <<= 1;
    steps.push_back({elements.size() - 1, elements.size() - 1});
    elements.push_back(acc);
    if (boost::multiprecision::bit_test(n, static_cast<unsigned>(bit))) {
      acc += 1;
      steps.push_back({elements.size() - 1, 0});
      elements.push_back(acc);
    }
  }
  return Chain::with_steps(std::move(elements), std::move(steps));
}

namespace {

// Index j with a_k = a_{k-1} + a_j, or k if none.
std::size_t star_operand(const std::vector<BigInt>& a, std::size_t k) {
  BigInt rest = a[k] - a[k - 1];
  return find_before(a, rest, k);
}

}  // namespace

bool is_star(const Chain& c) {
  const auto& a = c.elements();
  for (std::size_t k = 1; k < a.size(); ++k) {
    if (star_operand(a, k) == k) return false;
  }
  return true;
}

Chain star_assignment(const Chain& c) {
  const auto& a = c.elements();
  std::vector<Step> steps;
  steps.reserve(c.length());
  for (std::size_t k = 1; k < a.size(); ++k) {
    std::size_t j = star_operand(a, k);
    if (j == k) {
      throw NotStarError(k, "element " + std::to_string(k) + " (" + str(a[k]) +
                                ") is not its predecessor plus an earlier element");
    }
    steps.push_back({k - 1, j});
  }
  return Chain::with_steps(a, std::move(steps));
}

ChainStats stats(const Chain& c) {
  ChainStats s;
  const auto& a = c.elements();
  s.lambda = lambda(c.target());
  s.nu = nu(c.target());
  for (std::size_t k = 1; k < a.size(); ++k) {
    if (lambda(a[k]) == lambda(a[k - 1])) ++s.small_steps;
  }
  s.star = is_star(c);
  return s;
}

std::uint64_t to_u64(const BigInt& v) {
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max()) {
    throw DomainError(v.str() + " does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(v);
}

std::vector<BigInt> to_bigints(std::span<const std::uint64_t> values) {
  return {values.begin(), values.end()};
}

std::vector<BigInt> to_bigints(std::initializer_list<std::uint64_t> values) {
  return {values.begin(), values.end()};
}

}  // namespace achain
