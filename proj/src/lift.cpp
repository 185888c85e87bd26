#include "achain/lift.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "achain/algebra.hpp"
#include "achain/chain_io.hpp"

namespace achain {

BigInt Run::value() const {
  BigInt v = 1;
  v <<= ones;
  v -= 1;
  v <<= shift;
  return v;
}

bool value_less(const Run& a, const Run& b) noexcept {
  const std::uint64_t ha = a.ones + a.shift;
  const std::uint64_t hb = b.ones + b.shift;
  if (ha != hb) return ha < hb;
  return a.shift > b.shift;
}

std::vector<BigInt> LiftedChain::values() const {
  std::vector<BigInt> out;
  out.reserve(elements_.size());
  for (const Run& r : elements_) out.push_back(r.value());
  return out;
}

Chain LiftedChain::to_chain() const {
  return Chain::with_steps(values(), steps_);
}

namespace {

template <typename ValueAt>
LiftCheck verify_impl(std::uint64_t n, std::size_t size, std::span<const Step> steps,
                      ValueAt value_at) {
  if (size == 0 || steps.size() != size - 1) return {false, 0};
  BigInt prev = value_at(0);
  if (prev != 1) return {false, 0};
  for (std::size_t k = 1; k < size; ++k) {
    const Step& s = steps[k - 1];
    if (s.i >= k || s.j >= k) return {false, k};
    BigInt cur = value_at(k);
    if (cur <= prev) return {false, k};
    BigInt lhs = s.i == k - 1 ? prev : value_at(s.i);
    if (s.j == k - 1) {
      lhs += prev;
    } else {
      lhs += value_at(s.j);
    }
    if (lhs != cur) return {false, k};
    prev = std::move(cur);
  }
  BigInt expected = 1;
  expected <<= n;
  expected -= 1;
  if (prev != expected) return {false, size - 1};
  return {true, std::nullopt};
}

}  // namespace

LiftCheck verify_mersenne_chain(std::uint64_t n, std::span<const Run> elements,
                                std::span<const Step> steps) {
  return verify_impl(n, elements.size(), steps,
                     [&](std::size_t k) { return elements[k].value(); });
}

LiftCheck verify_mersenne_chain(std::uint64_t n, std::span<const BigInt> elements,
                                std::span<const Step> steps) {
  return verify_impl(n, elements.size(), steps, [&](std::size_t k) { return elements[k]; });
}

LiftCheck verify_lift(const LiftedChain& l) {
  return verify_mersenne_chain(l.exponent(), l.elements(), l.steps());
}

// Accumulates runs and steps, then sorts, verifies and seals a LiftedChain.
class LiftBuilder {
 public:
  LiftBuilder() { elements_.push_back(Run{1, 0}); }

  explicit LiftBuilder(const LiftedChain& base)
      : elements_(base.elements_),
        steps_(base.steps_),
        shifts_(base.shifts_total_),
        adds_(base.adds_total_) {}

  std::size_t last() const { return elements_.size() - 1; }
  const Run& at(std::size_t idx) const { return elements_[idx]; }

  std::size_t push_double(std::size_t from) {
    const Run& r = elements_[from];
    elements_.push_back(Run{r.ones, r.shift + 1});
    steps_.push_back({from, from});
    ++shifts_;
    return last();
  }

  std::size_t push_add(std::size_t a, std::size_t b, Run result) {
    elements_.push_back(result);
    steps_.push_back({std::max(a, b), std::min(a, b)});
    ++adds_;
    return last();
  }

  LiftedChain finish(Chain source) && {
    sort_if_needed();
    LiftedChain l;
    l.exponent_ = to_u64(source.target());
    l.source_ = std::move(source);
    l.elements_ = std::move(elements_);
    l.steps_ = std::move(steps_);
    l.shifts_total_ = shifts_;
    l.adds_total_ = adds_;
    LiftCheck check = verify_lift(l);
    if (!check) {
      throw std::logic_error("lifted chain for 2^" + std::to_string(l.exponent_) +
                             "-1 fails verification at element " +
                             std::to_string(check.failing_index.value_or(0)));
    }
    return l;
  }

 private:
  // Shift runs of an old base can overtake later Mersenne values for
  // non-star justifications; restore ascending order and remap operands.
  void sort_if_needed() {
    bool sorted = true;
    for (std::size_t k = 1; k < elements_.size() && sorted; ++k) {
      sorted = value_less(elements_[k - 1], elements_[k]);
    }
    if (sorted) return;

    std::vector<std::size_t> order(elements_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return value_less(elements_[x], elements_[y]);
    });
    std::vector<std::size_t> position(order.size());
    for (std::size_t p = 0; p < order.size(); ++p) position[order[p]] = p;

    std::vector<Run> elements(order.size());
    std::vector<Step> steps(order.size() - 1);
    for (std::size_t p = 0; p < order.size(); ++p) {
      elements[p] = elements_[order[p]];
      if (p == 0) continue;
      const Step& old = steps_[order[p] - 1];
      std::size_t i = position[old.i];
      std::size_t j = position[old.j];
      steps[p - 1] = {std::max(i, j), std::min(i, j)};
    }
    elements_ = std::move(elements);
    steps_ = std::move(steps);
  }

  std::vector<Run> elements_;
  std::vector<Step> steps_;
  std::uint64_t shifts_ = 0;
  std::uint64_t adds_ = 0;
};

LiftedChain lift_star(const Chain& c) {
  const Chain star = star_assignment(c);
  const auto& a = star.elements();
  LiftBuilder b;
  std::vector<std::size_t> mersenne(a.size());
  mersenne[0] = 0;
  for (std::size_t k = 1; k < a.size(); ++k) {
    const std::uint64_t prev = to_u64(a[k - 1]);
    const std::size_t j = star.step(k).j;
    const std::uint64_t addend = to_u64(a[j]);
    std::size_t idx = mersenne[k - 1];
    for (std::uint64_t t = 0; t < addend; ++t) idx = b.push_double(idx);
    mersenne[k] = b.push_add(idx, mersenne[j], Run{prev + addend, 0});
  }
  return std::move(b).finish(star);
}

LiftedChain lift_general(const Chain& c) {
  const auto& a = c.elements();
  LiftBuilder b;
  std::vector<std::size_t> mersenne(a.size());
  // shifted[i][t - 1] indexes 2^t (2^{a_i} - 1).
  std::vector<std::vector<std::size_t>> shifted(a.size());
  mersenne[0] = 0;
  for (std::size_t k = 1; k < a.size(); ++k) {
    const Step& s = c.step(k);
    const std::uint64_t base = to_u64(a[s.i]);
    const std::uint64_t shift = to_u64(a[s.j]);
    auto& run = shifted[s.i];
    while (run.size() < shift) {
      run.push_back(b.push_double(run.empty() ? mersenne[s.i] : run.back()));
    }
    mersenne[k] = b.push_add(run[shift - 1], mersenne[s.j], Run{base + shift, 0});
  }
  return std::move(b).finish(c);
}

LiftedChain lift_double(const LiftedChain& l) {
  const std::uint64_t a = l.exponent();
  LiftBuilder b(l);
  const std::size_t mersenne = b.last();
  std::size_t idx = mersenne;
  for (std::uint64_t t = 0; t < a; ++t) idx = b.push_double(idx);
  b.push_add(idx, mersenne, Run{2 * a, 0});
  return std::move(b).finish(double_extend(l.source()));
}

LiftedChain lift_increment(const LiftedChain& l) {
  const std::uint64_t a = l.exponent();
  LiftBuilder b(l);
  std::size_t doubled = b.push_double(b.last());
  b.push_add(doubled, 0, Run{a + 1, 0});
  return std::move(b).finish(increment_extend(l.source()));
}

std::uint64_t star_lift_length(const Chain& c) {
  return to_u64(c.target()) - 1 + c.length();
}

void write_lifted(std::ostream& out, const LiftedChain& l, bool with_steps) {
  out << kChainHeader << '\n';
  const auto& e = l.elements();
  for (std::size_t k = 0; k < e.size(); ++k) {
    out << e[k].value();
    if (with_steps && k > 0) out << ' ' << l.step(k).i << ' ' << l.step(k).j;
    out << '\n';
  }
}

}  // namespace achain
