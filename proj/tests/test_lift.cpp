#include "doctest.h"

#include <random>
#include <sstream>

#include "achain/algebra.hpp"
#include "achain/chain_io.hpp"
#include "achain/families.hpp"
#include "achain/lift.hpp"
#include "oracles.hpp"

using namespace achain;

namespace {

// Independent re-check of a lifted chain from its materialised values.
void check_lifted(const LiftedChain& l) {
  const auto values = l.values();
  REQUIRE(values.front() == 1);
  for (std::size_t k = 1; k < values.size(); ++k) {
    REQUIRE(values[k] > values[k - 1]);
    REQUIRE(values[l.step(k).i] + values[l.step(k).j] == values[k]);
  }
  REQUIRE(values.back() == oracle::mersenne(l.exponent()));
  REQUIRE(l.length() == l.shifts_total() + l.adds_total());
}

}  // namespace

TEST_CASE("Run values and ordering") {
  CHECK(Run{3, 2}.value() == 28);
  CHECK(Run{1, 0}.value() == 1);
  CHECK(value_less(Run{2, 0}, Run{1, 2}));  // 3 < 4
  CHECK(value_less(Run{2, 1}, Run{3, 0}));  // 6 < 7
  CHECK_FALSE(value_less(Run{3, 0}, Run{3, 0}));
  for (std::uint64_t a = 1; a < 6; ++a)
    for (std::uint64_t s = 0; s < 6; ++s)
      for (std::uint64_t b = 1; b < 6; ++b)
        for (std::uint64_t t = 0; t < 6; ++t)
          CHECK(value_less(Run{a, s}, Run{b, t}) == (Run{a, s}.value() < Run{b, t}.value()));
}

TEST_CASE("lift_star small cases") {
  LiftedChain l2 = lift_star(validate(to_bigints({1, 2})));
  CHECK(l2.values() == to_bigints({1, 2, 3}));
  CHECK(l2.length() == 2);
  CHECK(verify_lift(l2));

  LiftedChain l3 = lift_star(validate(to_bigints({1, 2, 3})));
  CHECK(l3.values() == to_bigints({1, 2, 3, 6, 7}));
  CHECK(l3.length() == 4);
  CHECK(l3.length() == static_cast<std::size_t>(oracle::brute_force_length(7)));
  CHECK(l3.shifts_total() == 2);
  CHECK(l3.adds_total() == 2);

  LiftedChain trivial = lift_star(Chain{});
  CHECK(trivial.length() == 0);
  CHECK(trivial.exponent() == 1);
}

TEST_CASE("lift_star of x3_chain(1) reaches 2^49 - 1") {
  LiftedChain l = lift_star(x3_chain(1));
  CHECK(l.exponent() == 49);
  CHECK(l.length() == 56);
  CHECK(l.shifts_total() == 48);
  CHECK(l.adds_total() == 8);
  CHECK(l.elements().back().value() == BigInt("562949953421311"));
  check_lifted(l);
}

TEST_CASE("lift_star rejects non-star chains") {
  CHECK_THROWS_AS(lift_star(validate(to_bigints({1, 2, 4, 5, 8, 13}))), NotStarError);
}

TEST_CASE("lift_general agrees with lift_star on star justifications") {
  LiftedChain a = lift_general(validate(to_bigints({1, 2, 3})));
  CHECK(a.length() == 4);
  CHECK(a.values() == lift_star(validate(to_bigints({1, 2, 3}))).values());
}

TEST_CASE("lift_general reuses a shorter shift run of the same base") {
  // 5 = 4 + 1 builds 2 (2^4 - 1); 8 = 4 + 4 extends that run by three.
  Chain c = validate(to_bigints({1, 2, 4, 5, 8, 13}));
  REQUIRE(c.step(4) == Step{2, 2});
  LiftedChain l = lift_general(c);
  CHECK(l.shifts_total() == 12);
  CHECK(l.adds_total() == 5);
  CHECK(l.length() == 17);
  CHECK(l.values() == to_bigints({1, 2, 3, 6, 12, 15, 30, 31, 60, 120, 240, 255, 510, 1020, 2040,
                                  4080, 8160, 8191}));
  check_lifted(l);
}

TEST_CASE("lift_general sorts when an old base's shift run overtakes") {
  // 8 = 4 + 4 starts shifting 2^4 - 1 after 2^7 - 1 = 127 exists, so
  // 30, 60, 120 land below it.
  Chain c = Chain::with_steps(to_bigints({1, 2, 3, 4, 6, 7, 8}),
                              {{0, 0}, {1, 0}, {2, 0}, {2, 2}, {4, 0}, {3, 3}});
  LiftedChain l = lift_general(c);
  CHECK(l.values() == to_bigints({1, 2, 3, 6, 7, 14, 15, 28, 30, 56, 60, 63, 120, 126, 127, 240,
                                  255}));
  check_lifted(l);
  CHECK(verify_lift(l));
}

TEST_CASE("lift_general on the family2 listing justifications") {
  LiftedChain l = lift_general(family2_listing_chain(1, 3));
  CHECK(l.exponent() == 5517);
  CHECK(l.length() == 5532);
  CHECK(l.length() == 5517 - 1 + 16);
  CHECK(verify_lift(l));
}

TEST_CASE("lift_double and lift_increment match the factor method on plain chains") {
  LiftedChain base = lift_star(x3_chain(0));  // 2^26 - 1
  LiftedChain d = lift_double(base);
  Chain expected = product(base.to_chain(), pow2_plus1_chain(26));
  CHECK(d.to_chain() == expected);
  CHECK(d.source().target() == 52);
  CHECK(d.length() == base.length() + 27);

  LiftedChain i = lift_increment(d);
  CHECK(i.to_chain() == increment_extend(double_extend(expected)));
  CHECK(i.exponent() == 53);
  CHECK(i.length() == 61);
}

TEST_CASE("verify_lift negative controls") {
  LiftedChain l = lift_star(x3_chain(1));
  auto values = l.values();
  std::vector<Step> steps(l.steps().begin(), l.steps().end());
  CHECK(verify_mersenne_chain(49, values, steps));

  auto tampered = values;
  tampered[10] -= 1;
  LiftCheck bad = verify_mersenne_chain(49, tampered, steps);
  CHECK_FALSE(bad);
  REQUIRE(bad.failing_index.has_value());
  CHECK((*bad.failing_index == 10 || *bad.failing_index == 11));

  // Correct arithmetic but the wrong Mersenne target.
  LiftCheck wrong_target = verify_mersenne_chain(48, values, steps);
  CHECK_FALSE(wrong_target);
  CHECK(wrong_target.failing_index == values.size() - 1);

  auto runs = l.elements();
  std::vector<Run> run_copy(runs.begin(), runs.end());
  run_copy[5].shift += 1;
  CHECK_FALSE(verify_mersenne_chain(49, run_copy, steps));
}

TEST_CASE("star lift law on random star chains") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    Chain c = validate(to_bigints(oracle::random_star_chain(rng, 4096)));
    REQUIRE(is_star(c));
    LiftedChain l = lift_star(c);
    const auto n = static_cast<std::uint64_t>(c.target());
    CHECK(l.length() == n - 1 + c.length());
    CHECK(l.shifts_total() == n - 1);
    CHECK(l.adds_total() == c.length());
    CHECK(verify_lift(l));
    LiftedChain g = lift_general(star_assignment(c));
    CHECK(g.length() == l.length());
  }
}

TEST_CASE("lift_general length on random chains") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    Chain c = validate(to_bigints(oracle::random_chain(rng, 3000, 16)));
    LiftedChain l = lift_general(c);
    const auto n = static_cast<std::uint64_t>(c.target());
    CHECK(l.length() >= n - 1 + c.length());
    CHECK(l.adds_total() == c.length());
    check_lifted(l);
  }
}

TEST_CASE("write_lifted emits parseable chain-v1") {
  LiftedChain l = lift_star(validate(to_bigints({1, 2, 3, 5})));
  std::ostringstream out;
  write_lifted(out, l);
  std::istringstream in(out.str());
  Chain back = read_chain(in);
  CHECK(back == l.to_chain());
  CHECK(back.target() == 31);
}
