#include "doctest.h"

#include "achain/families.hpp"
#include "achain/lift.hpp"
#include "oracles.hpp"

using namespace achain;

TEST_CASE("UFamily pivot identity") {
  CHECK(UFamily{0}.u() == 30);  // only m >= 1 gives odd U_m
  for (std::uint64_t m = 1; m < 20; ++m) {
    UFamily u{m};
    CHECK(u.u() % 2 == 1);
    CHECK(u.x() + 3 == (UFamily{m + 1}.u() - 1) / 2);
  }
  CHECK(UFamily{6}.u() == 1479);
}

TEST_CASE("x3_chain") {
  CHECK(x3_chain(0).elements() == to_bigints({1, 2, 3, 5, 10, 20, 23, 26}));
  CHECK(x3_chain(0).length() == 7);
  CHECK(x3_chain(1).elements() == to_bigints({1, 2, 3, 5, 10, 20, 23, 46, 49}));
  CHECK(x3_chain(5).target() == 739);
  CHECK(x3_chain(5).length() == 12);
  for (std::uint64_t m = 0; m <= 12; ++m) {
    Chain c = x3_chain(m);
    CHECK(c.length() == m + 7);
    CHECK(is_star(c));
    CHECK(c.target() == UFamily{m}.x() + 3);
    if (m >= 1) CHECK(x3_chain(m - 1).target() == (UFamily{m}.u() - 1) / 2);
  }
}

TEST_CASE("u_chain") {
  CHECK(u_chain(1).elements() == to_bigints({1, 2, 3, 5, 7, 10, 20, 23, 46, 53}));
  CHECK(u_chain(1).length() == 9);
  CHECK(u_chain(3).target() == 191);
  CHECK(u_chain(3).length() == 11);
  CHECK(u_chain(6).target() == 1479);
  CHECK(u_chain(6).length() == 14);
  for (std::uint64_t m = 1; m <= 12; ++m) {
    Chain c = u_chain(m);
    CHECK(c.length() == m + 8);
    CHECK(is_star(c));
    CHECK(c.target() == UFamily{m}.u());
  }
  CHECK_THROWS_AS(u_chain(0), DomainError);
}

TEST_CASE("u_mersenne_chain") {
  LiftedChain l1 = u_mersenne_chain(1);
  CHECK(l1.exponent() == 53);
  CHECK(l1.length() == 61);
  CHECK(l1.elements().back().value() == oracle::mersenne(53));

  CHECK(u_mersenne_chain(2).length() == 108);
  LiftedChain l6 = u_mersenne_chain(6);
  CHECK(l6.exponent() == 1479);
  CHECK(l6.length() == 1492);
  CHECK(l6.length() == 1479 + 14 - 1);
  CHECK(verify_lift(l6));
  CHECK(l6.source().length() == 14);
  CHECK_THROWS_AS(u_mersenne_chain(0), DomainError);
}

TEST_CASE("family2_n") {
  CHECK(family2_n(1, 3) == 5517);
  CHECK(family2_n(1, 4) == 11021);
  CHECK(family2_n(2, 3) == 21273);
  CHECK_THROWS_AS(family2_n(0, 3), DomainError);
  CHECK_THROWS_AS(family2_n(1, 2), DomainError);
  for (std::uint64_t m = 1; m <= 6; ++m) {
    for (std::uint64_t k = 3; k <= 8; ++k) {
      Family2 f = Family2::make(m, k);
      CHECK(f.n() == (f.alpha() << (m + k + 3)) + f.beta());
      CHECK(nu(f.n()) == 7);
      CHECK(lambda(f.n()) == 2 * m + k + 7);
    }
  }
}

TEST_CASE("family2_chain") {
  Chain c = family2_chain(1, 3);
  CHECK(c.elements() == to_bigints({1, 2, 4, 8, 9, 13, 17, 34, 43, 86, 172, 344, 688, 1376, 2752,
                                    5504, 5517}));
  CHECK(c.length() == 16);
  CHECK(stats(c).small_steps == 4);
  CHECK(is_star(c));
  CHECK(family2_chain(2, 3).length() == 18);
  for (std::uint64_t m = 1; m <= 3; ++m) {
    for (std::uint64_t k = 3; k <= 5; ++k) {
      Chain f = family2_chain(m, k);
      CHECK(f.length() == 2 * m + k + 11);
      CHECK(f.length() == lambda(f.target()) + 4);
      CHECK(stats(f).star);
      Chain listing = family2_listing_chain(m, k);
      CHECK(listing.elements() == f.elements());
      CHECK(listing.steps().size() == f.steps().size());
      CHECK(listing.steps()[0] == f.steps()[0]);
    }
  }
  CHECK_THROWS_AS(family2_chain(1, 2), DomainError);
}

TEST_CASE("family2 listing justifications differ from star only at 2^{m+3} + 1") {
  Chain star = family2_chain(1, 3);
  Chain listing = family2_listing_chain(1, 3);
  std::size_t differing = 0;
  for (std::size_t k = 1; k <= star.length(); ++k) {
    if (!(star.step(k) == listing.step(k))) {
      ++differing;
      CHECK(star[k] == 17);
      CHECK(listing.step(k) == Step{4, 3});  // 9 + 8
    }
  }
  CHECK(differing == 1);
}

TEST_CASE("family2_mersenne_chain small instances") {
  LiftedChain l = family2_mersenne_chain(1, 3);
  CHECK(l.length() == 5532);
  CHECK(l.exponent() == 5517);
  CHECK(l.length() == lift_star(family2_chain(1, 3)).length());

  CHECK(family2_mersenne_chain(1, 4).length() == 11037);
  CHECK(family2_mersenne_chain(2, 3).length() == 21290);
}

TEST_CASE("family matching") {
  CHECK(match_u_family(1479) == std::optional<std::uint64_t>{6});
  CHECK(match_u_family(53) == std::optional<std::uint64_t>{1});
  CHECK_FALSE(match_u_family(54).has_value());
  CHECK_FALSE(match_u_family(7).has_value());
  auto f = match_family2(5517);
  REQUIRE(f.has_value());
  CHECK(f->m == 1);
  CHECK(f->k == 3);
  auto g = match_family2(family2_n(3, 7));
  REQUIRE(g.has_value());
  CHECK(g->m == 3);
  CHECK(g->k == 7);
  CHECK_FALSE(match_family2(5519).has_value());
  CHECK_FALSE(match_family2(127).has_value());
}
