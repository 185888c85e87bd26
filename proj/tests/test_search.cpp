#include "doctest.h"

#include "achain/search.hpp"
#include "oracles.hpp"

using namespace achain;

TEST_CASE("bfs_oracle small values") {
  auto table = bfs_oracle(256);
  const std::vector<int> first{0, 1, 2, 2, 3, 3, 4, 3};
  for (std::size_t n = 1; n <= 8; ++n) CHECK(table[n] == first[n - 1]);
  CHECK(table[23] == 6);
  CHECK(table[191] == 11);
  CHECK(table[0] == -1);
}

TEST_CASE("bfs_oracle agrees with brute force") {
  auto table = bfs_oracle(64);
  for (std::uint64_t n = 1; n <= 64; ++n) CHECK(table[n] == oracle::brute_force_length(n));
}

TEST_CASE("bfs_oracle guards its memory") {
  CHECK_THROWS_AS(bfs_oracle(kOracleLimit + 1), LimitTooLarge);
  CHECK(bfs_oracle(0).size() == 1);
  CHECK(bfs_oracle(1)[1] == 0);
}

TEST_CASE("exact_length") {
  SearchOutcome one = exact_length(1);
  CHECK(one.length == 0);
  CHECK(one.certificate.length() == 0);
  CHECK(one.proven_minimal);

  SearchOutcome o = exact_length(382);
  CHECK(o.length == 11);
  CHECK(o.proven_minimal);
  CHECK(o.certificate.target() == 382);
  CHECK(exact_length(191).length == 11);

  SearchOutcome t = exact_length(1479);
  CHECK(t.length == 14);
  CHECK(t.proven_minimal);
  CHECK(t.certificate.target() == 1479);

  CHECK_THROWS_AS(exact_length(0), DomainError);
}

TEST_CASE("exact_length against brute force and the bound sandwich") {
  for (std::uint64_t n = 1; n <= 80; ++n) {
    SearchOutcome o = exact_length(n);
    CHECK(static_cast<int>(o.length) == oracle::brute_force_length(n));
    CHECK(o.certificate.target() == n);
    CHECK(o.certificate.length() == o.length);
  }
  for (std::uint64_t n = 1; n <= 1024; ++n) {
    SearchOutcome o = exact_length(n);
    CHECK(o.length >= lower_bound(n));
    CHECK(o.length <= lambda(n) + nu(n) - 1);
  }
}

TEST_CASE("minimal_star_length") {
  SearchOutcome seven = minimal_star_length(7);
  CHECK(seven.length == 4);
  CHECK(is_star(seven.certificate));

  SearchOutcome s49 = minimal_star_length(49);
  CHECK(s49.length == 7);
  CHECK(is_star(s49.certificate));

  SearchOutcome s53 = minimal_star_length(53);
  CHECK(s53.length == 8);
  CHECK(s53.proven_minimal);
  CHECK(exact_length(53).length == 8);
}

TEST_CASE("star and unrestricted lengths agree at desk scale") {
  for (std::uint64_t n = 1; n <= 300; ++n) {
    CHECK(minimal_star_length(n).length == exact_length(n).length);
  }
}

TEST_CASE("budget exhaustion reports an upper bound") {
  SearchConfig cfg;
  cfg.max_nodes = 1;
  SearchOutcome o = exact_length(1479, cfg);
  CHECK_FALSE(o.proven_minimal);
  CHECK(o.length == 16);  // binary method: lambda 10 + nu 7 - 1
  CHECK(o.certificate.target() == 1479);
}

TEST_CASE("deterministic mode is independent of worker count") {
  for (std::uint64_t n : {191u, 382u, 1479u, 743u}) {
    SearchConfig one;
    SearchConfig four;
    four.worker_count = 4;
    SearchOutcome a = exact_length(n, one);
    SearchOutcome b = exact_length(n, four);
    CHECK(a.length == b.length);
    CHECK(a.nodes_expanded == b.nodes_expanded);
    CHECK(a.certificate == b.certificate);
  }
}

TEST_CASE("non-deterministic mode still finds the minimal length") {
  SearchConfig cfg;
  cfg.worker_count = 3;
  cfg.deterministic = false;
  for (std::uint64_t n : {191u, 382u, 1479u}) {
    SearchOutcome o = exact_length(n, cfg);
    CHECK(o.proven_minimal);
    CHECK(o.length == exact_length(n).length);
    CHECK(o.certificate.target() == n);
  }
}

TEST_CASE("invalid configs") {
  SearchConfig cfg;
  cfg.max_nodes = 0;
  CHECK_THROWS_AS(exact_length(10, cfg), std::invalid_argument);
  cfg.max_nodes = 10;
  cfg.worker_count = 0;
  CHECK_THROWS_AS(exact_length(10, cfg), std::invalid_argument);
}
