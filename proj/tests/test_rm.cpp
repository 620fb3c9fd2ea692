#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>
#include <utility>
#include <vector>

#include "chaincover/io.hpp"
#include "chaincover/oracle.hpp"
#include "chaincover/rm.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace chaincover;

TEST_CASE("rho counts monomials of the binary code") {
  CHECK(rho(0, 3) == 1);
  CHECK(rho(1, 3) == 4);
  CHECK(rho(2, 4) == 11);
  CHECK(rho(4, 4) == 16);
  CHECK(rho(7, 4) == 16);  // i > m contributes nothing
  CHECK(rho(1, 0) == 1);
  CHECK(rho(0, 0) == 1);
  CHECK_THROWS_AS(rho(-1, 3), std::invalid_argument);
  CHECK_THROWS_AS(rho(1, -1), std::invalid_argument);
  CHECK(rho(3, 62) == 1 + 62 + 62LL * 61 / 2 + 62LL * 61 * 60 / 6);
}

TEST_CASE("canonical representation greedy decomposition") {
  auto rep = canonical_rep(5, 2, 3);
  CHECK(rep.pairs == std::vector<std::pair<int, int>>{{1, 2}, {1, 1}});

  rep = canonical_rep(7, 2, 5);
  CHECK(rep.pairs ==
        std::vector<std::pair<int, int>>{{1, 4}, {0, 2}, {0, 1}});

  // Negative slack: the second pair drops below the first diagonal.
  rep = canonical_rep(3, 2, 2);
  CHECK(rep.pairs == std::vector<std::pair<int, int>>{{1, 1}, {1, 0}});

  // Endpoints.
  CHECK(canonical_rep(1, 2, 4).pairs ==
        std::vector<std::pair<int, int>>{{0, 2}});
  CHECK(canonical_rep(rho(2, 4), 2, 4).pairs ==
        std::vector<std::pair<int, int>>{{2, 4}});

  // The decomposition reproduces t.
  for (long long t = 1; t <= rho(2, 5); ++t) {
    auto r = canonical_rep(t, 2, 5);
    long long sum = 0;
    int prev_r = 1 << 20;
    for (std::size_t i = 0; i < r.pairs.size(); ++i) {
      auto [ri, mi] = r.pairs[i];
      CHECK(ri <= prev_r);
      CHECK(mi - ri == 5 - 2 - static_cast<int>(i));
      sum += rho(ri, mi);
      prev_r = ri;
    }
    CHECK(sum == t);
  }

  CHECK_THROWS_AS(canonical_rep(0, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(canonical_rep(8, 2, 3), std::invalid_argument);  // > rho
  CHECK_THROWS_AS(canonical_rep(1, 4, 3), std::invalid_argument);  // r > m
}

TEST_CASE("closed-form weights match the chained d-sequence") {
  CHECK(ghw_binary(1, 1, 3) == 4);
  CHECK(ghw_binary(2, 1, 3) == 6);
  CHECK(ghw_binary(3, 1, 3) == 7);
  CHECK(ghw_binary(4, 1, 3) == 8);
  for (auto [r, m] : {std::pair{1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}}) {
    auto d = ghw_rm(2, r, m);
    REQUIRE(static_cast<long long>(d.size()) == rho(r, m));
    for (std::size_t i = 0; i < d.size(); ++i)
      CHECK(ghw_binary(static_cast<long long>(i + 1), r, m) == d[i]);
  }
}

TEST_CASE("parameters clip the order and build the point field") {
  RMParams p(2, 9, 3);
  CHECK(p.r == 3);
  CHECK(p.n == 8);
  CHECK(p.field->base_order() == 2);
  RMParams p9(9, 5, 2);
  CHECK(p9.r == 5);  // (q-1)m = 16, no clipping
  CHECK(p9.n == 81);
  CHECK_THROWS_AS(RMParams(6, 1, 2), std::invalid_argument);  // not a prime power
  CHECK_THROWS_AS(RMParams(2, 1, 30), std::invalid_argument);  // q^m too large
  CHECK_THROWS_AS(RMParams(2, -1, 3), std::invalid_argument);
}

TEST_CASE("dimension agrees with rho for q = 2 and with the d-sequence") {
  CHECK(RMParams(2, 2, 4).dimension() == rho(2, 4));
  CHECK(RMParams(2, 1, 3).dimension() == 4);
  CHECK(RMParams(3, 2, 2).dimension() == 6);
  CHECK(RMParams(4, 1, 1).dimension() == 2);
  for (auto [q, r, m] :
       {std::tuple{2u, 2, 4}, {3u, 1, 2}, {3u, 2, 2}, {4u, 1, 2}}) {
    CHECK(RMParams(q, r, m).dimension() ==
          static_cast<long long>(ghw_rm(q, r, m).size()));
  }
}

TEST_CASE("chained generator golden bytes for the reference code") {
  auto ch = chained_rm(2, 1, 3);
  CHECK(chained_to_text(*ch) ==
        "q=2 t=1 n=8 k=4\n"
        "1 1 1 1 0 0 0 0\n"
        "1 1 0 0 1 1 0 0\n"
        "1 0 1 0 1 0 1 0\n"
        "1 1 1 1 1 1 1 1\n"
        "d= 4 6 7 8\n"
        "perm= 1 2 3 4 5 6 7 8\n");
}

TEST_CASE("small chained generators are exactly as expected") {
  auto f = make_field(2);
  auto ch11 = chained_rm(2, 1, 1);
  CHECK(ch11->gamma ==
        CodeMatrix::from_rows(f, Level::Base, {{1, 0}, {1, 1}}));
  CHECK(ch11->d == std::vector<int>{1, 2});

  auto f3 = make_field(3);
  auto ch3 = chained_rm(3, 1, 2);
  CHECK(ch3->gamma == CodeMatrix::from_rows(f3, Level::Base,
                                            {{2, 2, 2, 1, 1, 1, 0, 0, 0},
                                             {2, 1, 0, 2, 1, 0, 2, 1, 0},
                                             {1, 1, 1, 1, 1, 1, 1, 1, 1}}));
  CHECK(ch3->d == std::vector<int>{6, 8, 9});

  auto f4 = make_field(2, 2);
  auto ch4 = chained_rm(4, 1, 1);
  CHECK(ch4->gamma ==
        CodeMatrix::from_rows(f4, Level::Base, {{3, 2, 1, 0}, {1, 1, 1, 1}}));
  CHECK(ch4->d == std::vector<int>{3, 4});
}

TEST_CASE("every constructed chain validates") {
  for (auto [q, r, m] : {std::tuple{2u, 1, 4}, {2u, 2, 4}, {2u, 3, 4},
                         {3u, 1, 2}, {3u, 2, 2}, {3u, 3, 2}, {4u, 1, 2},
                         {4u, 2, 2}, {5u, 1, 1}, {9u, 1, 1}}) {
    auto ch = chained_rm(q, r, m);
    auto v = validate_chained(*ch);
    CHECK(v.ok);
    CHECK(ghw_rm(q, r, m) == ch->d);
  }
}

TEST_CASE("memoization returns the same instance, clipping included") {
  CHECK(chained_rm(2, 2, 3).get() == chained_rm(2, 2, 3).get());
  CHECK(chained_rm(2, 9, 3).get() == chained_rm(2, 3, 3).get());
  CHECK(ghw_rm(2, 9, 3) == ghw_rm(2, 3, 3));
}

TEST_CASE("chained and block generators span the same code") {
  for (auto [q, r, m] : {std::tuple{2u, 2, 4}, {3u, 2, 2}, {4u, 1, 2}}) {
    auto blocks = rm_generator_blocks(q, r, m);
    auto ch = chained_rm(q, r, m);
    auto [ra, rank_a] = row_reduce(blocks);
    auto [rb, rank_b] = row_reduce(ch->gamma);
    CHECK(rank_a == blocks.rows());
    CHECK(rank_a == rank_b);
    CHECK(ra == rb);
    CHECK(blocks.rows() == static_cast<int>(RMParams(q, r, m).dimension()));
  }
}

TEST_CASE("full-order code is the whole space") {
  auto d = ghw_rm(2, 3, 3);
  REQUIRE(d.size() == 8);
  for (int i = 0; i < 8; ++i) CHECK(d[static_cast<std::size_t>(i)] == i + 1);
  CHECK(ghw_rm(3, 4, 1) == std::vector<int>{1, 2, 3});
}

TEST_CASE("order-zero code is the repetition code") {
  auto ch = chained_rm(3, 0, 2);
  CHECK(ch->gamma.rows() == 1);
  CHECK(ch->d == std::vector<int>{9});
  CHECK(ghw_rm(2, 0, 4) == std::vector<int>{16});
}

TEST_CASE("d-sequences are strictly increasing and end at n") {
  for (auto [q, r, m] :
       {std::tuple{2u, 2, 5}, {2u, 3, 5}, {3u, 2, 3}, {5u, 2, 2}}) {
    auto d = ghw_rm(q, r, m);
    long long n = 1;
    for (int i = 0; i < m; ++i) n *= q;
    CHECK(d.back() == n);
    for (std::size_t i = 1; i < d.size(); ++i) CHECK(d[i] > d[i - 1]);
  }
}

TEST_CASE("exact weights confirm the recursion on small codes") {
  for (auto [q, r, m] : {std::tuple{2u, 1, 3}, {2u, 2, 3}, {3u, 1, 2}}) {
    auto ch = chained_rm(q, r, m);
    CHECK(exact_ghw_all(ch->gamma) == ghw_rm(q, r, m));
  }
}
