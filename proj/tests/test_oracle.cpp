#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>
#include <vector>

#include "chaincover/oracle.hpp"
#include "chaincover/rm.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace chaincover;
using testutil::vec;

TEST_CASE("covering radius of basic codes") {
  auto f = make_field(2);
  // The full space covers itself.
  auto eye = CodeMatrix::from_rows(f, Level::Base,
                                   {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(exact_covering_radius(eye) == 0);
  // Length-3 repetition code.
  auto rep = CodeMatrix::from_rows(f, Level::Base, {{1, 1, 1}});
  CHECK(exact_covering_radius(rep) == 1);
  // Single-error-correcting [7,4] is perfect.
  CHECK(exact_covering_radius(testutil::hamming74(f)) == 1);
  // The reference [8,4] code.
  auto rm13 = CodeMatrix::from_rows(f, Level::Base, testutil::rm13_rows());
  CHECK(exact_covering_radius(rm13) == 2);
}

TEST_CASE("covering radius over GF(3)") {
  auto f = make_field(3);
  auto rep = CodeMatrix::from_rows(f, Level::Base, {{1, 1}});
  CHECK(exact_covering_radius(rep) == 1);
  CHECK(exact_covering_radius(chained_rm(3, 1, 2)->gamma) == 5);
  CHECK(exact_generalized_radius(chained_rm(3, 1, 2)->gamma, 2) == 6);
}

TEST_CASE("generalized radius grows as computed") {
  auto f = make_field(2);
  auto rm13 = CodeMatrix::from_rows(f, Level::Base, testutil::rm13_rows());
  CHECK(exact_generalized_radius(rm13, 1) == 2);
  CHECK(exact_generalized_radius(rm13, 2) == 3);
  CHECK(exact_generalized_radius(rm13, 3) == 4);
  CHECK(exact_generalized_radius(rm13, 4) == 4);  // saturated at n - k

  auto ham = testutil::hamming74(f);
  CHECK(exact_generalized_radius(ham, 1) == 1);
  CHECK(exact_generalized_radius(ham, 2) == 2);
  CHECK(exact_generalized_radius(ham, 3) == 3);
}

TEST_CASE("generalized radius input validation") {
  auto f = make_field(2);
  auto rm13 = CodeMatrix::from_rows(f, Level::Base, testutil::rm13_rows());
  CHECK_THROWS_AS(exact_generalized_radius(rm13, 0), std::invalid_argument);
  // State budget: (3^3)^6 syndromes is out of reach.
  CHECK_THROWS_AS(exact_generalized_radius(chained_rm(3, 1, 2)->gamma, 3),
                  std::invalid_argument);
  // 2^25 syndromes for t = 1 already exceeds the budget.
  std::vector<std::vector<std::uint32_t>> one_row(
      1, std::vector<std::uint32_t>(26, 1));
  auto wide = CodeMatrix::from_rows(f, Level::Base, one_row);
  CHECK_THROWS_AS(exact_covering_radius(wide), std::invalid_argument);
}

TEST_CASE("weight hierarchy of the reference codes") {
  auto f = make_field(2);
  CHECK(exact_ghw_all(testutil::hamming74(f)) == std::vector<int>{3, 5, 6, 7});
  auto rm13 = CodeMatrix::from_rows(f, Level::Base, testutil::rm13_rows());
  CHECK(exact_ghw_all(rm13) == std::vector<int>{4, 6, 7, 8});
  CHECK(exact_ghw(rm13, 1) == 4);
  CHECK(exact_ghw(rm13, 4) == 8);
  CHECK_THROWS_AS(exact_ghw(rm13, 0), std::invalid_argument);
  CHECK_THROWS_AS(exact_ghw(rm13, 5), std::invalid_argument);
}

TEST_CASE("weight hierarchy is strictly increasing and ends at n") {
  for (auto [q, r, m] : {std::tuple{2u, 2, 3}, {3u, 1, 2}, {3u, 2, 2}}) {
    auto d = exact_ghw_all(chained_rm(q, r, m)->gamma);
    for (std::size_t i = 1; i < d.size(); ++i) CHECK(d[i] > d[i - 1]);
    long long n = 1;
    for (int i = 0; i < m; ++i) n *= q;
    CHECK(d.back() == n);
  }
}

TEST_CASE("weight hierarchy depends only on the row space") {
  auto a = exact_ghw_all(rm_generator_blocks(2, 2, 3));
  auto b = exact_ghw_all(chained_rm(2, 2, 3)->gamma);
  CHECK(a == b);
}

TEST_CASE("weight hierarchy length budget") {
  auto f = make_field(2);
  std::vector<std::vector<std::uint32_t>> one_row(
      1, std::vector<std::uint32_t>(25, 1));
  auto wide = CodeMatrix::from_rows(f, Level::Base, one_row);
  CHECK_THROWS_AS(exact_ghw_all(wide), std::invalid_argument);
}

TEST_CASE("nearest codeword on the reference code") {
  auto f = make_field(2);
  auto rm13 = CodeMatrix::from_rows(f, Level::Base, testutil::rm13_rows());

  // A codeword is its own nearest neighbour.
  auto member = vec(f, {0, 0, 1, 1, 1, 1, 0, 0});  // row2 + row3
  auto r = exact_nearest(rm13, member);
  CHECK(r.distance == 0);
  CHECK(r.codeword == member);

  // The worked target sits at distance 1.
  auto v0 = vec(f, testutil::v0_codes());
  r = exact_nearest(rm13, v0);
  CHECK(r.distance == 1);
  CHECK(r.codeword == vec(f, {1, 0, 0, 1, 1, 0, 0, 1}));
  CHECK(hamming_distance(r.codeword, v0) == 1);
  CHECK(in_row_space(rm13, r.codeword));
}

TEST_CASE("nearest codeword tie-break picks the first message in order") {
  // In the even-weight [4,3] code every weight-1 target has several
  // codewords at distance 1; the scan keeps the all-zero message.
  auto ch = chained_rm(2, 1, 2);
  auto f = ch->gamma.field();
  auto r = exact_nearest(ch->gamma, vec(f, {1, 0, 0, 0}));
  CHECK(r.distance == 1);
  CHECK(r.codeword == vec(f, {0, 0, 0, 0}));
}

TEST_CASE("nearest codeword over GF(3) and budget check") {
  auto f = make_field(3);
  auto rep = CodeMatrix::from_rows(f, Level::Base, {{1, 1}});
  auto r = exact_nearest(rep, vec(f, {0, 1}));
  CHECK(r.distance == 1);
  CHECK(r.codeword == vec(f, {0, 0}));

  auto f2 = make_field(2);
  std::vector<std::vector<std::uint32_t>> rows(
      25, std::vector<std::uint32_t>(25, 0));
  for (int i = 0; i < 25; ++i)
    rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  auto eye25 = CodeMatrix::from_rows(f2, Level::Base, rows);
  CHECK_THROWS_AS(
      exact_nearest(eye25, FVector(f2, Level::Base,
                                   std::vector<std::uint32_t>(25, 0))),
      std::invalid_argument);
}

TEST_CASE("length mismatch is rejected") {
  auto f = make_field(2);
  auto rm13 = CodeMatrix::from_rows(f, Level::Base, testutil::rm13_rows());
  CHECK_THROWS_AS(exact_nearest(rm13, vec(f, {1, 0})), std::invalid_argument);
}
