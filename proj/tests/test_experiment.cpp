#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "chaincover/experiment.hpp"
#include "doctest.h"

using namespace chaincover;

namespace {

// Splits CSV text into lines (dropping the trailing newline).
std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("bound sweep golden output") {
  std::vector<SweepPoint> grid{{2, 1, 3}};
  CHECK(sweep_mu(grid, 2) ==
        "q,r,m,t,n,k,mu_t\n"
        "2,1,3,1,8,4,3\n"
        "2,1,3,2,8,4,4\n");
}

TEST_CASE("bound sweep covers the grid in order") {
  std::vector<SweepPoint> grid{{2, 1, 4}, {2, 2, 3}, {3, 1, 2}};
  auto csv = sweep_mu(grid, 2);
  auto ls = lines_of(csv);
  REQUIRE(ls.size() == 7);
  CHECK(ls[0] == "q,r,m,t,n,k,mu_t");
  CHECK(ls[1] == "2,1,4,1,16,5,7");
  CHECK(ls[2] == "2,1,4,2,16,5,10");
  CHECK(ls[3] == "2,2,3,1,8,7,1");
  CHECK(ls[4] == "2,2,3,2,8,7,1");
  CHECK(ls[5] == "3,1,2,1,9,3,5");
  CHECK(ls[6] == "3,1,2,2,9,3,6");
}

TEST_CASE("bound sweep echoes the clipped order") {
  std::vector<SweepPoint> grid{{2, 9, 3}};
  CHECK(sweep_mu(grid, 1) == "q,r,m,t,n,k,mu_t\n2,3,3,1,8,8,0\n");
}

TEST_CASE("sweeps are deterministic across job counts") {
  std::vector<SweepPoint> grid{{2, 1, 3}, {2, 2, 3}, {2, 1, 4},
                               {2, 2, 4}, {3, 1, 2}, {3, 2, 2}};
  auto solo = sweep_mu(grid, 3, 1);
  CHECK(sweep_mu(grid, 3, 2) == solo);
  CHECK(sweep_mu(grid, 3, 8) == solo);
}

TEST_CASE("exact sweep golden output") {
  std::vector<SweepPoint> grid{{2, 1, 3}, {2, 1, 2}};
  CHECK(sweep_exact(grid, 2) ==
        "q,r,m,t,n,k,mu_t,R_t,ratio\n"
        "2,1,3,1,8,4,3,2,1.5000\n"
        "2,1,3,2,8,4,4,3,1.3333\n"
        "2,1,2,1,4,3,1,1,1.0000\n"
        "2,1,2,2,4,3,1,1,1.0000\n");
}

TEST_CASE("exact sweep ratios never drop below one") {
  std::vector<SweepPoint> grid{{2, 1, 3}, {2, 2, 3}, {3, 1, 2}};
  auto ls = lines_of(sweep_exact(grid, 2, 2));
  REQUIRE(ls.size() == 7);
  for (std::size_t i = 1; i < ls.size(); ++i) {
    auto pos = ls[i].rfind(',');
    double ratio = std::stod(ls[i].substr(pos + 1));
    CHECK(ratio >= 1.0);
  }
  // Determinism including the exact column.
  CHECK(sweep_exact(grid, 2, 2) == sweep_exact(grid, 2, 1));
}

TEST_CASE("full-space rows report a zero bound and zero radius") {
  std::vector<SweepPoint> grid{{2, 3, 3}};
  CHECK(sweep_exact(grid, 1) ==
        "q,r,m,t,n,k,mu_t,R_t,ratio\n"
        "2,3,3,1,8,8,0,0,1.0000\n");
}

TEST_CASE("sweep input validation") {
  std::vector<SweepPoint> grid{{2, 1, 3}};
  CHECK_THROWS_AS(sweep_mu(grid, 0), std::invalid_argument);
  std::vector<SweepPoint> bad{{6, 1, 2}};
  CHECK_THROWS_AS(sweep_mu(bad, 1), std::invalid_argument);
  // Exact sweeps refuse points beyond the oracle budget.
  std::vector<SweepPoint> big{{2, 1, 5}};
  CHECK_THROWS_AS(sweep_exact(big, 2), std::invalid_argument);
}

TEST_CASE("timing scan shape and slope") {
  auto res = timing_scan(4, 6, 1, "cover", 1, 12345);
  REQUIRE(res.rows.size() == 3);
  CHECK(res.rows[0].n == 16);
  CHECK(res.rows[1].n == 32);
  CHECK(res.rows[2].n == 64);
  for (const auto& row : res.rows) CHECK(row.median_ns > 0);
  // Near-linear growth: the fitted exponent stays in a generous band.
  CHECK(res.slope > -1.0);
  CHECK(res.slope < 3.0);

  auto csv = timing_csv(res);
  auto ls = lines_of(csv);
  REQUIRE(ls.size() == 4);
  CHECK(ls[0] == "n,median_ns");
  CHECK(ls[1].substr(0, 3) == "16,");
}

TEST_CASE("timing scan runs the recursive algorithm") {
  auto res = timing_scan(4, 5, 2, "cover-rm", 2, 777);
  REQUIRE(res.rows.size() == 2);
  for (const auto& row : res.rows) CHECK(row.median_ns > 0);
}

TEST_CASE("timing scan input validation") {
  CHECK_THROWS_AS(timing_scan(0, 4, 1, "cover", 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(timing_scan(5, 4, 1, "cover", 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(timing_scan(4, 5, 0, "cover", 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(timing_scan(4, 5, 1, "nope", 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(timing_scan(4, 5, 1, "cover", -1, 1), std::invalid_argument);
}
