#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace chaincover {

// One Reed-Muller parameter point of a sweep grid.
struct SweepPoint {
  std::uint32_t q;
  int r;
  int m;
};

// CSV with header "q,r,m,t,n,k,mu_t": one row per grid point and t = 1..t_max
// carrying the chained-generator support bound mu_t.  The echoed r is the
// effective (clipped) order.  Grid points may be evaluated concurrently when
// jobs > 1; fragments are assembled in grid order, so equal inputs always
// produce byte-identical output.
std::string sweep_mu(std::span<const SweepPoint> points, int t_max,
                     int jobs = 1);

// CSV with header "q,r,m,t,n,k,mu_t,R_t,ratio": sweep_mu plus the exact
// generalized covering radius and the ratio mu_t / R_t with four decimals
// (0/0 prints 1.0000).  Oracle budgets apply to every (point, t).
std::string sweep_exact(std::span<const SweepPoint> points, int t_max,
                        int jobs = 1);

struct TimingRow {
  long long n;
  long long median_ns;  // per single cover run
};

struct TimingResult {
  std::vector<TimingRow> rows;
  double slope = 0.0;  // least-squares slope of log median_ns vs log n
};

// Times one covering algorithm on binary Reed-Muller inputs of length 2^m
// for m = m_lo..m_hi.  algo "cover" sweeps the chained generator of order r
// with cover_t; algo "cover-rm" runs the recursive cover at order r.  Each
// row is the median over 9 repetitions of a batch of roughly 2^20 / (n*t)
// runs on inputs drawn from the seeded generator; a warm-up run precedes
// timing so one-time construction (cached generators, field tables) stays
// out of the measurement.
TimingResult timing_scan(int m_lo, int m_hi, int t, const std::string& algo,
                         int r, std::uint64_t seed);

// CSV with header "n,median_ns".  The fitted slope travels in TimingResult
// only; timing output is inherently machine-dependent, so unlike the sweeps
// it is not byte-reproducible.
std::string timing_csv(const TimingResult& result);

}  // namespace chaincover
