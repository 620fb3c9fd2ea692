#include "chaincover/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <future>
#include <random>
#include <stdexcept>

#include "chaincover/chain.hpp"
#include "chaincover/cover.hpp"
#include "chaincover/oracle.hpp"
#include "chaincover/rm.hpp"

namespace chaincover {

namespace {

std::string point_rows(SweepPoint pt, int t_max, bool exact) {
  RMParams params(pt.q, pt.r, pt.m);
  const std::vector<int> d = ghw_rm(pt.q, pt.r, pt.m);
  const int n = params.n;
  const int k = static_cast<int>(d.size());
  std::string out;
  char buf[192];
  for (int t = 1; t <= t_max; ++t) {
    const long mu = mu_from_d(d, n, pt.q, t);
    if (!exact) {
      std::snprintf(buf, sizeof buf, "%u,%d,%d,%d,%d,%d,%ld\n", pt.q, params.r,
                    pt.m, t, n, k, mu);
      out += buf;
      continue;
    }
    auto ch = chained_rm(pt.q, pt.r, pt.m);
    const int radius = exact_generalized_radius(ch->gamma, t);
    char ratio[32];
    if (radius == 0) {
      if (mu != 0) throw std::logic_error("zero radius with nonzero bound");
      std::snprintf(ratio, sizeof ratio, "1.0000");
    } else {
      std::snprintf(ratio, sizeof ratio, "%.4f",
                    static_cast<double>(mu) / radius);
    }
    std::snprintf(buf, sizeof buf, "%u,%d,%d,%d,%d,%d,%ld,%d,%s\n", pt.q,
                  params.r, pt.m, t, n, k, mu, radius, ratio);
    out += buf;
  }
  return out;
}

std::string run_sweep(std::span<const SweepPoint> points, int t_max, int jobs,
                      bool exact) {
  if (t_max < 1) throw std::invalid_argument("t_max must be >= 1");
  if (jobs < 1) jobs = 1;
  std::vector<std::string> frags(points.size());
  if (jobs == 1 || points.size() <= 1) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      frags[i] = point_rows(points[i], t_max, exact);
    }
  } else {
    std::size_t next = 0;
    while (next < points.size()) {
      const std::size_t batch =
          std::min<std::size_t>(static_cast<std::size_t>(jobs),
                                points.size() - next);
      std::vector<std::future<std::string>> futures;
      futures.reserve(batch);
      for (std::size_t b = 0; b < batch; ++b) {
        futures.push_back(std::async(std::launch::async, point_rows,
                                     points[next + b], t_max, exact));
      }
      for (std::size_t b = 0; b < batch; ++b) {
        frags[next + b] = futures[b].get();
      }
      next += batch;
    }
  }
  std::string csv =
      exact ? "q,r,m,t,n,k,mu_t,R_t,ratio\n" : "q,r,m,t,n,k,mu_t\n";
  for (const std::string& f : frags) csv += f;
  return csv;
}

volatile long timing_sink = 0;

}  // namespace

std::string sweep_mu(std::span<const SweepPoint> points, int t_max, int jobs) {
  return run_sweep(points, t_max, jobs, false);
}

std::string sweep_exact(std::span<const SweepPoint> points, int t_max,
                        int jobs) {
  return run_sweep(points, t_max, jobs, true);
}

TimingResult timing_scan(int m_lo, int m_hi, int t, const std::string& algo,
                         int r, std::uint64_t seed) {
  if (m_lo < 1 || m_hi < m_lo) {
    throw std::invalid_argument("variable range must satisfy 1 <= lo <= hi");
  }
  if (t < 1) throw std::invalid_argument("extension degree must be >= 1");
  if (r < 0) throw std::invalid_argument("order must be >= 0");
  bool recursive;
  if (algo == "cover") {
    recursive = false;
  } else if (algo == "cover-rm") {
    recursive = true;
  } else {
    throw std::invalid_argument("unknown algorithm '" + algo +
                                "' (expected cover or cover-rm)");
  }

  std::mt19937_64 rng(seed);
  const FieldHandle f = make_field(2);
  TimingResult res;
  for (int m = m_lo; m <= m_hi; ++m) {
    const long long n = 1LL << m;
    std::shared_ptr<const ChainedMatrix> ch;
    if (!recursive) ch = chained_rm(2, r, m);
    const long long batch = std::max(1LL, (1LL << 20) / (n * t));

    std::vector<std::vector<FVector>> inputs;
    inputs.reserve(static_cast<std::size_t>(batch));
    for (long long b = 0; b < batch; ++b) {
      std::vector<FVector> vs;
      vs.reserve(static_cast<std::size_t>(t));
      for (int i = 0; i < t; ++i) {
        std::vector<std::uint32_t> codes(static_cast<std::size_t>(n));
        for (auto& c : codes) c = static_cast<std::uint32_t>(rng() % 2);
        vs.emplace_back(f, Level::Base, std::move(codes));
      }
      inputs.push_back(std::move(vs));
    }

    auto run_one = [&](const std::vector<FVector>& vs) {
      const CoverResult out =
          recursive ? cover_recursive_rm(r, m, vs) : cover_t(*ch, vs);
      timing_sink = timing_sink + static_cast<long>(out.support.size());
    };
    run_one(inputs[0]);  // warm-up: caches, tables, allocator

    std::vector<long long> reps;
    reps.reserve(9);
    for (int rep = 0; rep < 9; ++rep) {
      const auto t0 = std::chrono::steady_clock::now();
      for (long long b = 0; b < batch; ++b) {
        run_one(inputs[static_cast<std::size_t>(b)]);
      }
      const auto t1 = std::chrono::steady_clock::now();
      const long long ns =
          std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0)
              .count();
      reps.push_back(ns / batch);
    }
    std::nth_element(reps.begin(), reps.begin() + 4, reps.end());
    res.rows.push_back(TimingRow{n, std::max(1LL, reps[4])});
  }

  const std::size_t count = res.rows.size();
  if (count >= 2) {
    double xbar = 0, ybar = 0;
    std::vector<double> xs(count), ys(count);
    for (std::size_t i = 0; i < count; ++i) {
      xs[i] = std::log(static_cast<double>(res.rows[i].n));
      ys[i] = std::log(static_cast<double>(res.rows[i].median_ns));
      xbar += xs[i];
      ybar += ys[i];
    }
    xbar /= static_cast<double>(count);
    ybar /= static_cast<double>(count);
    double num = 0, den = 0;
    for (std::size_t i = 0; i < count; ++i) {
      num += (xs[i] - xbar) * (ys[i] - ybar);
      den += (xs[i] - xbar) * (xs[i] - xbar);
    }
    res.slope = den > 0 ? num / den : 0.0;
  }
  return res;
}

std::string timing_csv(const TimingResult& result) {
  std::string csv = "n,median_ns\n";
  char buf[64];
  for (const TimingRow& row : result.rows) {
    std::snprintf(buf, sizeof buf, "%lld,%lld\n", row.n, row.median_ns);
    csv += buf;
  }
  return csv;
}

}  // namespace chaincover
