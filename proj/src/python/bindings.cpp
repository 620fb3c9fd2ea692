#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "chaincover/chain.hpp"
#include "chaincover/cover.hpp"
#include "chaincover/experiment.hpp"
#include "chaincover/linalg.hpp"
#include "chaincover/oracle.hpp"
#include "chaincover/rm.hpp"

namespace py = pybind11;
using namespace chaincover;

namespace {

// Factors a prime power q = p^e; rejects other alphabet sizes.
FieldHandle field_from_q(std::uint32_t q) {
  if (q < 2) throw std::invalid_argument("alphabet size must be >= 2");
  std::uint32_t p = q;
  for (std::uint32_t c = 2; static_cast<std::uint64_t>(c) * c <= q; ++c) {
    if (q % c == 0) {
      p = c;
      break;
    }
  }
  std::uint32_t e = 0, rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1)
    throw std::invalid_argument("alphabet size must be a prime power");
  return make_field(p, e);
}

CodeMatrix matrix_from_rows(std::uint32_t q,
                            const std::vector<std::vector<std::uint32_t>>& rows) {
  return CodeMatrix::from_rows(field_from_q(q), Level::Base, rows);
}

std::vector<std::vector<std::uint32_t>> rows_to_py(const CodeMatrix& m) {
  std::vector<std::vector<std::uint32_t>> rows;
  rows.reserve(static_cast<std::size_t>(m.rows()));
  for (int i = 1; i <= m.rows(); ++i) {
    auto span = m.row_span(i);
    rows.emplace_back(span.begin(), span.end());
  }
  return rows;
}

py::dict chained_to_py(const ChainedMatrix& ch) {
  py::dict out;
  out["rows"] = rows_to_py(ch.gamma);
  out["d"] = ch.d;
  out["perm"] = ch.perm;
  out["q"] = ch.gamma.field()->base_order();
  return out;
}

TieBreak tie_from(const std::string& tie) {
  if (tie == "min") return TieBreak::SmallestScalar;
  if (tie == "max") return TieBreak::LargestScalar;
  throw std::invalid_argument("tie must be 'min' or 'max'");
}

std::vector<FVector> targets_from(
    const FieldHandle& f, const std::vector<std::vector<std::uint32_t>>& targets) {
  std::vector<FVector> vs;
  vs.reserve(targets.size());
  for (const auto& codes : targets) vs.emplace_back(f, Level::Base, codes);
  return vs;
}

py::dict cover_to_py(const CoverResult& res) {
  py::dict out;
  std::vector<std::vector<std::uint32_t>> codewords, residuals;
  for (const auto& c : res.codewords)
    codewords.emplace_back(c.codes().begin(), c.codes().end());
  for (const auto& r : res.residuals)
    residuals.emplace_back(r.codes().begin(), r.codes().end());
  out["codewords"] = codewords;
  out["residuals"] = residuals;
  out["support"] = res.support;
  out["bound"] = res.certified_bound;
  out["trace"] = res.scalar_trace;
  out["joint_support_size"] = res.joint_support_size;
  out["split_support_size"] = res.split_support_size;
  return out;
}

std::vector<SweepPoint> points_from(
    const std::vector<std::tuple<std::uint32_t, int, int>>& points) {
  std::vector<SweepPoint> grid;
  grid.reserve(points.size());
  for (auto [q, r, m] : points) grid.push_back(SweepPoint{q, r, m});
  return grid;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() =
      "Support bounds, chained generators, covering runs, and exhaustive "
      "oracles for generalized covering radii";

  mod.def("rho", &rho, py::arg("r"), py::arg("m"),
          "Dimension of the binary order-r code in m variables");

  mod.def(
      "canonical_rep",
      [](long long t, int r, int m) { return canonical_rep(t, r, m).pairs; },
      py::arg("t"), py::arg("r"), py::arg("m"),
      "Greedy (r_i, m_i) decomposition of t");

  mod.def("ghw_binary", &ghw_binary, py::arg("t"), py::arg("r"), py::arg("m"),
          "Closed-form t-th generalized Hamming weight, binary case");

  mod.def("ghw_rm", &ghw_rm, py::arg("q"), py::arg("r"), py::arg("m"),
          "Full d-sequence of the q-ary order-r code in m variables");

  mod.def(
      "chained_rm",
      [](std::uint32_t q, int r, int m) { return chained_to_py(*chained_rm(q, r, m)); },
      py::arg("q"), py::arg("r"), py::arg("m"),
      "Chained generator matrix as {rows, d, perm, q}");

  mod.def(
      "canonicalize",
      [](std::uint32_t q, const std::vector<std::vector<std::uint32_t>>& rows) {
        return chained_to_py(canonicalize_chained(matrix_from_rows(q, rows)));
      },
      py::arg("q"), py::arg("rows"),
      "Column permutation bringing the rows into chained form");

  mod.def(
      "mu_rm",
      [](std::uint32_t q, int r, int m, int t) {
        RMParams params(q, r, m);
        return mu_from_d(ghw_rm(params.q, params.r, params.m), params.n,
                         params.q, t);
      },
      py::arg("q"), py::arg("r"), py::arg("m"), py::arg("t"),
      "Support bound mu_t of the q-ary order-r code in m variables");

  mod.def("mu_from_d", &mu_from_d, py::arg("d"), py::arg("n"), py::arg("q"),
          py::arg("t"), "Support bound read off a d-sequence");

  mod.def("recursive_bound", &recursive_bound, py::arg("t"), py::arg("r"),
          py::arg("m"), "Certified support bound of the recursive cover");

  mod.def(
      "cover",
      [](std::uint32_t q, int r, int m,
         const std::vector<std::vector<std::uint32_t>>& targets,
         const std::string& tie) {
        auto ch = chained_rm(q, r, m);
        auto vs = targets_from(ch->gamma.field(), targets);
        return cover_to_py(cover_t(*ch, vs, tie_from(tie)));
      },
      py::arg("q"), py::arg("r"), py::arg("m"), py::arg("targets"),
      py::arg("tie") = "min",
      "Chained covering run against the built-in chained generator");

  mod.def(
      "cover_chained",
      [](std::uint32_t q, const std::vector<std::vector<std::uint32_t>>& rows,
         const std::vector<int>& d,
         const std::vector<std::vector<std::uint32_t>>& targets,
         const std::string& tie) {
        auto gamma = matrix_from_rows(q, rows);
        std::vector<int> perm(static_cast<std::size_t>(gamma.cols()));
        for (int j = 0; j < gamma.cols(); ++j)
          perm[static_cast<std::size_t>(j)] = j + 1;
        ChainedMatrix ch{gamma, d, perm};
        auto vs = targets_from(gamma.field(), targets);
        return cover_to_py(cover_t(ch, vs, tie_from(tie)));
      },
      py::arg("q"), py::arg("rows"), py::arg("d"), py::arg("targets"),
      py::arg("tie") = "min",
      "Chained covering run against an explicit chained matrix");

  mod.def(
      "cover_rm",
      [](int r, int m, const std::vector<std::vector<std::uint32_t>>& targets,
         const std::string& tie) {
        auto vs = targets_from(make_field(2), targets);
        return cover_to_py(cover_recursive_rm(r, m, vs, tie_from(tie)));
      },
      py::arg("r"), py::arg("m"), py::arg("targets"), py::arg("tie") = "min",
      "Recursive binary covering run with the per-target baseline");

  mod.def(
      "exact_radius",
      [](std::uint32_t q, const std::vector<std::vector<std::uint32_t>>& rows,
         int t) { return exact_generalized_radius(matrix_from_rows(q, rows), t); },
      py::arg("q"), py::arg("rows"), py::arg("t") = 1,
      "Exhaustive generalized covering radius (syndrome search)");

  mod.def(
      "exact_ghw",
      [](std::uint32_t q, const std::vector<std::vector<std::uint32_t>>& rows) {
        return exact_ghw_all(matrix_from_rows(q, rows));
      },
      py::arg("q"), py::arg("rows"),
      "Exhaustive generalized Hamming weights");

  mod.def(
      "exact_nearest",
      [](std::uint32_t q, const std::vector<std::vector<std::uint32_t>>& rows,
         const std::vector<std::uint32_t>& target) {
        auto g = matrix_from_rows(q, rows);
        auto res = exact_nearest(g, FVector(g.field(), Level::Base, target));
        std::vector<std::uint32_t> codeword(res.codeword.codes().begin(),
                                            res.codeword.codes().end());
        return py::make_tuple(codeword, res.distance);
      },
      py::arg("q"), py::arg("rows"), py::arg("target"),
      "Exhaustive nearest codeword -> (codeword, distance)");

  mod.def(
      "sweep_mu",
      [](const std::vector<std::tuple<std::uint32_t, int, int>>& points,
         int t_max, int jobs) { return sweep_mu(points_from(points), t_max, jobs); },
      py::arg("points"), py::arg("t_max"), py::arg("jobs") = 1,
      "Bound sweep CSV over (q, r, m) points");

  mod.def(
      "sweep_exact",
      [](const std::vector<std::tuple<std::uint32_t, int, int>>& points,
         int t_max, int jobs) {
        return sweep_exact(points_from(points), t_max, jobs);
      },
      py::arg("points"), py::arg("t_max"), py::arg("jobs") = 1,
      "Bound-vs-exact sweep CSV with the ratio column");

  mod.def(
      "timing",
      [](int m_lo, int m_hi, int t, const std::string& algo, int r,
         std::uint64_t seed) {
        auto res = timing_scan(m_lo, m_hi, t, algo, r, seed);
        py::dict out;
        std::vector<std::pair<long long, long long>> rows;
        for (const auto& row : res.rows)
          rows.emplace_back(row.n, row.median_ns);
        out["rows"] = rows;
        out["slope"] = res.slope;
        return out;
      },
      py::arg("m_lo"), py::arg("m_hi"), py::arg("t"), py::arg("algo") = "cover",
      py::arg("r") = 1, py::arg("seed") = 0,
      "Median runtimes over m_lo..m_hi and the fitted log-log slope");
}
