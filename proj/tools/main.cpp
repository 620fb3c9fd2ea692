// Command-line front end: every subcommand is a thin adapter over the
// library; all numeric work happens in the chaincover:: functions.
#include <cstdint>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chaincover/chain.hpp"
#include "chaincover/cover.hpp"
#include "chaincover/experiment.hpp"
#include "chaincover/io.hpp"
#include "chaincover/oracle.hpp"
#include "chaincover/rm.hpp"

namespace {

using namespace chaincover;

TieBreak parse_tie(const std::string& s) {
  if (s == "min") return TieBreak::SmallestScalar;
  if (s == "max") return TieBreak::LargestScalar;
  throw std::invalid_argument("tie-break must be 'min' or 'max', got '" + s +
                              "'");
}

// Accepts both the plain matrix format and the chained format (detected by
// its "d=" trailer), returning just the generator.
CodeMatrix read_any_matrix(const std::string& path) {
  const std::string text = read_text_file(path);
  if (text.rfind("d=", 0) == 0 || text.find("\nd=") != std::string::npos) {
    return chained_from_text(text).gamma;
  }
  return matrix_from_text(text);
}

std::vector<FVector> random_targets(const FieldHandle& f, int t, int n,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::uint32_t q = f->base_order();
  std::vector<FVector> vs;
  vs.reserve(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) {
    std::vector<std::uint32_t> codes(static_cast<std::size_t>(n));
    for (auto& c : codes) c = static_cast<std::uint32_t>(rng() % q);
    vs.emplace_back(f, Level::Base, std::move(codes));
  }
  return vs;
}

// Shared input plumbing for the cover subcommands: either a vector file or
// seeded random targets (echoed as "v<i>=" lines so runs are reproducible
// from the output alone).
std::vector<FVector> gather_targets(const FieldHandle& f, int n,
                                    const std::string& input_path,
                                    bool random, int t, std::uint64_t seed) {
  if (!input_path.empty() && random) {
    throw std::invalid_argument("choose one of --input and --random");
  }
  if (!input_path.empty()) {
    std::vector<FVector> vs =
        vectors_from_text(read_text_file(input_path), f, Level::Base);
    if (vs.empty()) throw std::invalid_argument("no vectors in --input file");
    if (t > 0 && t != static_cast<int>(vs.size())) {
      throw std::invalid_argument(
          "--t says " + std::to_string(t) + " targets but the input file has " +
          std::to_string(vs.size()));
    }
    for (const FVector& v : vs) {
      if (v.length() != n) {
        throw std::invalid_argument("input vector length " +
                                    std::to_string(v.length()) +
                                    " does not match the code length " +
                                    std::to_string(n));
      }
    }
    return vs;
  }
  if (!random) {
    throw std::invalid_argument("need --input FILE or --random");
  }
  const int count = t > 0 ? t : 1;
  std::vector<FVector> vs = random_targets(f, count, n, seed);
  for (int i = 0; i < count; ++i) {
    std::printf("v%d=", i + 1);
    for (std::uint32_t c : vs[static_cast<std::size_t>(i)].codes()) {
      std::printf(" %u", c);
    }
    std::printf("\n");
  }
  return vs;
}

void print_cover_result(const CoverResult& res, bool trace) {
  for (std::size_t i = 0; i < res.codewords.size(); ++i) {
    std::printf("l%zu=", i + 1);
    for (std::uint32_t c : res.codewords[i].codes()) std::printf(" %u", c);
    std::printf("\n");
  }
  std::printf("I=");
  for (int pos : res.support) std::printf(" %d", pos);
  std::printf("\n|I|= %zu\n", res.support.size());
  std::printf("bound= %ld\n", res.certified_bound);
  if (trace) {
    std::printf("trace=");
    for (std::uint32_t a : res.scalar_trace) std::printf(" %u", a);
    std::printf("\n");
  }
}

std::vector<SweepPoint> parse_grid(const std::string& text) {
  std::vector<SweepPoint> points;
  std::size_t pos = 0;
  int lineno = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::string line =
        text.substr(pos, eol == std::string::npos ? eol : eol - pos);
    pos = eol == std::string::npos ? text.size() + 1 : eol + 1;
    ++lineno;
    std::string body = line.substr(0, line.find('#'));
    long q = -1, r = -1, m = -1;
    char extra;
    const int got = std::sscanf(body.c_str(), " %ld %ld %ld %c", &q, &r, &m,
                                &extra);
    if (got <= 0) {
      if (body.find_first_not_of(" \t\r\v\f") == std::string::npos)
        continue;  // blank or comment-only line
      throw std::invalid_argument("grid line " + std::to_string(lineno) +
                                  " must be 'q r m'");
    }
    if (got != 3 || q < 2 || r < 0 || m < 0) {
      throw std::invalid_argument("grid line " + std::to_string(lineno) +
                                  " must be 'q r m'");
    }
    points.push_back(SweepPoint{static_cast<std::uint32_t>(q),
                                static_cast<int>(r), static_cast<int>(m)});
  }
  if (points.empty()) throw std::invalid_argument("grid file has no points");
  return points;
}

std::pair<int, int> parse_range(const std::string& s) {
  const std::size_t sep = s.find("..");
  int lo = 0, hi = 0;
  if (sep == std::string::npos ||
      std::sscanf(s.c_str(), "%d..%d", &lo, &hi) != 2) {
    throw std::invalid_argument("range must look like 'a..b', got '" + s +
                                "'");
  }
  return {lo, hi};
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
  } else {
    write_text_file(out_path, text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bounds, chained generators, and covering runs for "
               "generalized covering radii"};
  app.require_subcommand(1);
  int jobs = 1;
  app.add_option("--jobs", jobs, "max concurrent workers for experiments")
      ->capture_default_str();

  // ghw
  auto* ghw_cmd =
      app.add_subcommand("ghw", "generalized Hamming weights of RM_q(r, m)");
  int ghw_q = 2, ghw_r = 0, ghw_m = 0;
  ghw_cmd->add_option("--q", ghw_q, "alphabet size (prime power)")->required();
  ghw_cmd->add_option("--r", ghw_r, "order")->required();
  ghw_cmd->add_option("--m", ghw_m, "number of variables")->required();
  ghw_cmd->callback([&] {
    const std::vector<int> d =
        ghw_rm(static_cast<std::uint32_t>(ghw_q), ghw_r, ghw_m);
    for (std::size_t i = 0; i < d.size(); ++i) {
      std::printf("%zu %d\n", i + 1, d[i]);
    }
  });

  // chained-matrix
  auto* chm_cmd = app.add_subcommand("chained-matrix",
                                     "chained generator matrix of RM_q(r, m)");
  int chm_q = 2, chm_r = 0, chm_m = 0;
  std::string chm_out;
  chm_cmd->add_option("--q", chm_q, "alphabet size (prime power)")->required();
  chm_cmd->add_option("--r", chm_r, "order")->required();
  chm_cmd->add_option("--m", chm_m, "number of variables")->required();
  chm_cmd->add_option("--out", chm_out, "output file (default: stdout)");
  chm_cmd->callback([&] {
    auto ch = chained_rm(static_cast<std::uint32_t>(chm_q), chm_r, chm_m);
    emit(chm_out, chained_to_text(*ch));
  });

  // bound
  auto* bound_cmd = app.add_subcommand(
      "bound", "support bound mu_t from a chained generator");
  std::string bound_matrix;
  int bound_q = 0, bound_r = -1, bound_m = -1, bound_t = 0;
  bound_cmd->add_option("--matrix", bound_matrix, "chained matrix file");
  bound_cmd->add_option("--q", bound_q, "alphabet size (prime power)");
  bound_cmd->add_option("--r", bound_r, "order");
  bound_cmd->add_option("--m", bound_m, "number of variables");
  bound_cmd->add_option("--t", bound_t, "extension degree")->required();
  bound_cmd->callback([&] {
    const bool has_matrix = !bound_matrix.empty();
    const bool has_rm = bound_q > 0 || bound_r >= 0 || bound_m >= 0;
    if (has_matrix == has_rm) {
      throw std::invalid_argument(
          "give either --matrix or the --q/--r/--m triple");
    }
    long mu;
    if (has_matrix) {
      // Accept a chained file as-is; a plain generator is canonicalized
      // first (the bound only depends on the d-sequence, not column order).
      const std::string text = read_text_file(bound_matrix);
      const bool is_chained =
          text.rfind("d=", 0) == 0 || text.find("\nd=") != std::string::npos;
      const ChainedMatrix ch = is_chained
                                   ? chained_from_text(text)
                                   : canonicalize_chained(matrix_from_text(text));
      mu = bound_mu(ch, bound_t);
    } else {
      if (bound_q <= 0 || bound_r < 0 || bound_m < 0) {
        throw std::invalid_argument("--q, --r, and --m are all required");
      }
      const RMParams params(static_cast<std::uint32_t>(bound_q), bound_r,
                            bound_m);
      mu = mu_from_d(ghw_rm(params.q, params.r, params.m), params.n, params.q,
                     bound_t);
    }
    std::printf("%ld\n", mu);
  });

  // cover
  auto* cover_cmd =
      app.add_subcommand("cover", "cover targets with a chained generator");
  std::string cover_matrix, cover_input, cover_tie = "min";
  int cover_tn = 0;
  std::uint64_t cover_seed = 0;
  bool cover_random = false, cover_trace = false;
  cover_cmd->add_option("--matrix", cover_matrix, "chained matrix file")
      ->required();
  cover_cmd->add_option("--input", cover_input, "target vector file");
  cover_cmd->add_option("--t", cover_tn, "number of targets");
  cover_cmd->add_flag("--random", cover_random, "draw random targets");
  cover_cmd->add_option("--seed", cover_seed, "seed for --random");
  cover_cmd->add_flag("--trace", cover_trace, "print the chosen scalars");
  cover_cmd->add_option("--tie-break", cover_tie, "min|max scalar on ties")
      ->capture_default_str();
  cover_cmd->callback([&] {
    const ChainedMatrix ch = chained_from_text(read_text_file(cover_matrix));
    const std::vector<FVector> vs =
        gather_targets(ch.gamma.field(), ch.gamma.cols(), cover_input,
                       cover_random, cover_tn, cover_seed);
    print_cover_result(cover_t(ch, vs, parse_tie(cover_tie)), cover_trace);
  });

  // cover-rm
  auto* crm_cmd = app.add_subcommand(
      "cover-rm", "recursive cover for binary RM(r, m) targets");
  int crm_r = 0, crm_m = 0, crm_tn = 0;
  std::string crm_input, crm_tie = "min";
  std::uint64_t crm_seed = 0;
  bool crm_random = false;
  crm_cmd->add_option("--r", crm_r, "order")->required();
  crm_cmd->add_option("--m", crm_m, "number of variables")->required();
  crm_cmd->add_option("--input", crm_input, "target vector file");
  crm_cmd->add_option("--t", crm_tn, "number of targets");
  crm_cmd->add_flag("--random", crm_random, "draw random targets");
  crm_cmd->add_option("--seed", crm_seed, "seed for --random");
  crm_cmd->add_option("--tie-break", crm_tie, "min|max scalar on ties")
      ->capture_default_str();
  crm_cmd->callback([&] {
    const RMParams params(2, crm_r, crm_m);
    const std::vector<FVector> vs =
        gather_targets(params.field, params.n, crm_input, crm_random, crm_tn,
                       crm_seed);
    print_cover_result(cover_recursive_rm(crm_r, crm_m, vs,
                                          parse_tie(crm_tie)),
                       false);
  });

  // oracle
  auto* oracle_cmd =
      app.add_subcommand("oracle", "exact brute-force references");
  oracle_cmd->require_subcommand(1);

  auto* orad_cmd = oracle_cmd->add_subcommand(
      "radius", "exact generalized covering radius");
  std::string orad_matrix;
  int orad_t = 1;
  orad_cmd->add_option("--matrix", orad_matrix, "generator matrix file")
      ->required();
  orad_cmd->add_option("--t", orad_t, "extension degree")
      ->capture_default_str();
  orad_cmd->callback([&] {
    std::printf("%d\n",
                exact_generalized_radius(read_any_matrix(orad_matrix), orad_t));
  });

  auto* oghw_cmd =
      oracle_cmd->add_subcommand("ghw", "exact generalized Hamming weights");
  std::string oghw_matrix;
  oghw_cmd->add_option("--matrix", oghw_matrix, "generator matrix file")
      ->required();
  oghw_cmd->callback([&] {
    const std::vector<int> d = exact_ghw_all(read_any_matrix(oghw_matrix));
    for (std::size_t i = 0; i < d.size(); ++i) {
      std::printf("%zu %d\n", i + 1, d[i]);
    }
  });

  auto* onear_cmd =
      oracle_cmd->add_subcommand("nearest", "exhaustive nearest codeword");
  std::string onear_matrix, onear_input;
  onear_cmd->add_option("--matrix", onear_matrix, "generator matrix file")
      ->required();
  onear_cmd->add_option("--input", onear_input, "file with one target vector")
      ->required();
  onear_cmd->callback([&] {
    const CodeMatrix g = read_any_matrix(onear_matrix);
    const std::vector<FVector> vs = vectors_from_text(
        read_text_file(onear_input), g.field(), g.level());
    if (vs.size() != 1) {
      throw std::invalid_argument("--input must hold exactly one vector");
    }
    const NearestResult near = exact_nearest(g, vs[0]);
    std::printf("codeword=");
    for (std::uint32_t c : near.codeword.codes()) std::printf(" %u", c);
    std::printf("\ndistance= %d\n", near.distance);
  });

  // experiment
  auto* exp_cmd = app.add_subcommand("experiment", "sweeps and timing scans");
  exp_cmd->require_subcommand(1);
  // Let the global --jobs option appear after the subcommand names too.
  exp_cmd->fallthrough();

  auto* sweep_cmd =
      exp_cmd->add_subcommand("sweep", "mu_t (and exact R_t) over a grid");
  sweep_cmd->fallthrough();
  std::string sweep_grid, sweep_csv;
  int sweep_tmax = 1;
  bool sweep_exact_flag = false;
  sweep_cmd->add_option("--grid", sweep_grid, "file with 'q r m' lines")
      ->required();
  sweep_cmd->add_option("--tmax", sweep_tmax, "largest extension degree")
      ->required();
  sweep_cmd->add_option("--csv", sweep_csv, "output CSV file")->required();
  sweep_cmd->add_flag("--exact", sweep_exact_flag,
                      "also compute exact radii and ratios");
  sweep_cmd->callback([&] {
    const std::vector<SweepPoint> points =
        parse_grid(read_text_file(sweep_grid));
    const std::string csv = sweep_exact_flag
                                ? sweep_exact(points, sweep_tmax, jobs)
                                : sweep_mu(points, sweep_tmax, jobs);
    write_text_file(sweep_csv, csv);
  });

  auto* timing_cmd =
      exp_cmd->add_subcommand("timing", "runtime scaling of the covers");
  timing_cmd->fallthrough();
  std::string timing_range, timing_csv_path, timing_algo = "cover";
  int timing_t = 1, timing_r = 1;
  std::uint64_t timing_seed = 0;
  timing_cmd->add_option("--m-range", timing_range, "variables, e.g. 6..12")
      ->required();
  timing_cmd->add_option("--t", timing_t, "number of targets")->required();
  timing_cmd->add_option("--csv", timing_csv_path, "output CSV file")
      ->required();
  timing_cmd->add_option("--algo", timing_algo, "cover|cover-rm")
      ->capture_default_str();
  timing_cmd->add_option("--r", timing_r, "order of the timed code")
      ->capture_default_str();
  timing_cmd->add_option("--seed", timing_seed, "input generator seed");
  timing_cmd->callback([&] {
    const auto [lo, hi] = parse_range(timing_range);
    const TimingResult result =
        timing_scan(lo, hi, timing_t, timing_algo, timing_r, timing_seed);
    write_text_file(timing_csv_path, timing_csv(result));
    std::printf("slope= %.4f\n", result.slope);
  });

  try {
    app.parse(argc, argv);
    return 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
