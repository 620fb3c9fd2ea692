#include "chaincover/cover.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>

#include "chaincover/rm.hpp"

namespace chaincover {

namespace {

// Most frequent code in cand (destructively sorted); ties resolve to the
// smallest or largest code per policy.
std::pair<std::uint32_t, int> mode_code(std::vector<std::uint32_t>& cand,
                                        TieBreak policy) {
  std::sort(cand.begin(), cand.end());
  std::uint32_t best = cand[0];
  int best_count = 0;
  std::size_t i = 0;
  while (i < cand.size()) {
    std::size_t j = i;
    while (j < cand.size() && cand[j] == cand[i]) ++j;
    const int count = static_cast<int>(j - i);
    const bool wins = policy == TieBreak::SmallestScalar ? count > best_count
                                                         : count >= best_count;
    if (wins) {
      best = cand[i];
      best_count = count;
    }
    i = j;
  }
  return {best, best_count};
}

// One sweep of the chained elimination: processes rows k..1, subtracting the
// chosen scalar multiple of each row from u (in place).  Returns the chosen
// scalars indexed by row.  u holds extension codes of length n; fe shares
// ch's base field.
std::vector<std::uint32_t> cover_core(const FieldHandle& fe,
                                      const ChainedMatrix& ch,
                                      std::vector<std::uint32_t>& u,
                                      TieBreak policy) {
  const int k = ch.gamma.rows();
  const Level lv = fe->normalize(Level::Ext);
  std::vector<std::uint32_t> trace(static_cast<std::size_t>(k), 0);
  std::vector<std::uint32_t> cand;
  for (int i = k; i >= 1; --i) {
    const int lo = (i == 1) ? 1 : ch.d[static_cast<std::size_t>(i - 2)] + 1;
    const int hi = ch.d[static_cast<std::size_t>(i - 1)];
    cand.clear();
    for (int j = lo; j <= hi; ++j) {
      const std::uint32_t r = ch.gamma.at(i, j);
      const std::uint32_t rinv = fe->inv(lv, fe->embed(r));
      cand.push_back(fe->mul(lv, u[static_cast<std::size_t>(j - 1)], rinv));
    }
    const auto [a, count] = mode_code(cand, policy);
    trace[static_cast<std::size_t>(i - 1)] = a;
    if (a != 0) {
      for (int j = 1; j <= hi; ++j) {
        const std::uint32_t r = ch.gamma.at(i, j);
        if (r == 0) continue;
        u[static_cast<std::size_t>(j - 1)] =
            fe->sub(lv, u[static_cast<std::size_t>(j - 1)],
                    fe->mul(lv, a, fe->embed(r)));
      }
    }
  }
  return trace;
}

// Packs per-target base vectors into one extension vector: position j gets
// the element with base coefficients (vs[0][j], ..., vs[t-1][j]).
std::vector<std::uint32_t> pack_targets(const FieldHandle& fe,
                                        std::span<const FVector> vs) {
  const int t = static_cast<int>(vs.size());
  const int n = vs[0].length();
  std::vector<std::uint32_t> u(static_cast<std::size_t>(n));
  std::vector<std::uint32_t> coeffs(static_cast<std::size_t>(t));
  for (int j = 1; j <= n; ++j) {
    for (int i = 0; i < t; ++i) {
      coeffs[static_cast<std::size_t>(i)] = vs[static_cast<std::size_t>(i)].at(j);
    }
    u[static_cast<std::size_t>(j - 1)] = fe->compose(coeffs);
  }
  return u;
}

void check_targets(const FieldHandle& base_field, int n,
                   std::span<const FVector> vs) {
  if (vs.empty()) {
    throw std::invalid_argument("at least one target vector is required");
  }
  for (const FVector& v : vs) {
    const FieldHandle& f = v.field();
    if (f->characteristic() != base_field->characteristic() ||
        f->base_degree() != base_field->base_degree()) {
      throw std::invalid_argument("target vector base field mismatch");
    }
    if (f->normalize(v.level()) != Level::Base) {
      throw std::invalid_argument("target vectors must be at base level");
    }
    if (v.length() != n) {
      throw std::invalid_argument("target vector length " +
                                  std::to_string(v.length()) +
                                  " does not match the code length " +
                                  std::to_string(n));
    }
  }
}

// Splits the final extension residual back into base-field codewords and
// residuals and assembles the result.
CoverResult assemble(const FieldHandle& fe, std::span<const FVector> vs,
                     const std::vector<std::uint32_t>& residual_ext,
                     long certified, std::vector<std::uint32_t> trace) {
  const FieldHandle& fb = vs[0].field();
  const int t = static_cast<int>(vs.size());
  const int n = vs[0].length();
  CoverResult res;
  res.certified_bound = certified;
  res.scalar_trace = std::move(trace);
  std::vector<std::vector<std::uint32_t>> digit(
      static_cast<std::size_t>(t),
      std::vector<std::uint32_t>(static_cast<std::size_t>(n)));
  for (int j = 0; j < n; ++j) {
    const std::vector<std::uint32_t> coeffs =
        fe->decompose(residual_ext[static_cast<std::size_t>(j)]);
    for (int i = 0; i < t; ++i) {
      digit[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          coeffs[static_cast<std::size_t>(i)];
    }
    if (residual_ext[static_cast<std::size_t>(j)] != 0) {
      res.support.push_back(j + 1);
    }
  }
  for (int i = 0; i < t; ++i) {
    std::vector<std::uint32_t> cw(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      cw[static_cast<std::size_t>(j)] =
          fb->sub(Level::Base, vs[static_cast<std::size_t>(i)].at(j + 1),
                  digit[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    res.codewords.emplace_back(fb, Level::Base, std::move(cw));
    res.residuals.emplace_back(fb, Level::Base,
                               std::move(digit[static_cast<std::size_t>(i)]));
  }
  if (static_cast<long>(res.support.size()) > res.certified_bound) {
    throw std::logic_error("cover run exceeded its certified bound");
  }
  return res;
}

// Covering codeword (extension codes) for u against the binary order-r
// length-2^m code, recursing on the top variable.
std::vector<std::uint32_t> recursive_cover(const FieldHandle& fe,
                                           const std::vector<std::uint32_t>& u,
                                           int r, int m, TieBreak policy) {
  if (r >= m) return u;  // the code is the whole space
  if (r <= 1) {
    auto ch = chained_rm(2, r, m);
    std::vector<std::uint32_t> residual = u;
    cover_core(fe, *ch, residual, policy);
    const Level lv = fe->normalize(Level::Ext);
    std::vector<std::uint32_t> cw(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) {
      cw[j] = fe->sub(lv, u[j], residual[j]);
    }
    return cw;
  }
  const std::size_t half = u.size() / 2;
  const Level lv = fe->normalize(Level::Ext);
  // Left half: top variable = 1; right half: top variable = 0.
  std::vector<std::uint32_t> right(u.begin() + static_cast<std::ptrdiff_t>(half),
                                   u.end());
  const std::vector<std::uint32_t> x =
      recursive_cover(fe, right, r, m - 1, policy);
  std::vector<std::uint32_t> left_minus_x(half);
  for (std::size_t j = 0; j < half; ++j) {
    left_minus_x[j] = fe->sub(lv, u[j], x[j]);
  }
  const std::vector<std::uint32_t> y =
      recursive_cover(fe, left_minus_x, r - 1, m - 1, policy);
  std::vector<std::uint32_t> out(u.size());
  for (std::size_t j = 0; j < half; ++j) {
    out[j] = fe->add(lv, x[j], y[j]);
    out[half + j] = x[j];
  }
  return out;
}

}  // namespace

std::pair<FieldElement, int> pigeonhole_scalar(
    std::span<const FieldElement> block, std::span<const FieldElement> row,
    TieBreak policy) {
  if (block.empty() || block.size() != row.size()) {
    throw std::invalid_argument(
        "block and row must have equal nonzero length");
  }
  const FieldHandle& f = block[0].field();
  const Level lv = block[0].level();
  std::vector<std::uint32_t> cand;
  cand.reserve(block.size());
  for (std::size_t j = 0; j < block.size(); ++j) {
    if (!f->same_spec(*row[j].field()) || !f->same_spec(*block[j].field())) {
      throw std::invalid_argument("field spec mismatch");
    }
    if (f->normalize(row[j].level()) != f->normalize(lv) ||
        f->normalize(block[j].level()) != f->normalize(lv)) {
      throw std::invalid_argument("level mismatch");
    }
    if (row[j].is_zero()) {
      throw std::invalid_argument("row entries must be nonzero");
    }
    cand.push_back(
        f->mul(f->normalize(lv), block[j].code(),
               f->inv(f->normalize(lv), row[j].code())));
  }
  const auto [code, count] = mode_code(cand, policy);
  return {FieldElement(f, f->normalize(lv), code), count};
}

CoverResult cover_t(const ChainedMatrix& ch, std::span<const FVector> vs,
                    TieBreak policy) {
  require_chained(ch);
  const FieldHandle& fb = ch.gamma.field();
  const int n = ch.gamma.cols();
  check_targets(fb, n, vs);
  const int t = static_cast<int>(vs.size());
  const FieldHandle fe = Field::make(fb->characteristic(), fb->base_degree(),
                                     static_cast<std::uint32_t>(t));
  std::vector<std::uint32_t> u = pack_targets(fe, vs);
  std::vector<std::uint32_t> trace = cover_core(fe, ch, u, policy);
  return assemble(fe, vs, u, bound_mu(ch, t), std::move(trace));
}

CoverResult cover_recursive_rm(int r, int m, std::span<const FVector> vs,
                               TieBreak policy) {
  if (m < 0 || r < 0) {
    throw std::invalid_argument("order and variable count must be >= 0");
  }
  if (r > m) r = m;
  const FieldHandle fb = Field::make(2, 1, 1);
  const long long n = 1LL << m;
  check_targets(fb, static_cast<int>(n), vs);
  for (const FVector& v : vs) {
    if (v.field()->base_order() != 2) {
      throw std::invalid_argument("the recursive cover is binary only");
    }
  }
  const int t = static_cast<int>(vs.size());
  const FieldHandle fe = Field::make(2, 1, static_cast<std::uint32_t>(t));

  // Joint pass: all targets packed into one extension vector.
  const std::vector<std::uint32_t> u0 = pack_targets(fe, vs);
  const std::vector<std::uint32_t> cj = recursive_cover(fe, u0, r, m, policy);
  std::vector<std::uint32_t> joint_residual(u0.size());
  int joint_size = 0;
  for (std::size_t j = 0; j < u0.size(); ++j) {
    joint_residual[j] = fe->sub(fe->normalize(Level::Ext), u0[j], cj[j]);
    if (joint_residual[j] != 0) ++joint_size;
  }

  // Independent passes: each target covered on its own.
  std::vector<std::vector<std::uint32_t>> solo_cw(
      static_cast<std::size_t>(t));
  std::vector<char> in_union(u0.size(), 0);
  int solo_size = 0;
  for (int i = 0; i < t; ++i) {
    std::span<const std::uint32_t> codes = vs[static_cast<std::size_t>(i)].codes();
    std::vector<std::uint32_t> ui(codes.begin(), codes.end());
    solo_cw[static_cast<std::size_t>(i)] =
        recursive_cover(fb, ui, r, m, policy);
    for (std::size_t j = 0; j < ui.size(); ++j) {
      if ((ui[j] ^ solo_cw[static_cast<std::size_t>(i)][j]) != 0 &&
          !in_union[j]) {
        in_union[j] = 1;
        ++solo_size;
      }
    }
  }

  const long certified = std::min(recursive_bound(t, r, m),
                                  static_cast<long>(t) *
                                      recursive_bound(1, r, m));
  if (joint_size <= solo_size) {
    CoverResult res = assemble(fe, vs, joint_residual, certified, {});
    res.joint_support_size = joint_size;
    res.split_support_size = solo_size;
    return res;
  }
  CoverResult res;
  res.certified_bound = certified;
  res.joint_support_size = joint_size;
  res.split_support_size = solo_size;
  for (int i = 0; i < t; ++i) {
    std::vector<std::uint32_t> cw = std::move(solo_cw[static_cast<std::size_t>(i)]);
    std::vector<std::uint32_t> rem(cw.size());
    for (std::size_t j = 0; j < cw.size(); ++j) {
      rem[j] = vs[static_cast<std::size_t>(i)].at(static_cast<int>(j) + 1) ^ cw[j];
    }
    res.codewords.emplace_back(fb, Level::Base, std::move(cw));
    res.residuals.emplace_back(fb, Level::Base, std::move(rem));
  }
  for (std::size_t j = 0; j < in_union.size(); ++j) {
    if (in_union[j]) res.support.push_back(static_cast<int>(j) + 1);
  }
  if (static_cast<long>(res.support.size()) > res.certified_bound) {
    throw std::logic_error("cover run exceeded its certified bound");
  }
  return res;
}

long recursive_bound(int t, int r, int m) {
  if (t < 1) throw std::invalid_argument("extension degree must be >= 1");
  if (m < 0 || r < 0) {
    throw std::invalid_argument("order and variable count must be >= 0");
  }
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, long> cache;
  const std::tuple<int, int, int> key{t, r, m};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  long value;
  if (r >= m) {
    value = 0;
  } else if (r <= 1) {
    value = mu_from_d(ghw_rm(2, r, m), 1 << m, 2, t);
  } else {
    value = recursive_bound(t, r, m - 1) + recursive_bound(t, r - 1, m - 1);
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, value);
  return value;
}

}  // namespace chaincover
