#include "chaincover/rm.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>

namespace chaincover {

namespace {

constexpr long long kMaxLength = 1LL << 26;

// q = p^e with p prime; throws when q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> factor_prime_power(std::uint32_t q) {
  if (q < 2) {
    throw std::invalid_argument("alphabet size must be at least 2, got " +
                                std::to_string(q));
  }
  std::uint32_t p = 2;
  while (static_cast<std::uint64_t>(p) * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;  // q itself is prime
  std::uint32_t e = 0, rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) {
    throw std::invalid_argument("alphabet size must be a prime power, got " +
                                std::to_string(q));
  }
  return {p, e};
}

int clip_order(int r, std::uint32_t q, int m) {
  long long rmax = static_cast<long long>(q - 1) * m;
  return r > rmax ? static_cast<int>(rmax) : r;
}

// Values of x_m across the q column blocks, left to right:
// gamma^{q-2}, ..., gamma, 1, 0.
std::vector<std::uint32_t> block_values(const FieldHandle& f) {
  std::uint32_t q = f->base_order();
  std::vector<std::uint32_t> a(q);
  for (std::uint32_t b = 0; b + 1 < q; ++b) {
    a[b] = f->pow(Level::Base, f->gamma(), q - 2 - b);
  }
  a[q - 1] = 0;
  return a;
}

// The chaining value sequence (a_0, a_1, a_2, ...) = (0, 1, gamma, gamma^2,
// ...); h_i(x) = prod_{j<i} (x - a_j) then vanishes exactly on the i
// rightmost column blocks.
std::vector<std::uint32_t> chain_values(const FieldHandle& f) {
  std::uint32_t q = f->base_order();
  std::vector<std::uint32_t> a(q);
  a[0] = 0;
  for (std::uint32_t j = 1; j < q; ++j) {
    a[j] = f->pow(Level::Base, f->gamma(), j - 1);
  }
  return a;
}

CodeMatrix build_generator(const FieldHandle& f, int r, int m) {
  if (m == 0) {
    return CodeMatrix(f, Level::Base, 1, 1, {1});
  }
  std::uint32_t q = f->base_order();
  int w = std::min<long long>(r, q - 1);
  const std::vector<std::uint32_t> xval = block_values(f);
  long long n1 = 1;
  for (int i = 1; i < m; ++i) n1 *= q;
  std::vector<std::vector<std::uint32_t>> rows;
  for (int i = w; i >= 0; --i) {
    CodeMatrix child = build_generator(f, clip_order(r - i, q, m - 1), m - 1);
    std::vector<std::uint32_t> scalar(q);
    for (std::uint32_t b = 0; b < q; ++b) {
      scalar[b] = f->pow(Level::Base, xval[b], static_cast<std::uint64_t>(i));
    }
    for (int cr = 1; cr <= child.rows(); ++cr) {
      std::span<const std::uint32_t> src = child.row_span(cr);
      std::vector<std::uint32_t> row;
      row.reserve(static_cast<std::size_t>(n1) * q);
      for (std::uint32_t b = 0; b < q; ++b) {
        for (long long c = 0; c < n1; ++c) {
          row.push_back(f->mul(Level::Base, scalar[b],
                               src[static_cast<std::size_t>(c)]));
        }
      }
      rows.push_back(std::move(row));
    }
  }
  return CodeMatrix::from_rows(f, Level::Base, rows);
}

using ChainKey = std::tuple<std::uint32_t, int, int>;

std::shared_ptr<const ChainedMatrix> chained_impl(const FieldHandle& f, int r,
                                                  int m);

std::shared_ptr<const ChainedMatrix> build_chained(const FieldHandle& f, int r,
                                                   int m) {
  if (m == 0) {
    ChainedMatrix ch{CodeMatrix(f, Level::Base, 1, 1, {1}), {1}, {1}};
    require_chained(ch);
    return std::make_shared<const ChainedMatrix>(std::move(ch));
  }
  std::uint32_t q = f->base_order();
  int w = std::min<long long>(r, q - 1);
  const std::vector<std::uint32_t> xval = block_values(f);
  const std::vector<std::uint32_t> aseq = chain_values(f);
  long long n1 = 1;
  for (int i = 1; i < m; ++i) n1 *= q;
  long long n = n1 * q;
  std::vector<std::vector<std::uint32_t>> rows;
  for (int i = w; i >= 0; --i) {
    auto child = chained_impl(f, clip_order(r - i, q, m - 1), m - 1);
    std::vector<std::uint32_t> scalar(q);
    for (std::uint32_t b = 0; b < q; ++b) {
      std::uint32_t v = 1;
      for (int j = 0; j < i; ++j) {
        v = f->mul(Level::Base, v, f->sub(Level::Base, xval[b], aseq[j]));
      }
      scalar[b] = v;
    }
    for (int cr = 1; cr <= child->gamma.rows(); ++cr) {
      std::span<const std::uint32_t> src = child->gamma.row_span(cr);
      std::vector<std::uint32_t> row;
      row.reserve(static_cast<std::size_t>(n));
      for (std::uint32_t b = 0; b < q; ++b) {
        for (long long c = 0; c < n1; ++c) {
          row.push_back(f->mul(Level::Base, scalar[b],
                               src[static_cast<std::size_t>(c)]));
        }
      }
      rows.push_back(std::move(row));
    }
  }
  std::vector<int> d;
  d.reserve(rows.size());
  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  int count = 0;
  for (const auto& row : rows) {
    for (long long c = 0; c < n; ++c) {
      if (row[static_cast<std::size_t>(c)] != 0 &&
          !covered[static_cast<std::size_t>(c)]) {
        covered[static_cast<std::size_t>(c)] = 1;
        ++count;
      }
    }
    d.push_back(count);
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (long long j = 0; j < n; ++j) perm[static_cast<std::size_t>(j)] =
      static_cast<int>(j + 1);
  ChainedMatrix ch{CodeMatrix::from_rows(f, Level::Base, rows), std::move(d),
                   std::move(perm)};
  require_chained(ch);
  return std::make_shared<const ChainedMatrix>(std::move(ch));
}

std::shared_ptr<const ChainedMatrix> chained_impl(const FieldHandle& f, int r,
                                                  int m) {
  static std::mutex mu;
  static std::map<ChainKey, std::shared_ptr<const ChainedMatrix>> cache;
  ChainKey key{f->base_order(), r, m};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto built = build_chained(f, r, m);
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(built));
  return it->second;
}

std::vector<int> dseq_impl(std::uint32_t q, int r, int m) {
  static std::mutex mu;
  static std::map<ChainKey, std::vector<int>> cache;
  ChainKey key{q, r, m};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::vector<int> out;
  if (m == 0) {
    out = {1};
  } else {
    int w = std::min<long long>(r, q - 1);
    long long n1 = 1;
    for (int i = 1; i < m; ++i) n1 *= q;
    // Top block row: q - w nonzero column blocks.  Either w == r (the child
    // is the one-dimensional order-0 code) or w == q - 1 (a single nonzero
    // block), so the scaled child d-sequence is a genuine prefix either way.
    std::vector<int> first = dseq_impl(q, clip_order(r - w, q, m - 1), m - 1);
    if (q - static_cast<std::uint32_t>(w) > 1 && first.size() != 1) {
      throw std::logic_error("unexpected multi-row top block");
    }
    for (int v : first) {
      out.push_back(static_cast<int>((q - static_cast<std::uint32_t>(w)) *
                                     static_cast<long long>(v)));
    }
    long long offset = static_cast<long long>(q - w) * n1;
    // Each later block row touches one column block beyond those already
    // fully covered; new support follows its child's d-sequence there.
    for (int i = w - 1; i >= 0; --i) {
      std::vector<int> child = dseq_impl(q, clip_order(r - i, q, m - 1), m - 1);
      for (int v : child) out.push_back(static_cast<int>(offset + v));
      offset += n1;
    }
  }
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(out));
  return it->second;
}

}  // namespace

RMParams::RMParams(std::uint32_t q_in, int r_in, int m_in)
    : q(q_in), r(r_in), m(m_in) {
  if (m < 0) throw std::invalid_argument("number of variables must be >= 0");
  if (r < 0) throw std::invalid_argument("order must be >= 0");
  auto [p, e] = factor_prime_power(q);
  field = Field::make(p, e, 1);
  r = clip_order(r, q, m);
  long long nn = 1;
  for (int i = 0; i < m; ++i) {
    nn *= q;
    if (nn > kMaxLength) {
      throw std::invalid_argument("code length " + std::to_string(q) + "^" +
                                  std::to_string(m) + " exceeds the limit");
    }
  }
  n = static_cast<int>(nn);
}

long long RMParams::dimension() const {
  // Monomials with per-variable degree <= q-1 and total degree <= r, counted
  // by a running DP over the number of variables.
  std::vector<long long> cur(static_cast<std::size_t>(r) + 1, 1);
  for (int mm = 1; mm <= m; ++mm) {
    std::vector<long long> nxt(static_cast<std::size_t>(r) + 1, 0);
    for (int rr = 0; rr <= r; ++rr) {
      long long s = 0;
      int wlim = std::min<long long>(rr, q - 1);
      for (int i = 0; i <= wlim; ++i) s += cur[static_cast<std::size_t>(rr - i)];
      nxt[static_cast<std::size_t>(rr)] = s;
    }
    cur = std::move(nxt);
  }
  return cur[static_cast<std::size_t>(r)];
}

long long rho(int r, int m) {
  if (r < 0 || m < 0) {
    throw std::invalid_argument("rho arguments must be nonnegative");
  }
  if (m > 62) throw std::invalid_argument("rho argument too large");
  long long total = 0;
  long long c = 1;  // C(m, i), starting at i = 0
  for (int i = 0; i <= std::min(r, m); ++i) {
    total += c;
    c = c * (m - i) / (i + 1);
  }
  return total;
}

CanonicalRep canonical_rep(long long t, int r, int m) {
  if (m < 0 || r < 0 || r > m) {
    throw std::invalid_argument("order must satisfy 0 <= r <= m");
  }
  if (t < 1 || t > rho(r, m)) {
    throw std::invalid_argument("index " + std::to_string(t) +
                                " outside 1..dim");
  }
  CanonicalRep rep;
  rep.t = t;
  rep.r = r;
  rep.m = m;
  long long remaining = t;
  int prev = r;
  for (int i = 1; remaining > 0; ++i) {
    int slack = m - r - i + 1;
    int best = -1;
    for (int ri = prev; ri >= 0; --ri) {
      int mi = ri + slack;
      if (mi < 0) continue;
      if (rho(ri, mi) <= remaining) {
        best = ri;
        break;
      }
    }
    if (best < 0) throw std::logic_error("greedy decomposition failed");
    int mi = best + slack;
    rep.pairs.emplace_back(best, mi);
    remaining -= rho(best, mi);
    prev = best;
  }
  return rep;
}

long long ghw_binary(long long t, int r, int m) {
  CanonicalRep rep = canonical_rep(t, r, m);
  long long d = 0;
  for (const auto& [ri, mi] : rep.pairs) d += 1LL << mi;
  return d;
}

CodeMatrix rm_generator_blocks(std::uint32_t q, int r, int m) {
  RMParams params(q, r, m);
  return build_generator(params.field, params.r, params.m);
}

std::shared_ptr<const ChainedMatrix> chained_rm(std::uint32_t q, int r, int m) {
  RMParams params(q, r, m);
  return chained_impl(params.field, params.r, params.m);
}

std::vector<int> ghw_rm(std::uint32_t q, int r, int m) {
  RMParams params(q, r, m);
  return dseq_impl(params.q, params.r, params.m);
}

}  // namespace chaincover
