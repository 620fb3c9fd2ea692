#include "chaincover/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>

namespace chaincover {

namespace {

constexpr std::uint64_t kMaxStates = 1ull << 24;
constexpr int kMaxSupportLength = 24;

// base^e, saturating just above cap so callers can compare against it.
std::uint64_t power_capped(std::uint64_t base, int e, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (int i = 0; i < e; ++i) {
    v *= base;
    if (v > cap) return cap + 1;
  }
  return v;
}

// First `rank` rows of the reduced form: a full-row-rank basis of g's row
// space.
CodeMatrix row_basis(const CodeMatrix& g) {
  auto [rref, rank] = row_reduce(g);
  std::span<const std::uint32_t> data = rref.data();
  std::vector<std::uint32_t> top(
      data.begin(), data.begin() + static_cast<std::size_t>(rank) * g.cols());
  return CodeMatrix(g.field(), g.level(), rank, g.cols(), std::move(top));
}

}  // namespace

int exact_covering_radius(const CodeMatrix& g) {
  const FieldHandle& f = g.field();
  Level lv = f->normalize(g.level());
  CodeMatrix basis = row_basis(g);
  CodeMatrix h = parity_check(basis);
  const int nk = h.rows();
  const int n = h.cols();
  if (nk == 0) return 0;  // the code is the whole space
  const std::uint32_t order = f->order(lv);
  const std::uint64_t states = power_capped(order, nk, kMaxStates);
  if (states > kMaxStates) {
    throw std::invalid_argument(
        "syndrome space " + std::to_string(order) + "^" + std::to_string(nk) +
        " exceeds the search budget 2^24");
  }

  // Scaled parity columns: scaled[(j*(order-1) + a-1)*nk + i] = a * H[i][j].
  std::vector<std::uint32_t> scaled(
      static_cast<std::size_t>(n) * (order - 1) * nk);
  for (int j = 0; j < n; ++j) {
    for (std::uint32_t a = 1; a < order; ++a) {
      std::uint32_t* dst =
          &scaled[(static_cast<std::size_t>(j) * (order - 1) + (a - 1)) * nk];
      for (int i = 0; i < nk; ++i) {
        dst[i] = f->mul(lv, a, h.at(i + 1, j + 1));
      }
    }
  }

  std::vector<std::uint8_t> dist(static_cast<std::size_t>(states), 0xFF);
  dist[0] = 0;
  std::vector<std::uint32_t> frontier{0}, next;
  int radius = 0;

  const bool xor_index = (f->characteristic() == 2);
  if (xor_index) {
    // Characteristic 2: addition is XOR on codes and the level order is a
    // power of two, so syndrome indices add by XOR as well.
    std::vector<std::uint32_t> delta(static_cast<std::size_t>(n) *
                                     (order - 1));
    for (std::size_t col = 0; col < delta.size(); ++col) {
      std::uint64_t idx = 0;
      for (int i = nk - 1; i >= 0; --i) {
        idx = idx * order + scaled[col * nk + static_cast<std::size_t>(i)];
      }
      delta[col] = static_cast<std::uint32_t>(idx);
    }
    while (!frontier.empty()) {
      next.clear();
      for (std::uint32_t s : frontier) {
        const std::uint8_t nd = static_cast<std::uint8_t>(dist[s] + 1);
        for (std::uint32_t d : delta) {
          const std::uint32_t t = s ^ d;
          if (dist[t] == 0xFF) {
            dist[t] = nd;
            next.push_back(t);
          }
        }
      }
      if (!next.empty()) ++radius;
      frontier.swap(next);
    }
  } else {
    std::vector<std::uint32_t> digits(static_cast<std::size_t>(nk));
    while (!frontier.empty()) {
      next.clear();
      for (std::uint32_t s : frontier) {
        std::uint32_t rest = s;
        for (int i = 0; i < nk; ++i) {
          digits[static_cast<std::size_t>(i)] = rest % order;
          rest /= order;
        }
        const std::uint8_t nd = static_cast<std::uint8_t>(dist[s] + 1);
        const std::size_t cols = static_cast<std::size_t>(n) * (order - 1);
        for (std::size_t col = 0; col < cols; ++col) {
          const std::uint32_t* add = &scaled[col * nk];
          std::uint64_t idx = 0;
          for (int i = nk - 1; i >= 0; --i) {
            idx = idx * order +
                  f->add(lv, digits[static_cast<std::size_t>(i)], add[i]);
          }
          const std::uint32_t t = static_cast<std::uint32_t>(idx);
          if (dist[t] == 0xFF) {
            dist[t] = nd;
            next.push_back(t);
          }
        }
      }
      if (!next.empty()) ++radius;
      frontier.swap(next);
    }
  }

  for (std::uint8_t v : dist) {
    if (v == 0xFF) throw std::logic_error("unreachable syndrome");
  }
  return radius;
}

int exact_generalized_radius(const CodeMatrix& g, int t) {
  if (t < 1) throw std::invalid_argument("extension degree must be >= 1");
  const FieldHandle& f = g.field();
  if (f->normalize(g.level()) != Level::Base) {
    throw std::invalid_argument("generator must be at base level");
  }
  FieldHandle f2 = Field::make(f->characteristic(), f->base_degree(),
                               static_cast<std::uint32_t>(t));
  std::span<const std::uint32_t> data = g.data();
  CodeMatrix lifted(f2, f2->normalize(Level::Ext), g.rows(), g.cols(),
                    std::vector<std::uint32_t>(data.begin(), data.end()));
  return exact_covering_radius(lifted);
}

namespace {

// Rank of the columns `idx` of h (given column-major), by Gaussian
// elimination on a scratch buffer.
int subset_rank(const std::vector<std::vector<std::uint32_t>>& hcol,
                std::span<const int> idx, const FieldHandle& f, Level lv,
                int nk) {
  const int s = static_cast<int>(idx.size());
  std::vector<std::uint32_t> buf(static_cast<std::size_t>(nk) * s);
  for (int c = 0; c < s; ++c) {
    for (int i = 0; i < nk; ++i) {
      buf[static_cast<std::size_t>(i) * s + c] =
          hcol[static_cast<std::size_t>(idx[c])][static_cast<std::size_t>(i)];
    }
  }
  int rank = 0;
  for (int col = 0; col < s && rank < nk; ++col) {
    int pivot = -1;
    for (int i = rank; i < nk; ++i) {
      if (buf[static_cast<std::size_t>(i) * s + col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int c = col; c < s; ++c) {
        std::swap(buf[static_cast<std::size_t>(pivot) * s + c],
                  buf[static_cast<std::size_t>(rank) * s + c]);
      }
    }
    const std::uint32_t pv = buf[static_cast<std::size_t>(rank) * s + col];
    const std::uint32_t pv_inv = f->inv(lv, pv);
    for (int i = rank + 1; i < nk; ++i) {
      const std::uint32_t v = buf[static_cast<std::size_t>(i) * s + col];
      if (v == 0) continue;
      const std::uint32_t factor = f->mul(lv, v, pv_inv);
      for (int c = col; c < s; ++c) {
        buf[static_cast<std::size_t>(i) * s + c] = f->sub(
            lv, buf[static_cast<std::size_t>(i) * s + c],
            f->mul(lv, factor, buf[static_cast<std::size_t>(rank) * s + c]));
      }
    }
    ++rank;
  }
  return rank;
}

// GF(2) fast path: columns as bit masks, rank by basis insertion.
int subset_rank_gf2(const std::vector<std::uint32_t>& masks,
                    std::span<const int> idx) {
  std::uint32_t basis[32] = {0};
  int rank = 0;
  for (int c : idx) {
    std::uint32_t v = masks[static_cast<std::size_t>(c)];
    while (v != 0) {
      const int hi = 31 - std::countl_zero(v);
      if (basis[hi] == 0) {
        basis[hi] = v;
        ++rank;
        break;
      }
      v ^= basis[hi];
    }
  }
  return rank;
}

}  // namespace

std::vector<int> exact_ghw_all(const CodeMatrix& g) {
  const FieldHandle& f = g.field();
  Level lv = f->normalize(g.level());
  const int n = g.cols();
  if (n > kMaxSupportLength) {
    throw std::invalid_argument("length " + std::to_string(n) +
                                " exceeds the subset budget of 24 columns");
  }
  CodeMatrix basis = row_basis(g);
  const int k = basis.rows();
  if (k == 0) throw std::invalid_argument("the zero code has no weights");
  CodeMatrix h = parity_check(basis);
  const int nk = h.rows();

  std::vector<std::vector<std::uint32_t>> hcol(
      static_cast<std::size_t>(n), std::vector<std::uint32_t>(nk));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < nk; ++i) {
      hcol[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
          h.at(i + 1, j + 1);
    }
  }
  const bool gf2 = (f->order(lv) == 2);
  std::vector<std::uint32_t> masks;
  if (gf2) {
    masks.resize(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j) {
      std::uint32_t m = 0;
      for (int i = 0; i < nk; ++i) {
        if (hcol[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) {
          m |= 1u << i;
        }
      }
      masks[static_cast<std::size_t>(j)] = m;
    }
  }

  std::vector<int> d(static_cast<std::size_t>(k) + 1, 0);
  int unset = k;
  for (int s = 1; s <= n && unset > 0; ++s) {
    std::vector<int> idx(static_cast<std::size_t>(s));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      const int rk = gf2 ? subset_rank_gf2(masks, idx)
                         : subset_rank(hcol, idx, f, lv, nk);
      int dim = s - rk;
      if (dim > k) dim = k;
      for (int r = 1; r <= dim; ++r) {
        if (d[static_cast<std::size_t>(r)] == 0) {
          d[static_cast<std::size_t>(r)] = s;
          --unset;
        }
      }
      // next size-s combination of {0, ..., n-1}
      int pos = s - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - s + pos) {
        --pos;
      }
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (int c = pos + 1; c < s; ++c) {
        idx[static_cast<std::size_t>(c)] =
            idx[static_cast<std::size_t>(c - 1)] + 1;
      }
    }
  }
  if (unset != 0) throw std::logic_error("weight enumeration incomplete");
  return std::vector<int>(d.begin() + 1, d.end());
}

int exact_ghw(const CodeMatrix& g, int r) {
  std::vector<int> all = exact_ghw_all(g);
  if (r < 1 || r > static_cast<int>(all.size())) {
    throw std::invalid_argument("weight index " + std::to_string(r) +
                                " outside 1.." + std::to_string(all.size()));
  }
  return all[static_cast<std::size_t>(r - 1)];
}

NearestResult exact_nearest(const CodeMatrix& g, const FVector& v) {
  const FieldHandle& f = g.field();
  if (!f->same_spec(*v.field())) {
    throw std::invalid_argument("field spec mismatch");
  }
  Level lv = f->normalize(g.level());
  if (f->normalize(v.level()) != lv) {
    throw std::invalid_argument("level mismatch between matrix and vector");
  }
  const int k = g.rows();
  const int n = g.cols();
  if (v.length() != n) {
    throw std::invalid_argument("vector length does not match the code");
  }
  const std::uint32_t order = f->order(lv);
  if (power_capped(order, k, kMaxStates) > kMaxStates) {
    throw std::invalid_argument(
        "message space " + std::to_string(order) + "^" + std::to_string(k) +
        " exceeds the search budget 2^24");
  }

  // pref[j] = sum of the first j scaled rows; pref[k] is the codeword.
  std::vector<std::vector<std::uint32_t>> pref(
      static_cast<std::size_t>(k) + 1,
      std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0));
  std::vector<std::uint32_t> x(static_cast<std::size_t>(k), 0);
  std::span<const std::uint32_t> target = v.codes();

  int best_dist = std::numeric_limits<int>::max();
  std::vector<std::uint32_t> best;
  while (true) {
    const std::vector<std::uint32_t>& cw = pref[static_cast<std::size_t>(k)];
    int dist = 0;
    for (int c = 0; c < n; ++c) {
      if (cw[static_cast<std::size_t>(c)] !=
          target[static_cast<std::size_t>(c)]) {
        ++dist;
      }
    }
    if (dist < best_dist) {
      best_dist = dist;
      best = cw;
    }
    int j = k - 1;
    while (j >= 0 && x[static_cast<std::size_t>(j)] == order - 1) {
      x[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
    ++x[static_cast<std::size_t>(j)];
    for (int i = j; i < k; ++i) {
      const std::uint32_t xi = x[static_cast<std::size_t>(i)];
      std::span<const std::uint32_t> row = g.row_span(i + 1);
      const auto& prev = pref[static_cast<std::size_t>(i)];
      auto& cur = pref[static_cast<std::size_t>(i) + 1];
      for (int c = 0; c < n; ++c) {
        cur[static_cast<std::size_t>(c)] =
            f->add(lv, prev[static_cast<std::size_t>(c)],
                   f->mul(lv, xi, row[static_cast<std::size_t>(c)]));
      }
    }
  }
  return NearestResult{FVector(f, lv, std::move(best)), best_dist};
}

}  // namespace chaincover
