#include "chaincover/chain.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace chaincover {

ChainValidation validate_chained(const ChainedMatrix& ch) {
  const CodeMatrix& g = ch.gamma;
  const int k = g.rows(), n = g.cols();
  auto fail = [](int row, std::string reason) {
    return ChainValidation{false, row, std::move(reason)};
  };

  if (g.level() != Level::Base)
    return fail(0, "matrix must live over the base field");
  if (k < 1) return fail(0, "chained matrix needs at least one row");
  if (static_cast<int>(ch.d.size()) != k)
    return fail(0, "d-sequence length differs from row count");
  if (static_cast<int>(ch.perm.size()) != n)
    return fail(0, "perm length differs from column count");
  std::vector<bool> seen_col(n + 1, false);
  for (int p : ch.perm) {
    if (p < 1 || p > n || seen_col[p])
      return fail(0, "perm is not a permutation of 1..n");
    seen_col[p] = true;
  }

  int prev = 0;
  std::vector<bool> covered(n + 1, false);
  int covered_count = 0;
  for (int i = 1; i <= k; ++i) {
    const int di = ch.d[i - 1];
    if (di <= prev || di > n)
      return fail(i, "d-sequence not strictly increasing within 1..n");
    auto row = g.row_span(i);
    for (int j = di; j < n; ++j)
      if (row[j] != 0)
        return fail(i, "row has fewer than n - d_i trailing zeros");
    for (int j = prev; j < di; ++j)
      if (row[j] == 0)
        return fail(i, "row has a zero inside its new block d_{i-1}+1..d_i");
    for (int j = 0; j < di; ++j)
      if (row[j] != 0 && !covered[j + 1]) {
        covered[j + 1] = true;
        ++covered_count;
      }
    if (covered_count != di)
      return fail(i, "support union of rows 1..i has size != d_i");
    prev = di;
  }
  return {};
}

void require_chained(const ChainedMatrix& ch) {
  ChainValidation v = validate_chained(ch);
  if (!v.ok)
    throw std::invalid_argument("chained matrix invalid at row " +
                                std::to_string(v.row) + ": " + v.reason);
}

ChainedMatrix canonicalize_chained(const CodeMatrix& rows) {
  const int k = rows.rows(), n = rows.cols();
  if (k < 1 || n < 1)
    throw std::invalid_argument("canonicalize_chained: empty matrix");
  auto [rref, rank] = row_reduce(rows);
  if (rank != k)
    throw std::invalid_argument(
        "canonicalize_chained: rows are linearly dependent");

  // Greedy column order: walk the rows, appending each row's not-yet-seen
  // support columns in ascending source index; leftover columns go last.
  std::vector<int> order;
  order.reserve(n);
  std::vector<bool> taken(n + 1, false);
  std::vector<int> d;
  d.reserve(k);
  for (int i = 1; i <= k; ++i) {
    auto row = rows.row_span(i);
    int added = 0;
    for (int j = 1; j <= n; ++j) {
      if (row[j - 1] != 0 && !taken[j]) {
        taken[j] = true;
        order.push_back(j);
        ++added;
      }
    }
    if (added == 0)
      throw std::invalid_argument(
          "canonicalize_chained: row " + std::to_string(i) +
          " adds no new support column; this row order has no chained form");
    d.push_back(static_cast<int>(order.size()));
  }
  for (int j = 1; j <= n; ++j)
    if (!taken[j]) order.push_back(j);

  std::vector<std::uint32_t> data;
  data.reserve(static_cast<std::size_t>(k) * n);
  for (int i = 1; i <= k; ++i)
    for (int j : order) data.push_back(rows.at(i, j));

  ChainedMatrix ch{CodeMatrix(rows.field(), rows.level(), k, n,
                              std::move(data)),
                   std::move(d), std::move(order)};
  require_chained(ch);
  return ch;
}

long mu_from_d(const std::vector<int>& d, int n, std::uint32_t q, int t) {
  if (t < 1) throw std::invalid_argument("bound_mu: t must be >= 1");
  // q^t saturated just past n: every gap is <= n, so larger powers act the
  // same as n + 1 in the ceilings.
  std::uint64_t qt = 1;
  for (int i = 0; i < t && qt <= static_cast<std::uint64_t>(n); ++i) qt *= q;
  long sum = 0;
  int prev = 0;
  for (int di : d) {
    const std::uint64_t gap = static_cast<std::uint64_t>(di - prev);
    sum += static_cast<long>((gap + qt - 1) / qt);
    prev = di;
  }
  return static_cast<long>(n) - sum;
}

long bound_mu(const ChainedMatrix& ch, int t) {
  if (t < 1) throw std::invalid_argument("bound_mu: t must be >= 1");
  require_chained(ch);
  return mu_from_d(ch.d, ch.gamma.cols(), ch.gamma.field()->base_order(), t);
}

}  // namespace chaincover
