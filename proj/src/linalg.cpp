#include "chaincover/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace chaincover {
namespace {

void check_same_shape(const FVector& a, const FVector& b, const char* what) {
  if (!a.field()->same_spec(*b.field()) || a.level() != b.level())
    throw std::invalid_argument(std::string(what) +
                                ": mismatched field specs");
  if (a.length() != b.length())
    throw std::invalid_argument(std::string(what) + ": length mismatch");
}

}  // namespace

FVector::FVector(FieldHandle field, Level level,
                 std::vector<std::uint32_t> codes)
    : field_(std::move(field)), level_(Level::Base), codes_(std::move(codes)) {
  if (!field_) throw std::invalid_argument("FVector: null field");
  level_ = field_->normalize(level);
  const std::uint32_t size = field_->order(level_);
  for (std::uint32_t c : codes_)
    if (c >= size)
      throw std::invalid_argument("FVector: entry code out of range");
}

std::uint32_t FVector::at(int pos) const {
  if (pos < 1 || pos > length())
    throw std::out_of_range("FVector: position " + std::to_string(pos) +
                            " out of range [1, " + std::to_string(length()) +
                            "]");
  return codes_[static_cast<std::size_t>(pos) - 1];
}

bool FVector::operator==(const FVector& o) const {
  return field_->same_spec(*o.field_) && level_ == o.level_ &&
         codes_ == o.codes_;
}

CodeMatrix::CodeMatrix(FieldHandle field, Level level, int rows, int cols,
                       std::vector<std::uint32_t> data)
    : field_(std::move(field)),
      level_(Level::Base),
      rows_(rows),
      cols_(cols),
      data_(std::move(data)) {
  if (!field_) throw std::invalid_argument("CodeMatrix: null field");
  if (rows_ < 0 || cols_ < 0)
    throw std::invalid_argument("CodeMatrix: negative dimensions");
  level_ = field_->normalize(level);
  if (data_.size() != static_cast<std::size_t>(rows_) * cols_)
    throw std::invalid_argument("CodeMatrix: data size does not match shape");
  const std::uint32_t size = field_->order(level_);
  for (std::uint32_t c : data_)
    if (c >= size)
      throw std::invalid_argument("CodeMatrix: entry code out of range");
}

CodeMatrix CodeMatrix::from_rows(
    FieldHandle field, Level level,
    const std::vector<std::vector<std::uint32_t>>& rows) {
  const int k = static_cast<int>(rows.size());
  const int n = k == 0 ? 0 : static_cast<int>(rows.front().size());
  std::vector<std::uint32_t> data;
  data.reserve(static_cast<std::size_t>(k) * n);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n)
      throw std::invalid_argument("CodeMatrix: ragged rows");
    data.insert(data.end(), r.begin(), r.end());
  }
  return CodeMatrix(std::move(field), level, k, n, std::move(data));
}

std::uint32_t CodeMatrix::at(int i, int j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_)
    throw std::out_of_range("CodeMatrix: index (" + std::to_string(i) + ", " +
                            std::to_string(j) + ") out of range");
  return data_[static_cast<std::size_t>(i - 1) * cols_ + (j - 1)];
}

std::span<const std::uint32_t> CodeMatrix::row_span(int i) const {
  if (i < 1 || i > rows_)
    throw std::out_of_range("CodeMatrix: row index out of range");
  return {data_.data() + static_cast<std::size_t>(i - 1) * cols_,
          static_cast<std::size_t>(cols_)};
}

FVector CodeMatrix::row(int i) const {
  auto s = row_span(i);
  return FVector(field_, level_, std::vector<std::uint32_t>(s.begin(), s.end()));
}

bool CodeMatrix::operator==(const CodeMatrix& o) const {
  return field_->same_spec(*o.field_) && level_ == o.level_ &&
         rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::pair<CodeMatrix, int> row_reduce(const CodeMatrix& m) {
  const Field& f = *m.field();
  const Level lv = m.level();
  const int k = m.rows(), n = m.cols();
  std::vector<std::uint32_t> a(m.data().begin(), m.data().end());
  auto entry = [&](int i, int j) -> std::uint32_t& {
    return a[static_cast<std::size_t>(i) * n + j];
  };

  int pivot_row = 0;
  for (int col = 0; col < n && pivot_row < k; ++col) {
    int found = -1;
    for (int i = pivot_row; i < k; ++i)
      if (entry(i, col) != 0) {
        found = i;
        break;
      }
    if (found < 0) continue;
    if (found != pivot_row)
      for (int j = 0; j < n; ++j)
        std::swap(entry(found, j), entry(pivot_row, j));
    const std::uint32_t scale = f.inv(lv, entry(pivot_row, col));
    for (int j = col; j < n; ++j)
      entry(pivot_row, j) = f.mul(lv, entry(pivot_row, j), scale);
    for (int i = 0; i < k; ++i) {
      if (i == pivot_row) continue;
      const std::uint32_t factor = entry(i, col);
      if (factor == 0) continue;
      for (int j = col; j < n; ++j)
        entry(i, j) =
            f.sub(lv, entry(i, j), f.mul(lv, factor, entry(pivot_row, j)));
    }
    ++pivot_row;
  }
  return {CodeMatrix(m.field(), lv, k, n, std::move(a)), pivot_row};
}

CodeMatrix parity_check(const CodeMatrix& g) {
  const Field& f = *g.field();
  const Level lv = g.level();
  const int k = g.rows(), n = g.cols();
  auto [rref, rank] = row_reduce(g);
  if (rank != k)
    throw std::invalid_argument(
        "parity_check: generator matrix is rank-deficient (rank " +
        std::to_string(rank) + " < " + std::to_string(k) + ")");

  // Pivot columns of the reduced form, then one dual row per free column f0:
  // h[f0] = 1 and h[pivot_i] = -rref[i][f0].
  std::vector<int> pivot_cols;
  pivot_cols.reserve(k);
  for (int i = 1, col = 1; i <= k; ++i) {
    while (col <= n && rref.at(i, col) == 0) ++col;
    pivot_cols.push_back(col);
  }
  std::vector<bool> is_pivot(n + 1, false);
  for (int c : pivot_cols) is_pivot[c] = true;

  std::vector<std::uint32_t> h;
  h.reserve(static_cast<std::size_t>(n - k) * n);
  for (int f0 = 1; f0 <= n; ++f0) {
    if (is_pivot[f0]) continue;
    std::vector<std::uint32_t> row(n, 0);
    row[f0 - 1] = 1;
    for (int i = 0; i < k; ++i)
      row[pivot_cols[i] - 1] = f.neg(lv, rref.at(i + 1, f0));
    h.insert(h.end(), row.begin(), row.end());
  }
  return CodeMatrix(g.field(), lv, n - k, n, std::move(h));
}

std::vector<int> support(const FVector& v) {
  std::vector<int> s;
  auto codes = v.codes();
  for (int j = 0; j < v.length(); ++j)
    if (codes[j] != 0) s.push_back(j + 1);
  return s;
}

int weight(const FVector& v) {
  int w = 0;
  for (std::uint32_t c : v.codes()) w += c != 0;
  return w;
}

std::vector<int> joint_support(std::span<const FVector> vs) {
  if (vs.empty()) return {};
  for (const auto& v : vs) check_same_shape(vs.front(), v, "joint_support");
  std::vector<bool> hit(static_cast<std::size_t>(vs.front().length()) + 1,
                        false);
  for (const auto& v : vs) {
    auto codes = v.codes();
    for (int j = 0; j < v.length(); ++j)
      if (codes[j] != 0) hit[j + 1] = true;
  }
  std::vector<int> s;
  for (int j = 1; j < static_cast<int>(hit.size()); ++j)
    if (hit[j]) s.push_back(j);
  return s;
}

CodeMatrix submatrix_columns(const CodeMatrix& m, std::span<const int> cols) {
  std::set<int> seen;
  for (int c : cols) {
    if (c < 1 || c > m.cols())
      throw std::invalid_argument("submatrix_columns: column " +
                                  std::to_string(c) + " out of range");
    if (!seen.insert(c).second)
      throw std::invalid_argument("submatrix_columns: duplicate column " +
                                  std::to_string(c));
  }
  // Original column order is preserved regardless of the order given.
  std::vector<int> ordered(seen.begin(), seen.end());
  std::vector<std::uint32_t> data;
  data.reserve(static_cast<std::size_t>(m.rows()) * ordered.size());
  for (int i = 1; i <= m.rows(); ++i)
    for (int c : ordered) data.push_back(m.at(i, c));
  return CodeMatrix(m.field(), m.level(), m.rows(),
                    static_cast<int>(ordered.size()), std::move(data));
}

bool in_row_space(const CodeMatrix& m, const FVector& v) {
  if (!m.field()->same_spec(*v.field()) || m.level() != v.level())
    throw std::invalid_argument("in_row_space: mismatched field specs");
  if (m.cols() != v.length())
    throw std::invalid_argument("in_row_space: length mismatch");
  const Field& f = *m.field();
  const Level lv = m.level();
  auto [rref, rank] = row_reduce(m);

  // Reduce v by the pivots; membership iff the residue is zero.
  std::vector<std::uint32_t> r(v.codes().begin(), v.codes().end());
  for (int i = 1, col = 1; i <= rank; ++i) {
    while (col <= m.cols() && rref.at(i, col) == 0) ++col;
    if (col > m.cols()) break;
    const std::uint32_t factor = r[col - 1];
    if (factor != 0)
      for (int j = col; j <= m.cols(); ++j)
        r[j - 1] = f.sub(lv, r[j - 1], f.mul(lv, factor, rref.at(i, j)));
  }
  return std::all_of(r.begin(), r.end(),
                     [](std::uint32_t c) { return c == 0; });
}

FVector encode(const CodeMatrix& g, std::span<const std::uint32_t> msg) {
  if (static_cast<int>(msg.size()) != g.rows())
    throw std::invalid_argument("encode: message length must equal row count");
  const Field& f = *g.field();
  const Level lv = g.level();
  std::vector<std::uint32_t> out(static_cast<std::size_t>(g.cols()), 0);
  for (int i = 0; i < g.rows(); ++i) {
    const std::uint32_t c = msg[i];
    if (c == 0) continue;
    auto row = g.row_span(i + 1);
    for (int j = 0; j < g.cols(); ++j)
      out[j] = f.add(lv, out[j], f.mul(lv, c, row[j]));
  }
  return FVector(g.field(), lv, std::move(out));
}

FVector add(const FVector& a, const FVector& b) {
  check_same_shape(a, b, "add");
  const Field& f = *a.field();
  std::vector<std::uint32_t> out(a.codes().begin(), a.codes().end());
  auto bc = b.codes();
  for (int j = 0; j < a.length(); ++j) out[j] = f.add(a.level(), out[j], bc[j]);
  return FVector(a.field(), a.level(), std::move(out));
}

FVector sub(const FVector& a, const FVector& b) {
  check_same_shape(a, b, "sub");
  const Field& f = *a.field();
  std::vector<std::uint32_t> out(a.codes().begin(), a.codes().end());
  auto bc = b.codes();
  for (int j = 0; j < a.length(); ++j) out[j] = f.sub(a.level(), out[j], bc[j]);
  return FVector(a.field(), a.level(), std::move(out));
}

FVector scale(const FieldElement& c, const FVector& v) {
  if (!c.field()->same_spec(*v.field()) ||
      v.field()->normalize(c.level()) != v.level())
    throw std::invalid_argument("scale: mismatched field specs");
  const Field& f = *v.field();
  std::vector<std::uint32_t> out(v.codes().begin(), v.codes().end());
  for (auto& x : out) x = f.mul(v.level(), c.code(), x);
  return FVector(v.field(), v.level(), std::move(out));
}

int hamming_distance(const FVector& a, const FVector& b) {
  check_same_shape(a, b, "hamming_distance");
  int d = 0;
  auto ac = a.codes(), bc = b.codes();
  for (int j = 0; j < a.length(); ++j) d += ac[j] != bc[j];
  return d;
}

}  // namespace chaincover
