#pragma once

#include <span>
#include <utility>
#include <vector>

#include "chaincover/field.hpp"

namespace chaincover {

// Dense vector over one level of a field.  Entries are element codes; all
// entries share the field spec and level by construction.  Coordinates are
// 1-indexed in every public interface.
class FVector {
 public:
  FVector(FieldHandle field, Level level, std::vector<std::uint32_t> codes);

  const FieldHandle& field() const { return field_; }
  Level level() const { return level_; }
  int length() const { return static_cast<int>(codes_.size()); }

  std::uint32_t at(int pos) const;  // pos in [1, length()]
  FieldElement element(int pos) const { return {field_, level_, at(pos)}; }
  std::span<const std::uint32_t> codes() const { return codes_; }

  bool operator==(const FVector& o) const;
  bool operator!=(const FVector& o) const { return !(*this == o); }

 private:
  FieldHandle field_;
  Level level_;
  std::vector<std::uint32_t> codes_;
};

// Dense row-major matrix over one level of a field.  Rows are generator
// rows; no rank constraint is imposed at construction (operations that need
// full rank validate it themselves).  Degenerate shapes (0 x n, k x 0) are
// allowed so that e.g. the parity check of the full space stays expressible.
class CodeMatrix {
 public:
  CodeMatrix(FieldHandle field, Level level, int rows, int cols,
             std::vector<std::uint32_t> data);
  static CodeMatrix from_rows(FieldHandle field, Level level,
                              const std::vector<std::vector<std::uint32_t>>& rows);

  const FieldHandle& field() const { return field_; }
  Level level() const { return level_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::uint32_t at(int i, int j) const;  // 1-indexed
  std::span<const std::uint32_t> row_span(int i) const;  // i 1-indexed
  FVector row(int i) const;
  std::span<const std::uint32_t> data() const { return data_; }

  bool operator==(const CodeMatrix& o) const;
  bool operator!=(const CodeMatrix& o) const { return !(*this == o); }

 private:
  FieldHandle field_;
  Level level_;
  int rows_, cols_;
  std::vector<std::uint32_t> data_;
};

// Reduced row echelon form plus rank.  Deterministic: pivots are chosen
// top-down in left-to-right column order, rows are normalized to leading 1.
std::pair<CodeMatrix, int> row_reduce(const CodeMatrix& m);

// Parity-check matrix H of the row space of G: H has n - k rows with
// G H^T = 0 and rank n - k.  G must have full row rank (k <= n); a
// rank-deficient G throws.  For k = n the result is the empty 0 x n matrix.
CodeMatrix parity_check(const CodeMatrix& g);

// 1-indexed positions of nonzero entries, ascending.
std::vector<int> support(const FVector& v);
int weight(const FVector& v);
// Union of the supports, ascending.
std::vector<int> joint_support(std::span<const FVector> vs);

// Columns of m selected by the 1-indexed set `cols`, original order
// preserved (duplicates rejected).  An empty set yields a k x 0 matrix.
CodeMatrix submatrix_columns(const CodeMatrix& m, std::span<const int> cols);

// Membership of v in the row space of m (solves against the reduced form).
bool in_row_space(const CodeMatrix& m, const FVector& v);

// Codeword sum_i msg[i] * row_i; msg holds k codes.
FVector encode(const CodeMatrix& g, std::span<const std::uint32_t> msg);

// Entry-wise vector arithmetic (same spec, level, and length required).
FVector add(const FVector& a, const FVector& b);
FVector sub(const FVector& a, const FVector& b);
FVector scale(const FieldElement& c, const FVector& v);
int hamming_distance(const FVector& a, const FVector& b);

}  // namespace chaincover
