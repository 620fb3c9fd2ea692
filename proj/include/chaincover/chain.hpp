#pragma once

#include <string>
#include <vector>

#include "chaincover/linalg.hpp"

namespace chaincover {

// Generator matrix in chained form over a base field GF(q):
//   * d is strictly increasing with d_k <= n,
//   * row i is zero past position d_i (at least n - d_i trailing zeros),
//   * the union of the supports of rows 1..i has size exactly d_i (so it is
//     precisely the prefix {1, ..., d_i}),
//   * the entries of row i at positions d_{i-1}+1 .. d_i are all nonzero.
// Full row rank follows from that block structure: row i is the only row
// among 1..i that touches positions d_{i-1}+1 .. d_i.
//
// perm records the column permutation that produced the chained form:
// output column j came from column perm[j] of the source matrix (1-indexed;
// identity when the matrix was born chained).
struct ChainedMatrix {
  CodeMatrix gamma;
  std::vector<int> d;
  std::vector<int> perm;
};

struct ChainValidation {
  bool ok = true;
  int row = 0;          // first violating row (0 when shape-level)
  std::string reason;   // empty when ok
};

// Checks every chained-form invariant in O(nk); names the first violation.
ChainValidation validate_chained(const ChainedMatrix& ch);

// validate_chained, throwing std::invalid_argument on failure.  Every
// consumer of a ChainedMatrix runs this (it is cheap).
void require_chained(const ChainedMatrix& ch);

// Greedily permutes columns so the given rows (in their given order) become
// chained: each row's new-support columns are appended in ascending source
// index, untouched columns go last.  Throws on linearly dependent rows and
// on rows that add no new support (such a row order admits no chained form).
ChainedMatrix canonicalize_chained(const CodeMatrix& rows);

// Upper bound on the t-th generalized covering radius read off the chain:
//   mu_t = n - sum_r ceil((d_r - d_{r-1}) / q^t),  d_0 = 0.
// Requires t >= 1.  mu_t is non-decreasing in t and tops out at n - k.
long bound_mu(const ChainedMatrix& ch, int t);

// Formula core shared with callers that have only the d-sequence.
long mu_from_d(const std::vector<int>& d, int n, std::uint32_t q, int t);

}  // namespace chaincover
