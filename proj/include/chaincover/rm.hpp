#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "chaincover/chain.hpp"
#include "chaincover/linalg.hpp"

namespace chaincover {

// Parameters of the q-ary Reed-Muller code RM_q(r, m): evaluations of
// m-variate polynomials of total degree <= r (per-variable degree < q) over
// all q^m points.  q must be a prime power; r is clipped to (q-1)m, the
// largest meaningful order.  Column j corresponds to the evaluation point
// whose coordinates are read off the base-q digits of j-1, most significant
// digit first: digit b of x_m picks the value gamma^{q-2-b} (and 0 for the
// last digit value), so each variable runs gamma^{q-2}, ..., gamma, 1, 0
// left to right.
struct RMParams {
  std::uint32_t q;
  int r;  // clipped order
  int m;
  int n;  // q^m
  FieldHandle field;  // GF(q) with ext degree 1

  RMParams(std::uint32_t q, int r, int m);
  // Number of admissible monomials = dimension of the code.
  long long dimension() const;
};

// rho(r, m) = sum_{i=0}^{r} C(m, i), with C(m, i) = 0 for i > m.
// This is the dimension of the binary RM(r, m).  Inputs must be >= 0.
long long rho(int r, int m);

// The unique decomposition t = sum_i rho(r_i, m_i) with r_1 = largest
// feasible <= r, r_i non-increasing, and m_i - r_i = m - r - i + 1.
struct CanonicalRep {
  std::vector<std::pair<int, int>> pairs;  // (r_i, m_i)
  long long t;
  int r, m;
};
CanonicalRep canonical_rep(long long t, int r, int m);

// t-th generalized Hamming weight of the binary RM(r, m):
// sum of 2^{m_i} over the canonical representation.  1 <= t <= rho(r, m).
long long ghw_binary(long long t, int r, int m);

// Block-recursive generator matrix of RM_q(r, m): with w = min(r, q-1),
// block row i (i = w down to 0) holds a^i * G(r-i, m-1) in the column block
// where x_m = a; the recursion bottoms out at m = 0 with the matrix [1].
CodeMatrix rm_generator_blocks(std::uint32_t q, int r, int m);

// Chained generator matrix of RM_q(r, m).  Block row i scales the chained
// generator of RM_q(r-i, m-1) by h_i(a) in the column block where x_m = a,
// h_i(x) = prod_{j<i} (x - a_j) over the value sequence
// (a_0, a_1, a_2, ...) = (0, 1, gamma, gamma^2, ...).  h_i vanishes exactly
// on the i rightmost blocks, which is what nests the supports.  Diagonal
// blocks keep the scalar h_i(a_i); scaling rows preserves both the code and
// the chain structure.  Results are memoized per (q, r, m) behind a mutex
// (concurrent readers safe, single construction per key).
std::shared_ptr<const ChainedMatrix> chained_rm(std::uint32_t q, int r, int m);

// The d-sequence of chained_rm(q, r, m), computed by the same recursion on
// support increments without materializing any matrix.
std::vector<int> ghw_rm(std::uint32_t q, int r, int m);

}  // namespace chaincover
