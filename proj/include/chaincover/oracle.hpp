#pragma once

#include <vector>

#include "chaincover/linalg.hpp"

namespace chaincover {

// Exhaustive reference computations.  All of them enforce explicit budgets
// and throw std::invalid_argument when a request would exceed them, so tests
// fail loudly instead of hanging.

// Exact covering radius of the row space of g, at g's own level: the largest
// coset-leader weight, found by breadth-first search over the syndrome space
// of a parity-check matrix (edges add a scalar multiple of one column).
// Budget: Q^(n-k) <= 2^24 states, Q the order of g's level.
int exact_covering_radius(const CodeMatrix& g);

// Exact t-th generalized covering radius: the covering radius of the same
// generator entries read over the degree-t extension field.  g must be at
// base level; base codes are valid extension codes, so the matrix carries
// over unchanged.
int exact_generalized_radius(const CodeMatrix& g, int t);

// Exact generalized Hamming weights of the row space of g: d_r is the
// smallest support size of an r-dimensional subcode, equivalently the
// smallest |I| with |I| - rank(H_I) >= r for the parity-check matrix H.
// Column subsets are enumerated in ascending size.  Budget: n <= 24.
int exact_ghw(const CodeMatrix& g, int r);
std::vector<int> exact_ghw_all(const CodeMatrix& g);

struct NearestResult {
  FVector codeword;
  int distance;
};

// Closest codeword to v, by enumerating all Q^k messages in lexicographic
// order (first message symbol most significant, symbols in canonical code
// order).  Only a strictly smaller distance replaces the incumbent, so ties
// resolve to the lexicographically smallest message.  Budget: Q^k <= 2^24.
NearestResult exact_nearest(const CodeMatrix& g, const FVector& v);

}  // namespace chaincover
