#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "chaincover/chain.hpp"

namespace chaincover {

// How a tie between equally frequent block scalars is resolved: by the
// canonical element order (ascending code), taking its smallest or largest
// member.
enum class TieBreak { SmallestScalar, LargestScalar };

// Outcome of covering t target vectors v_1..v_t at once:
//   * codewords[i]  - codeword of the base code assigned to v_{i+1},
//   * residuals[i]  - v_{i+1} - codewords[i],
//   * support       - joint support of the residuals (1-indexed, ascending),
//   * certified_bound - a-priori cap on |support| that the run is guaranteed
//                       to meet (checked before returning),
//   * scalar_trace  - for the chained algorithm, the extension scalar chosen
//                     at row i stored at index i-1 (empty for the recursive
//                     variant, which has no single scalar sequence).
struct CoverResult {
  std::vector<FVector> codewords;
  std::vector<FVector> residuals;
  std::vector<int> support;
  long certified_bound = 0;
  std::vector<std::uint32_t> scalar_trace;
  // Diagnostics of the recursive variant (-1 for the chained algorithm):
  // the joint-pass and independent-pass support sizes it chose between;
  // |support| is always their minimum.
  long joint_support_size = -1;
  long split_support_size = -1;
};

// The most frequent quotient block[j] / row[j] together with its
// multiplicity.  Both spans live at the same (extension) level, have equal
// nonzero length, and row must be nonzero everywhere.  By pigeonhole the
// multiplicity is at least ceil(len / order).  Ties resolve per `policy`.
std::pair<FieldElement, int> pigeonhole_scalar(
    std::span<const FieldElement> block, std::span<const FieldElement> row,
    TieBreak policy);

// Covers t base-field vectors with one sweep over a chained generator
// matrix.  The targets are packed into one vector over the degree-t
// extension; rows are processed last to first, each contributing the most
// frequent quotient over its new-support block.  Zeroed positions are never
// touched again, which certifies |support| <= bound_mu(ch, t).
CoverResult cover_t(const ChainedMatrix& ch, std::span<const FVector> vs,
                    TieBreak policy = TieBreak::SmallestScalar);

// Divide-and-conquer cover for the binary length-2^m order-r code: splits
// off the top variable, covers the half where it vanishes at order r, the
// correction at order r-1, and bottoms out in cover_t on chained generators
// of order <= 1.  Runs both the packed (joint) pass and t independent
// single-target passes, and returns whichever leaves the smaller joint
// support (the packed pass on ties).  certified_bound is the smaller of
// recursive_bound(t, r, m) and t * recursive_bound(1, r, m).
CoverResult cover_recursive_rm(int r, int m, std::span<const FVector> vs,
                               TieBreak policy = TieBreak::SmallestScalar);

// Support cap certified by the recursive cover:
//   B(t, r, m) = 0                        for r >= m,
//   B(t, r, m) = bound_mu of the chained generator   for r <= 1,
//   B(t, r, m) = B(t, r, m-1) + B(t, r-1, m-1)       otherwise.
long recursive_bound(int t, int r, int m);

}  // namespace chaincover
