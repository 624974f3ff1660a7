#pragma once

#include <vector>

#include "weylkit/coxeter.hpp"

namespace weylkit {

// One floor per entry: the double-coset minimum of w at that floor and the
// subset indexing the floor.  The subsets strictly decrease until the final
// entry, which satisfies the stability predicate.
struct TowerChain {
  DiagramAut eps;
  SimpleSubset start;
  GroupElement w;
  std::vector<std::pair<GroupElement, SimpleSubset>> steps;
  SimpleSubset j_infinity;
};

// ^{eps(J)} W, the index set of the piece partition.
std::vector<GroupElement> piece_indices(const CoxeterDatum& datum, SimpleSubset J,
                                        const DiagramAut& eps);

// eps^{-1}(Ad(w) J) = J, i.e. Ad(w) J is a set of simples equal to eps(J).
// Requires w in ^{eps(J)} W.
bool is_stable_pair(const CoxeterDatum& datum, SimpleSubset J, const GroupElement& w,
                    const DiagramAut& eps);

// Iterates (J, w) -> (J_1, w) with J_1 = {s in J : Ad(w0) t = eps(s) for some
// t in J}, w0 = min(W_{eps(J)} w W_J), until the subset stabilizes.
TowerChain j_infinity(const CoxeterDatum& datum, SimpleSubset J, const GroupElement& w,
                      const DiagramAut& eps);

// {w in ^{eps(J)} W : eps^{-1}(Ad(w) J) = J}; a subgroup of W when eps = id.
std::vector<GroupElement> cw_set(const CoxeterDatum& datum, SimpleSubset J,
                                 const DiagramAut& eps);

}  // namespace weylkit
