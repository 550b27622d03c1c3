#pragma once

#include <vector>

#include "relaxmatch/instance.hpp"
#include "relaxmatch/matching.hpp"

namespace relaxmatch {

// Integer edge weights that make one maximum-weight matching computation
// realise the chosen guarantee. All values are exact: with w* = |X| + 1,
// U = max relaxable u(e) (1 if there are none) and D the least common
// multiple of the u denominators,
//
//   snh-sb  w(e ∈ E) = w*^2·U·D      w(e ∈ E_R) = w*·U·D − u(e)·D
//   wnh-wb  w(e ∈ E) = w*·U·D        w(e ∈ E_R) as above
//   snh-wb  as wnh-wb, except every edge (compatible or relaxable) whose
//           agent lies in Γ(E) gets weight −U·D
//
// where u ≡ 1 under Size aggregation and u = discomfort under TotalCost.
// dummy_weight strictly exceeds the sum of all positive edge weights, so a
// dummy agent is always preferred over any combination of real edges.
struct WeightScheme {
  std::vector<WeightedEdge> compatible;  // aligned with Instance::compatible()
  std::vector<WeightedEdge> relaxable;   // aligned with Instance::relaxable()
  BigInt dummy_weight;
  BigInt scale;  // D, handy for reporting
};

WeightScheme build_weights(const Instance& instance, Guarantee guarantee,
                           Aggregation aggregation);

}  // namespace relaxmatch
