#pragma once

#include <cstddef>
#include <vector>

namespace gmlab {

using Permutation = std::vector<int>;  // image table, perm[i] = image of i

/// Breadth-first product closure of a generating set of permutations.
struct GroupClosure {
  bool complete = false;  // false when the element cap was hit
  std::size_t order = 0;  // exact order when complete, else the count reached
};

Permutation compose(const Permutation& f, const Permutation& g);  // x -> f[g[x]]
bool is_permutation(const Permutation& p);

GroupClosure close_group(const std::vector<Permutation>& generators, std::size_t cap);

/// All elements, for set comparisons at desk scale; empty when the cap is hit.
std::vector<Permutation> enumerate_group(const std::vector<Permutation>& generators,
                                         std::size_t cap);

}  // namespace gmlab
