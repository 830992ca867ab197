#include "gmlab/permutation.hpp"

#include <queue>
#include <set>

namespace gmlab {

Permutation compose(const Permutation& f, const Permutation& g) {
  Permutation h(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) h[i] = f[g[i]];
  return h;
}

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 0 || static_cast<std::size_t>(v) >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::vector<Permutation> enumerate_group(const std::vector<Permutation>& generators,
                                         std::size_t cap) {
  if (generators.empty()) return {};
  const std::size_t n = generators.front().size();
  Permutation id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<int>(i);

  std::set<Permutation> seen{id};
  std::queue<Permutation> frontier;
  frontier.push(id);
  while (!frontier.empty()) {
    const Permutation cur = frontier.front();
    frontier.pop();
    for (const Permutation& g : generators) {
      Permutation next = compose(g, cur);
      if (seen.insert(next).second) {
        if (seen.size() > cap) return {};
        frontier.push(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

GroupClosure close_group(const std::vector<Permutation>& generators, std::size_t cap) {
  if (generators.empty()) return {true, 1};
  const std::size_t n = generators.front().size();
  Permutation id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<int>(i);

  std::set<Permutation> seen{id};
  std::queue<Permutation> frontier;
  frontier.push(id);
  while (!frontier.empty()) {
    const Permutation cur = frontier.front();
    frontier.pop();
    for (const Permutation& g : generators) {
      Permutation next = compose(g, cur);
      if (seen.insert(next).second) {
        if (seen.size() > cap) return {false, seen.size()};
        frontier.push(std::move(next));
      }
    }
  }
  return {true, seen.size()};
}

}  // namespace gmlab
