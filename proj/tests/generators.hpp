// Random space generators for property tests.
#pragma once

#include <random>
#include <vector>

#include "borsuk/space.hpp"

namespace gen {

using borsuk::abelian::FgAbelianGroup;
using borsuk::spaces::SpaceExpr;

inline FgAbelianGroup small_group(std::mt19937_64& rng) {
  static const std::vector<FgAbelianGroup> pool{
      FgAbelianGroup::trivial(),
      FgAbelianGroup::free(1),
      FgAbelianGroup::free(2),
      FgAbelianGroup::cyclic(2),
      FgAbelianGroup::cyclic(3),
      FgAbelianGroup::cyclic(4),
      FgAbelianGroup::cyclic(6),
      FgAbelianGroup::from_invariant_factors(0, {2, 4}),
      FgAbelianGroup::from_invariant_factors(1, {3}),
  };
  return pool[rng() % pool.size()];
}

/// Leaf with computable homology.
inline SpaceExpr supported_leaf(std::mt19937_64& rng) {
  switch (rng() % 6) {
    case 0: return SpaceExpr::point();
    case 1: return SpaceExpr::sphere(1 + static_cast<int>(rng() % 5));
    case 2: return SpaceExpr::moore(small_group(rng), 2 + static_cast<int>(rng() % 3));
    case 3: return SpaceExpr::complex_projective(2 + static_cast<int>(rng() % 2));
    case 4: {
      static const std::vector<int> m{2, 3, 5};
      return SpaceExpr::eilenberg_maclane(FgAbelianGroup::cyclic(m[rng() % m.size()]), 1);
    }
    default: return SpaceExpr::eilenberg_maclane(FgAbelianGroup::free(1), 2);
  }
}

/// Small wedge/product trees of supported leaves.
inline SpaceExpr supported_space(std::mt19937_64& rng, int depth = 2) {
  if (depth == 0 || rng() % 3 == 0) return supported_leaf(rng);
  std::vector<SpaceExpr> children;
  const std::size_t n = 2 + rng() % 2;
  for (std::size_t i = 0; i < n; ++i) children.push_back(supported_space(rng, depth - 1));
  if (rng() % 2) return SpaceExpr::wedge(std::move(children));
  return SpaceExpr::product(std::move(children));
}

/// Wedge of spheres given dimension -> multiplicity.
inline SpaceExpr sphere_wedge(const std::vector<std::pair<int, int>>& blocks) {
  std::vector<SpaceExpr> parts;
  for (auto [dim, count] : blocks) {
    for (int i = 0; i < count; ++i) parts.push_back(SpaceExpr::sphere(dim));
  }
  if (parts.empty()) return SpaceExpr::point();
  if (parts.size() == 1) return parts.front();
  return SpaceExpr::wedge(std::move(parts));
}

}  // namespace gen
