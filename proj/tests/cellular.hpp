// Cellular chain complexes of the basic families and their tensor products.
// Homology is read off boundary matrices, so product homology computed here
// does not go through the Kunneth formula.
#pragma once

#include <stdexcept>
#include <vector>

#include "borsuk/abelian.hpp"
#include "borsuk/int_matrix.hpp"
#include "borsuk/space.hpp"

namespace cellular {

using borsuk::IntMatrix;
using borsuk::Integer;
using borsuk::abelian::FgAbelianGroup;
using borsuk::spaces::SpaceExpr;

/// ranks[n] cells in degree n; boundary[n] : C_n -> C_{n-1}, a
/// ranks[n-1] x ranks[n] matrix (boundary[0] is 0 x ranks[0]).
struct ChainComplex {
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> boundary;
};

inline ChainComplex empty_complex(int top) {
  ChainComplex c;
  c.ranks.assign(static_cast<std::size_t>(top) + 1, 0);
  return c;
}

inline void finish(ChainComplex& c) {
  c.boundary.clear();
  for (std::size_t n = 0; n < c.ranks.size(); ++n) {
    c.boundary.emplace_back(n == 0 ? 0 : c.ranks[n - 1], c.ranks[n]);
  }
}

/// One cell in each listed degree, zero differentials.
inline ChainComplex cells(int top, const std::vector<int>& degrees) {
  ChainComplex c = empty_complex(top);
  for (int d : degrees) {
    if (d <= top) ++c.ranks[d];
  }
  finish(c);
  return c;
}

/// Leaf spaces: point, sphere, M(Z/m, n), CP^n, K(Z/m, 1), K(Z, 2).
inline ChainComplex of_leaf(const SpaceExpr& x, int top) {
  using namespace borsuk::spaces;
  if (x.is<Point>()) return cells(top, {0});
  if (x.is<Sphere>()) return cells(top, {0, x.as<Sphere>().dim});
  if (x.is<ComplexProjective>()) {
    std::vector<int> ds;
    for (int k = 0; k <= x.as<ComplexProjective>().n; ++k) ds.push_back(2 * k);
    return cells(top, ds);
  }
  if (x.is<Moore>() && x.as<Moore>().group.is_cyclic() && x.as<Moore>().group.is_finite()) {
    const int n = x.as<Moore>().degree;
    ChainComplex c = cells(top, {0, n, n + 1});
    if (n + 1 <= top) c.boundary[n + 1](0, 0) = x.as<Moore>().group.invariant_factors()[0];
    return c;
  }
  if (x.is<EilenbergMacLane>()) {
    const auto& k = x.as<EilenbergMacLane>();
    if (k.degree == 2 && k.group == FgAbelianGroup::free(1)) {
      std::vector<int> ds;
      for (int d = 0; d <= top; d += 2) ds.push_back(d);
      return cells(top, ds);
    }
    if (k.degree == 1 && k.group.is_cyclic() && k.group.is_finite()) {
      // Infinite lens space: one cell per degree, d_{2i} = m, d_{2i+1} = 0.
      std::vector<int> ds;
      for (int d = 0; d <= top; ++d) ds.push_back(d);
      ChainComplex c = cells(top, ds);
      for (int d = 2; d <= top; d += 2) c.boundary[d](0, 0) = k.group.invariant_factors()[0];
      return c;
    }
  }
  throw std::invalid_argument("no cellular model for " + x.to_string());
}

inline ChainComplex tensor(const ChainComplex& a, const ChainComplex& b) {
  const int top = static_cast<int>(a.ranks.size()) - 1;
  ChainComplex c = empty_complex(top);
  // offset[n][i] = first basis index of C_i (x) D_{n-i} inside degree n
  std::vector<std::vector<std::size_t>> offset(top + 1, std::vector<std::size_t>(top + 1, 0));
  for (int n = 0; n <= top; ++n) {
    for (int i = 0; i <= n; ++i) {
      offset[n][i] = c.ranks[n];
      c.ranks[n] += a.ranks[i] * b.ranks[n - i];
    }
  }
  finish(c);
  for (int n = 1; n <= top; ++n) {
    for (int i = 0; i <= n; ++i) {
      const int j = n - i;
      const long sign = (i % 2 == 0) ? 1 : -1;
      for (std::size_t x = 0; x < a.ranks[i]; ++x) {
        for (std::size_t y = 0; y < b.ranks[j]; ++y) {
          const std::size_t col = offset[n][i] + x * b.ranks[j] + y;
          if (i > 0) {  // d(x) (x) y
            for (std::size_t x2 = 0; x2 < a.ranks[i - 1]; ++x2) {
              const Integer& coef = a.boundary[i](x2, x);
              if (coef != 0) c.boundary[n](offset[n - 1][i - 1] + x2 * b.ranks[j] + y, col) += coef;
            }
          }
          if (j > 0) {  // (-1)^i x (x) d(y)
            for (std::size_t y2 = 0; y2 < b.ranks[j - 1]; ++y2) {
              const Integer& coef = b.boundary[j](y2, y);
              if (coef != 0) c.boundary[n](offset[n - 1][i] + x * b.ranks[j - 1] + y2, col) += sign * coef;
            }
          }
        }
      }
    }
  }
  return c;
}

/// H_n for n < top (the truncation makes H_top unreliable).
inline FgAbelianGroup homology(const ChainComplex& c, int n) {
  auto rank_and_divisors = [](const IntMatrix& m, std::vector<Integer>& divisors) {
    std::size_t rank = 0;
    for (const Integer& d : borsuk::smith_normal_form(m).diagonal()) {
      if (d != 0) ++rank;
      if (d > 1) divisors.push_back(d);
    }
    return rank;
  };
  std::vector<Integer> ignored, torsion;
  const std::size_t rank_out = rank_and_divisors(c.boundary[n], ignored);
  const std::size_t rank_in = rank_and_divisors(c.boundary[n + 1], torsion);
  return FgAbelianGroup::from_cyclic_orders(c.ranks[n] - rank_out - rank_in, torsion);
}

}  // namespace cellular
