// Independent reference computations used by the test suites. Nothing here
// calls the Smith normal form or primary-decomposition code it checks.
#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "borsuk/abelian.hpp"
#include "borsuk/int_matrix.hpp"

namespace oracle {

using borsuk::IntMatrix;
using borsuk::Integer;

/// Fraction-free Gaussian elimination.
inline Integer determinant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Smith diagonal from determinantal divisors: d_k = D_k / D_{k-1}, where
/// D_k is the gcd of all k x k minors. Exponential; small matrices only.
inline std::vector<Integer> smith_diagonal_by_minors(const IntMatrix& m) {
  const std::size_t n = std::min(m.rows(), m.cols());
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Integer g = 0;
    for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        IntMatrix minor(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) minor(i, j) = m(rows[i], cols[j]);
        g = gcd(g, determinant(minor));
      });
    });
    if (g == 0) {
      out.insert(out.end(), n - out.size(), Integer(0));
      break;
    }
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim, long lo, long hi) {
  std::uniform_int_distribution<std::size_t> dim(0, max_dim);
  std::uniform_int_distribution<long> entry(lo, hi);
  IntMatrix m(dim(rng), dim(rng));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
  return m;
}

inline std::vector<std::vector<unsigned>> partitions(unsigned n, unsigned max_part) {
  if (n == 0) return {{}};
  std::vector<std::vector<unsigned>> out;
  for (unsigned first = std::min(n, max_part); first >= 1; --first) {
    for (auto rest : partitions(n - first, first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  }
  return out;
}

/// Cyclic prime-power orders of every finite abelian group of order n, one
/// list per isomorphism class (partition of each prime exponent).
inline std::vector<std::vector<unsigned long>> abelian_groups_of_order(unsigned long n) {
  std::vector<std::pair<unsigned long, unsigned>> pe;
  unsigned long rest = n;
  for (unsigned long p = 2; p * p <= rest; ++p) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e) pe.emplace_back(p, e);
  }
  if (rest > 1) pe.emplace_back(rest, 1);

  std::vector<std::vector<unsigned long>> out{{}};
  for (const auto& [p, e] : pe) {
    std::vector<std::vector<unsigned long>> next;
    for (const auto& base : out) {
      for (const auto& part : partitions(e, e)) {
        auto g = base;
        for (unsigned k : part) {
          unsigned long q = 1;
          for (unsigned i = 0; i < k; ++i) q *= p;
          g.push_back(q);
        }
        next.push_back(std::move(g));
      }
    }
    out = std::move(next);
  }
  return out;
}

inline unsigned long lcm_ul(unsigned long a, unsigned long b) {
  unsigned long x = a, y = b;
  while (y) {
    const unsigned long t = x % y;
    x = y;
    y = t;
  }
  return a / x * b;
}

/// Histogram element order -> count for Z/m1 x ... x Z/mk, by enumeration.
/// For finite abelian groups this determines the isomorphism class.
inline std::map<unsigned long, unsigned long> order_histogram(const std::vector<unsigned long>& moduli) {
  std::map<unsigned long, unsigned long> hist;
  std::vector<unsigned long> x(moduli.size(), 0);
  for (;;) {
    unsigned long order = 1;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
      unsigned long a = x[i], m = moduli[i];
      unsigned long g = m;
      for (unsigned long b = a; b;) {
        const unsigned long t = g % b;
        g = b;
        b = t;
      }
      order = lcm_ul(order, m / g);
    }
    ++hist[order];
    std::size_t i = 0;
    while (i < moduli.size() && ++x[i] == moduli[i]) x[i++] = 0;
    if (i == moduli.size()) break;
  }
  return hist;
}

inline std::vector<unsigned long> moduli_of(const borsuk::abelian::FgAbelianGroup& g) {
  std::vector<unsigned long> out;
  for (const Integer& d : g.invariant_factors()) out.push_back(d.get_ui());
  return out;
}

/// A (x) B for finite groups as the free abelian group on A x B modulo the
/// bilinearity relations, reduced by the cokernel routine. Independent of
/// the gcd rule used by abelian::tensor.
inline borsuk::abelian::FgAbelianGroup tensor_by_bilinear_quotient(
    const std::vector<unsigned long>& a, const std::vector<unsigned long>& b) {
  auto elements = [](const std::vector<unsigned long>& mod) {
    std::vector<std::vector<unsigned long>> out;
    std::vector<unsigned long> x(mod.size(), 0);
    for (;;) {
      out.push_back(x);
      std::size_t i = 0;
      while (i < mod.size() && ++x[i] == mod[i]) x[i++] = 0;
      if (i == mod.size()) break;
    }
    return out;
  };
  const auto ea = elements(a);
  const auto eb = elements(b);
  auto index_of = [](const std::vector<std::vector<unsigned long>>& es,
                     const std::vector<unsigned long>& x) {
    return static_cast<std::size_t>(std::find(es.begin(), es.end(), x) - es.begin());
  };
  auto add = [](const std::vector<unsigned long>& mod, const std::vector<unsigned long>& x,
                const std::vector<unsigned long>& y) {
    std::vector<unsigned long> z(mod.size());
    for (std::size_t i = 0; i < mod.size(); ++i) z[i] = (x[i] + y[i]) % mod[i];
    return z;
  };
  const std::size_t gens = ea.size() * eb.size();
  auto gen = [&](std::size_t i, std::size_t j) { return i * eb.size() + j; };

  std::vector<std::vector<std::pair<std::size_t, long>>> relations;
  for (std::size_t i = 0; i < ea.size(); ++i)
    for (std::size_t k = 0; k < ea.size(); ++k)
      for (std::size_t j = 0; j < eb.size(); ++j) {
        const std::size_t s = index_of(ea, add(a, ea[i], ea[k]));
        relations.push_back({{gen(s, j), 1}, {gen(i, j), -1}, {gen(k, j), -1}});
      }
  for (std::size_t i = 0; i < ea.size(); ++i)
    for (std::size_t j = 0; j < eb.size(); ++j)
      for (std::size_t l = 0; l < eb.size(); ++l) {
        const std::size_t s = index_of(eb, add(b, eb[j], eb[l]));
        relations.push_back({{gen(i, s), 1}, {gen(i, j), -1}, {gen(i, l), -1}});
      }
  IntMatrix m(gens, relations.size());
  for (std::size_t c = 0; c < relations.size(); ++c)
    for (const auto& [g, coef] : relations[c]) m(g, c) += coef;
  return borsuk::abelian::from_presentation(m);
}

}  // namespace oracle
