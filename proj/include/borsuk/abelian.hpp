#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "borsuk/int_matrix.hpp"

namespace borsuk::abelian {

/// A finitely generated abelian group Z^r + Z/d1 + ... + Z/dk in invariant
/// factor form: every di >= 2 and d1 | d2 | ... | dk. The representation is
/// canonical, so == is isomorphism. The trivial group has rank 0 and no
/// factors.
class FgAbelianGroup {
 public:
  FgAbelianGroup() = default;

  static FgAbelianGroup trivial() { return {}; }
  static FgAbelianGroup free(std::size_t rank);
  static FgAbelianGroup cyclic(const Integer& order);

  /// Validates the invariant-factor chain; throws DomainError otherwise.
  static FgAbelianGroup from_invariant_factors(std::size_t free_rank,
                                               std::vector<Integer> factors);

  /// Z^free_rank + sum of Z/n over `orders`, in any order. Orders equal to
  /// 1 are dropped; 0 and negative orders are rejected.
  static FgAbelianGroup from_cyclic_orders(std::size_t free_rank,
                                           const std::vector<Integer>& orders);

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<Integer>& invariant_factors() const noexcept { return factors_; }

  bool is_trivial() const noexcept { return free_rank_ == 0 && factors_.empty(); }
  bool is_finite() const noexcept { return free_rank_ == 0; }
  bool is_free() const noexcept { return factors_.empty(); }
  bool is_cyclic() const noexcept;
  /// Order of a finite group; throws SizeLimitError for infinite groups.
  Integer order() const;
  FgAbelianGroup torsion() const;

  /// Literal in the group grammar: "0", "Z", "Z^2 + Z/4 + Z/12".
  std::string to_string() const;

  friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;
  /// Free rank, then number of invariant factors, then the factors
  /// lexicographically.
  friend std::strong_ordering operator<=>(const FgAbelianGroup& a, const FgAbelianGroup& b);

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> factors_;
};

std::ostream& operator<<(std::ostream& out, const FgAbelianGroup& g);

/// Primary view: Z^r plus, for each prime power p^e, the multiplicity of
/// Z/p^e as a summand.
struct PrimaryDecomposition {
  std::size_t free_rank = 0;
  std::map<std::pair<Integer, unsigned>, std::size_t> components;

  friend bool operator==(const PrimaryDecomposition&, const PrimaryDecomposition&) = default;
};

/// Cokernel of `relations`, read as a map Z^cols -> Z^rows.
FgAbelianGroup from_presentation(const IntMatrix& relations);

/// Relation matrix whose cokernel is `group`: generators are the free
/// generators followed by one per invariant factor.
IntMatrix presentation_matrix(const FgAbelianGroup& group);

bool is_isomorphic(const FgAbelianGroup& a, const FgAbelianGroup& b);
FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b);

PrimaryDecomposition primary_decomposition(const FgAbelianGroup& group);
FgAbelianGroup from_primary(const PrimaryDecomposition& primary);

/// Number of isomorphism classes of direct summands:
/// (r + 1) * prod over (p, e) of (m_{p,e} + 1).
Integer count_direct_summands(const FgAbelianGroup& group);

/// Every direct summand class, in FgAbelianGroup order.
std::vector<FgAbelianGroup> enumerate_direct_summands(const FgAbelianGroup& group);

inline constexpr std::size_t kDefaultBruteForceOrderBound = 256;

/// Oracle: materialises a finite group, enumerates all its subgroups, keeps
/// those admitting a complement, and classifies them. Sorted like
/// enumerate_direct_summands. Throws SizeLimitError for infinite groups or
/// order above `order_bound`.
std::vector<FgAbelianGroup> brute_force_summands(
    const FgAbelianGroup& group, std::size_t order_bound = kDefaultBruteForceOrderBound);

FgAbelianGroup tensor(const FgAbelianGroup& a, const FgAbelianGroup& b);
FgAbelianGroup tor(const FgAbelianGroup& a, const FgAbelianGroup& b);

/// Prime factorisation by trial division, primes ascending.
std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n);

}  // namespace borsuk::abelian
