#pragma once

#include <string>
#include <utility>
#include <vector>

#include "borsuk/space.hpp"

namespace borsuk::capacity {

using spaces::SpaceExpr;

/// Capacity value: exact, a proven lower bound, or not settled.
class ExtendedCount {
 public:
  enum class Kind { finite, lower_bound, unknown };

  static ExtendedCount finite(Integer value);
  static ExtendedCount lower_bound(Integer value);
  static ExtendedCount unknown() { return ExtendedCount(Kind::unknown, Integer(0)); }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::finite; }
  /// Meaningful unless kind() == unknown.
  const Integer& value() const noexcept { return value_; }

  /// "Finite(4)", "LowerBound(4)", "Unknown".
  std::string to_string() const;

  friend bool operator==(const ExtendedCount&, const ExtendedCount&) = default;

 private:
  ExtendedCount(Kind kind, Integer value) : kind_(kind), value_(std::move(value)) {}

  Kind kind_;
  Integer value_;
};

/// Which rule settles the capacity of a canonical space.
enum class CapacityCase {
  point,
  sphere_wedge,        // wedge of spheres, circles included
  moore,               // Moore space(s) of one degree
  moore_wedge,         // Moore spaces of pairwise distinct degrees
  eilenberg_maclane,
  complex_projective,  // CP^2 exact, higher CP^n unknown
  product,             // lower bound from retract sub-products
  unsupported,
};

std::string to_string(CapacityCase c);

/// True when the case's value rests on extending the distinct-degree
/// Moore-wedge formula beyond spheres.
bool is_extension(CapacityCase c);

CapacityCase classify(const SpaceExpr& x);

ExtendedCount capacity(const SpaceExpr& x);

/// Canonical forms of every homotopy type dominated by x. Throws
/// UnsupportedCapacity unless capacity(x) is Finite.
std::vector<SpaceExpr> enumerate_dominated(const SpaceExpr& x);

/// Any 2-complex with free pi_1 of rank r and H_2 of rank s.
ExtendedCount capacity_two_complex(std::size_t r, std::size_t s);

inline constexpr int kMinComparisonBound = 10;

/// max(dimension of the finite-dimensional inputs, 10).
int default_comparison_bound(const std::vector<SpaceExpr>& spaces);

struct HomologyComparison {
  bool agrees = false;
  /// Both profiles vanish above the bound, so `agrees` covers all degrees.
  bool exact = false;
};

HomologyComparison homology_equivalent(const SpaceExpr& x, const SpaceExpr& y, int bound);

struct CounterexampleReport {
  SpaceExpr space_x;
  SpaceExpr space_y;
  int compared_up_to = 0;
  bool homology_agrees = false;
  bool exact_comparison = false;
  ExtendedCount capacity_x = ExtendedCount::unknown();
  ExtendedCount capacity_y = ExtendedCount::unknown();
  bool is_counterexample = false;
};

/// Two spaces with the same homology in every degree but different exact
/// capacities.
CounterexampleReport borsuk_report(const SpaceExpr& x, const SpaceExpr& y, int bound);

}  // namespace borsuk::capacity
