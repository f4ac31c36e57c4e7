#include "borsuk/capacity.hpp"

#include <algorithm>
#include <map>

#include "borsuk/errors.hpp"

namespace borsuk::capacity {

using abelian::FgAbelianGroup;
using spaces::ComplexProjective;
using spaces::EilenbergMacLane;
using spaces::Moore;
using spaces::Product;
using spaces::Sphere;
using spaces::Wedge;

ExtendedCount ExtendedCount::finite(Integer value) {
  if (value < 1) throw DomainError("capacity values are at least 1");
  return ExtendedCount(Kind::finite, std::move(value));
}

ExtendedCount ExtendedCount::lower_bound(Integer value) {
  if (value < 1) throw DomainError("capacity values are at least 1");
  return ExtendedCount(Kind::lower_bound, std::move(value));
}

std::string ExtendedCount::to_string() const {
  switch (kind_) {
    case Kind::finite:
      return "Finite(" + value_.get_str() + ")";
    case Kind::lower_bound:
      return "LowerBound(" + value_.get_str() + ")";
    case Kind::unknown:
      break;
  }
  return "Unknown";
}

std::string to_string(CapacityCase c) {
  switch (c) {
    case CapacityCase::point: return "point";
    case CapacityCase::sphere_wedge: return "sphere_wedge";
    case CapacityCase::moore: return "moore";
    case CapacityCase::moore_wedge: return "moore_wedge";
    case CapacityCase::eilenberg_maclane: return "eilenberg_maclane";
    case CapacityCase::complex_projective: return "complex_projective";
    case CapacityCase::product: return "product";
    case CapacityCase::unsupported: break;
  }
  return "unsupported";
}

bool is_extension(CapacityCase c) { return c == CapacityCase::moore_wedge; }

namespace {

// Wedge summands of a canonical sphere/Moore wedge (or a lone sphere or
// Moore space), viewed as M(A_n, n) per degree; degree 1 holds circles.
std::vector<SpaceExpr> summands_of(const SpaceExpr& canonical) {
  if (canonical.is<Wedge>()) return canonical.as<Wedge>().children;
  return {canonical};
}

std::map<int, FgAbelianGroup> groups_by_degree(const SpaceExpr& canonical) {
  std::map<int, FgAbelianGroup> out;
  for (const SpaceExpr& s : summands_of(canonical)) {
    if (s.is<Sphere>()) {
      auto& g = out[s.as<Sphere>().dim];
      g = abelian::direct_sum(g, FgAbelianGroup::free(1));
    } else {
      const Moore& m = s.as<Moore>();
      out[m.degree] = abelian::direct_sum(out[m.degree], m.group);
    }
  }
  return out;
}

bool homology_supported(const SpaceExpr& x) {
  try {
    spaces::homology(x, 2 * kMinComparisonBound);
    return true;
  } catch (const UnsupportedSpace&) {
    return false;
  }
}

CapacityCase classify_canonical(const SpaceExpr& c) {
  if (c.is<spaces::Point>()) return CapacityCase::point;
  if (c.is<Sphere>()) return CapacityCase::sphere_wedge;
  if (c.is<Moore>()) return CapacityCase::moore;
  if (c.is<EilenbergMacLane>()) return CapacityCase::eilenberg_maclane;
  if (c.is<ComplexProjective>()) return CapacityCase::complex_projective;
  if (c.is<Product>()) {
    const auto& factors = c.as<Product>().children;
    return std::all_of(factors.begin(), factors.end(), homology_supported)
               ? CapacityCase::product
               : CapacityCase::unsupported;
  }

  bool has_circle = false;
  bool has_torsion = false;
  for (const SpaceExpr& s : c.as<Wedge>().children) {
    if (s.is<Sphere>()) {
      has_circle = has_circle || s.as<Sphere>().dim == 1;
    } else if (s.is<Moore>()) {
      has_torsion = true;
    } else {
      return CapacityCase::unsupported;
    }
  }
  if (!has_torsion) return CapacityCase::sphere_wedge;
  // Circles alongside torsion Moore spaces are not settled.
  if (has_circle) return CapacityCase::unsupported;
  return groups_by_degree(c).size() == 1 ? CapacityCase::moore : CapacityCase::moore_wedge;
}

// Sub-products of a canonical product, indexed by factor subsets; the empty
// subset is the point.
std::vector<SpaceExpr> sub_products(const std::vector<SpaceExpr>& factors) {
  if (factors.size() >= 8 * sizeof(unsigned long) - 1) {
    throw SizeLimitError("too many product factors");
  }
  std::vector<SpaceExpr> out;
  const unsigned long subsets = 1UL << factors.size();
  for (unsigned long mask = 0; mask < subsets; ++mask) {
    std::vector<SpaceExpr> chosen;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (mask & (1UL << i)) chosen.push_back(factors[i]);
    }
    if (chosen.empty()) {
      out.push_back(SpaceExpr::point());
    } else if (chosen.size() == 1) {
      out.push_back(chosen.front());
    } else {
      out.push_back(SpaceExpr::product(std::move(chosen)));
    }
  }
  return out;
}

// Each sub-product is a retract of the product. Only those told apart by
// homology up to the comparison bound are counted.
Integer distinguishable_sub_products(const std::vector<SpaceExpr>& factors) {
  int bound = kMinComparisonBound;
  int finite_total = 0;
  for (const SpaceExpr& f : factors) {
    if (auto d = spaces::dimension(f)) finite_total += *d;
  }
  bound = std::max(bound, finite_total);

  std::vector<std::map<int, FgAbelianGroup>> profiles;
  for (const SpaceExpr& s : sub_products(factors)) {
    auto groups = spaces::homology_profile(s, bound).groups;
    if (std::find(profiles.begin(), profiles.end(), groups) == profiles.end()) {
      profiles.push_back(std::move(groups));
    }
  }
  return Integer(static_cast<unsigned long>(profiles.size()));
}

SpaceExpr wedge_or_point(std::vector<SpaceExpr> parts) {
  if (parts.empty()) return SpaceExpr::point();
  return spaces::canonicalize(SpaceExpr::wedge(std::move(parts)));
}

}  // namespace

CapacityCase classify(const SpaceExpr& x) { return classify_canonical(spaces::canonicalize(x)); }

ExtendedCount capacity(const SpaceExpr& x) {
  const SpaceExpr c = spaces::canonicalize(x);
  switch (classify_canonical(c)) {
    case CapacityCase::point:
      return ExtendedCount::finite(1);
    case CapacityCase::sphere_wedge:
    case CapacityCase::moore:
    case CapacityCase::moore_wedge: {
      // Per degree n the summands assemble to M(A_n, n) (circles: A_1 = Z^r);
      // the capacity multiplies the summand counts.
      Integer value = 1;
      for (const auto& [degree, group] : groups_by_degree(c)) {
        value *= abelian::count_direct_summands(group);
      }
      return ExtendedCount::finite(value);
    }
    case CapacityCase::eilenberg_maclane:
      return ExtendedCount::finite(abelian::count_direct_summands(c.as<EilenbergMacLane>().group));
    case CapacityCase::complex_projective:
      if (c.as<ComplexProjective>().n == 2) return ExtendedCount::finite(2);
      return ExtendedCount::unknown();
    case CapacityCase::product:
      return ExtendedCount::lower_bound(distinguishable_sub_products(c.as<Product>().children));
    case CapacityCase::unsupported:
      break;
  }
  return ExtendedCount::unknown();
}

std::vector<SpaceExpr> enumerate_dominated(const SpaceExpr& x) {
  const SpaceExpr c = spaces::canonicalize(x);
  switch (classify_canonical(c)) {
    case CapacityCase::point:
      return {c};
    case CapacityCase::sphere_wedge:
    case CapacityCase::moore:
    case CapacityCase::moore_wedge: {
      // One summand choice per degree; the lowest degree varies fastest.
      std::vector<std::pair<int, std::vector<FgAbelianGroup>>> choices;
      for (const auto& [degree, group] : groups_by_degree(c)) {
        choices.emplace_back(degree, abelian::enumerate_direct_summands(group));
      }
      std::vector<SpaceExpr> out;
      std::vector<std::size_t> index(choices.size(), 0);
      for (;;) {
        std::vector<SpaceExpr> parts;
        for (std::size_t i = 0; i < choices.size(); ++i) {
          const int degree = choices[i].first;
          const FgAbelianGroup& b = choices[i].second[index[i]];
          parts.insert(parts.end(), b.free_rank(), SpaceExpr::sphere(degree));
          if (!b.is_free()) parts.push_back(SpaceExpr::moore(b.torsion(), degree));
        }
        out.push_back(wedge_or_point(std::move(parts)));

        std::size_t i = 0;
        while (i < choices.size() && index[i] + 1 == choices[i].second.size()) index[i++] = 0;
        if (i == choices.size()) break;
        ++index[i];
      }
      return out;
    }
    case CapacityCase::eilenberg_maclane: {
      const EilenbergMacLane& k = c.as<EilenbergMacLane>();
      std::vector<SpaceExpr> out;
      for (const FgAbelianGroup& b : abelian::enumerate_direct_summands(k.group)) {
        out.push_back(spaces::canonicalize(SpaceExpr::eilenberg_maclane(b, k.degree)));
      }
      return out;
    }
    case CapacityCase::complex_projective:
      if (c.as<ComplexProjective>().n == 2) return {SpaceExpr::point(), c};
      break;
    case CapacityCase::product:
    case CapacityCase::unsupported:
      break;
  }
  throw UnsupportedCapacity("the dominated homotopy types of " + c.to_string() +
                            " are not determined (capacity " + capacity(c).to_string() + ")");
}

ExtendedCount capacity_two_complex(std::size_t r, std::size_t s) {
  // Same value as the wedge of r circles and s 2-spheres.
  Integer value = r + 1;
  value *= s + 1;
  return ExtendedCount::finite(value);
}

int default_comparison_bound(const std::vector<SpaceExpr>& spaces) {
  int bound = kMinComparisonBound;
  for (const SpaceExpr& s : spaces) {
    if (auto d = spaces::dimension(s)) bound = std::max(bound, *d);
  }
  return bound;
}

HomologyComparison homology_equivalent(const SpaceExpr& x, const SpaceExpr& y, int bound) {
  const spaces::HomologyProfile px = spaces::homology_profile(x, bound);
  const spaces::HomologyProfile py = spaces::homology_profile(y, bound);
  return {px.groups == py.groups, px.exact_above_bound && py.exact_above_bound};
}

CounterexampleReport borsuk_report(const SpaceExpr& x, const SpaceExpr& y, int bound) {
  CounterexampleReport r;
  r.space_x = x;
  r.space_y = y;
  r.compared_up_to = bound;
  const HomologyComparison cmp = homology_equivalent(x, y, bound);
  r.homology_agrees = cmp.agrees;
  r.exact_comparison = cmp.exact;
  r.capacity_x = capacity(x);
  r.capacity_y = capacity(y);
  r.is_counterexample = r.homology_agrees && r.exact_comparison && r.capacity_x.is_finite() &&
                        r.capacity_y.is_finite() && r.capacity_x.value() != r.capacity_y.value();
  return r;
}

}  // namespace borsuk::capacity
