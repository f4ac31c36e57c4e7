#include "borsuk/space.hpp"

#include <algorithm>
#include <ostream>

#include "borsuk/errors.hpp"

namespace borsuk::spaces {

using abelian::direct_sum;

SpaceExpr SpaceExpr::sphere(int dim) {
  if (dim < 1) throw DomainError("sphere dimension must be >= 1, got " + std::to_string(dim));
  return SpaceExpr(Sphere{dim});
}

SpaceExpr SpaceExpr::wedge(std::vector<SpaceExpr> children) {
  if (children.empty()) throw DomainError("wedge needs at least one summand");
  return SpaceExpr(Wedge{std::move(children)});
}

SpaceExpr SpaceExpr::moore(FgAbelianGroup group, int degree) {
  if (degree < 2) {
    throw DomainError("Moore space degree must be >= 2 (M(A,1) is not well defined)");
  }
  return SpaceExpr(Moore{std::move(group), degree});
}

SpaceExpr SpaceExpr::eilenberg_maclane(FgAbelianGroup group, int degree) {
  if (degree < 1) {
    throw DomainError("Eilenberg-MacLane degree must be >= 1, got " + std::to_string(degree));
  }
  return SpaceExpr(EilenbergMacLane{std::move(group), degree});
}

SpaceExpr SpaceExpr::complex_projective(int n) {
  if (n == 1) throw DomainError("CP^1 is the 2-sphere; write S^2");
  if (n < 2) throw DomainError("complex projective index must be >= 2, got " + std::to_string(n));
  return SpaceExpr(ComplexProjective{n});
}

SpaceExpr SpaceExpr::product(std::vector<SpaceExpr> children) {
  if (children.size() < 2) throw DomainError("product needs at least two factors");
  return SpaceExpr(Product{std::move(children)});
}

// ---------------------------------------------------------------------------
// Ordering and printing

namespace {

int rank_of(const SpaceExpr::Node& node) {
  // Position in the fixed total order, independent of variant index.
  return std::visit(
      [](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Point>) return 0;
        if constexpr (std::is_same_v<T, Sphere>) return 1;
        if constexpr (std::is_same_v<T, Moore>) return 2;
        if constexpr (std::is_same_v<T, ComplexProjective>) return 3;
        if constexpr (std::is_same_v<T, EilenbergMacLane>) return 4;
        if constexpr (std::is_same_v<T, Wedge>) return 5;
        if constexpr (std::is_same_v<T, Product>) return 6;
      },
      node);
}

std::strong_ordering compare_children(const std::vector<SpaceExpr>& a,
                                      const std::vector<SpaceExpr>& b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

std::strong_ordering operator<=>(const SpaceExpr& a, const SpaceExpr& b) {
  if (auto c = rank_of(a.node_) <=> rank_of(b.node_); c != 0) return c;
  return std::visit(
      [&](const auto& x) -> std::strong_ordering {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.node_);
        if constexpr (std::is_same_v<T, Point>) {
          return std::strong_ordering::equal;
        } else if constexpr (std::is_same_v<T, Sphere>) {
          return x.dim <=> y.dim;
        } else if constexpr (std::is_same_v<T, ComplexProjective>) {
          return x.n <=> y.n;
        } else if constexpr (std::is_same_v<T, Moore> || std::is_same_v<T, EilenbergMacLane>) {
          if (auto c = x.degree <=> y.degree; c != 0) return c;
          return x.group <=> y.group;
        } else {
          return compare_children(x.children, y.children);
        }
      },
      a.node_);
}

bool operator==(const SpaceExpr& a, const SpaceExpr& b) { return (a <=> b) == 0; }

std::ostream& operator<<(std::ostream& out, const SpaceExpr& x) { return out << x.to_string(); }

std::string SpaceExpr::to_string() const {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Point>) {
          return "*";
        } else if constexpr (std::is_same_v<T, Sphere>) {
          return "S^" + std::to_string(n.dim);
        } else if constexpr (std::is_same_v<T, Moore>) {
          return "M(" + n.group.to_string() + ", " + std::to_string(n.degree) + ")";
        } else if constexpr (std::is_same_v<T, EilenbergMacLane>) {
          return "K(" + n.group.to_string() + ", " + std::to_string(n.degree) + ")";
        } else if constexpr (std::is_same_v<T, ComplexProjective>) {
          return "CP^" + std::to_string(n.n);
        } else {
          constexpr bool is_wedge = std::is_same_v<T, Wedge>;
          std::string out;
          for (const SpaceExpr& c : n.children) {
            if (!out.empty()) out += is_wedge ? " v " : " x ";
            const bool paren = c.template is<Wedge>() || (!is_wedge && c.template is<Product>());
            out += paren ? "(" + c.to_string() + ")" : c.to_string();
          }
          return out;
        }
      },
      node_);
}

// ---------------------------------------------------------------------------
// Canonical form

namespace {

const FgAbelianGroup kIntegers = FgAbelianGroup::free(1);

bool is_circle_group(const FgAbelianGroup& g) { return g == kIntegers; }

// Flattened, point-free list of canonical wedge summands, with Moore spaces
// and spheres of each degree >= 2 merged and re-split into free and torsion
// parts.
std::vector<SpaceExpr> canonical_wedge_summands(const std::vector<SpaceExpr>& raw) {
  std::vector<SpaceExpr> atoms;
  std::map<int, FgAbelianGroup> by_degree;
  for (const SpaceExpr& child : raw) {
    // A bare Moore space is split below; canonicalizing it here would recurse.
    const SpaceExpr c = child.is<Moore>() ? child : canonicalize(child);
    std::vector<SpaceExpr> parts =
        c.is<Wedge>() ? c.as<Wedge>().children : std::vector<SpaceExpr>{c};
    for (SpaceExpr& part : parts) {
      if (part.is<Point>()) continue;
      if (part.is<Sphere>() && part.as<Sphere>().dim >= 2) {
        auto& g = by_degree[part.as<Sphere>().dim];
        g = direct_sum(g, kIntegers);
      } else if (part.is<Moore>()) {
        auto& g = by_degree[part.as<Moore>().degree];
        g = direct_sum(g, part.as<Moore>().group);
      } else {
        atoms.push_back(std::move(part));
      }
    }
  }
  for (const auto& [degree, group] : by_degree) {
    atoms.insert(atoms.end(), group.free_rank(), SpaceExpr::sphere(degree));
    if (!group.torsion().is_trivial()) atoms.push_back(SpaceExpr::moore(group.torsion(), degree));
  }
  std::sort(atoms.begin(), atoms.end());
  return atoms;
}

}  // namespace

SpaceExpr canonicalize(const SpaceExpr& x) {
  return std::visit(
      [&](const auto& n) -> SpaceExpr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Point> || std::is_same_v<T, Sphere> ||
                      std::is_same_v<T, ComplexProjective>) {
          return x;
        } else if constexpr (std::is_same_v<T, EilenbergMacLane>) {
          if (n.group.is_trivial()) return SpaceExpr::point();
          if (n.degree == 1 && is_circle_group(n.group)) return SpaceExpr::sphere(1);
          return x;
        } else if constexpr (std::is_same_v<T, Moore> || std::is_same_v<T, Wedge>) {
          std::vector<SpaceExpr> atoms;
          if constexpr (std::is_same_v<T, Moore>) {
            atoms = canonical_wedge_summands({x});
          } else {
            atoms = canonical_wedge_summands(n.children);
          }
          if (atoms.empty()) return SpaceExpr::point();
          if (atoms.size() == 1) return atoms.front();
          return SpaceExpr::wedge(std::move(atoms));
        } else {
          std::vector<SpaceExpr> factors;
          for (const SpaceExpr& child : n.children) {
            SpaceExpr c = canonicalize(child);
            if (c.is<Point>()) continue;
            if (c.is<Product>()) {
              const auto& inner = c.as<Product>().children;
              factors.insert(factors.end(), inner.begin(), inner.end());
            } else {
              factors.push_back(std::move(c));
            }
          }
          std::sort(factors.begin(), factors.end());
          if (factors.empty()) return SpaceExpr::point();
          if (factors.size() == 1) return factors.front();
          return SpaceExpr::product(std::move(factors));
        }
      },
      x.node());
}

// ---------------------------------------------------------------------------
// Dimension and homology

std::optional<int> dimension(const SpaceExpr& x) {
  return std::visit(
      [](const auto& n) -> std::optional<int> {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Point>) {
          return 0;
        } else if constexpr (std::is_same_v<T, Sphere>) {
          return n.dim;
        } else if constexpr (std::is_same_v<T, Moore>) {
          if (n.group.is_trivial()) return 0;
          return n.group.is_free() ? n.degree : n.degree + 1;
        } else if constexpr (std::is_same_v<T, EilenbergMacLane>) {
          if (n.group.is_trivial()) return 0;
          if (n.degree == 1 && is_circle_group(n.group)) return 1;
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, ComplexProjective>) {
          return 2 * n.n;
        } else {
          constexpr bool is_wedge = std::is_same_v<T, Wedge>;
          int total = 0;
          for (const SpaceExpr& c : n.children) {
            const auto d = dimension(c);
            if (!d) return std::nullopt;
            total = is_wedge ? std::max(total, *d) : total + *d;
          }
          return total;
        }
      },
      x.node());
}

namespace {

using Table = std::vector<FgAbelianGroup>;

Table point_table(int top) {
  Table t(static_cast<std::size_t>(top) + 1);
  t[0] = kIntegers;
  return t;
}

Table kunneth(const Table& a, const Table& b, int top) {
  Table out(static_cast<std::size_t>(top) + 1);
  for (int n = 0; n <= top; ++n) {
    FgAbelianGroup h;
    for (int i = 0; i <= n; ++i) h = direct_sum(h, abelian::tensor(a[i], b[n - i]));
    for (int i = 0; i <= n - 1; ++i) h = direct_sum(h, abelian::tor(a[i], b[n - 1 - i]));
    out[n] = h;
  }
  return out;
}

// H_0 .. H_top of x.
Table homology_table(const SpaceExpr& x, int top) {
  return std::visit(
      [&](const auto& n) -> Table {
        using T = std::decay_t<decltype(n)>;
        Table t = point_table(top);
        if constexpr (std::is_same_v<T, Point>) {
          return t;
        } else if constexpr (std::is_same_v<T, Sphere>) {
          if (n.dim <= top) t[n.dim] = kIntegers;
          return t;
        } else if constexpr (std::is_same_v<T, Moore>) {
          if (n.degree <= top) t[n.degree] = direct_sum(t[n.degree], n.group);
          return t;
        } else if constexpr (std::is_same_v<T, ComplexProjective>) {
          for (int k = 2; k <= std::min(top, 2 * n.n); k += 2) t[k] = kIntegers;
          return t;
        } else if constexpr (std::is_same_v<T, EilenbergMacLane>) {
          const FgAbelianGroup& g = n.group;
          if (g.is_trivial()) return t;
          if (n.degree == 1 && is_circle_group(g)) {
            if (top >= 1) t[1] = kIntegers;
            return t;
          }
          if (n.degree == 1 && g.is_finite() && g.is_cyclic()) {
            for (int k = 1; k <= top; k += 2) t[k] = g;
            return t;
          }
          if (n.degree == 2 && is_circle_group(g)) {
            for (int k = 2; k <= top; k += 2) t[k] = kIntegers;
            return t;
          }
          throw UnsupportedSpace("homology of " + x.to_string() +
                                 " is not available (supported: K(Z/m, 1), K(Z, 2))");
        } else if constexpr (std::is_same_v<T, Wedge>) {
          for (const SpaceExpr& c : n.children) {
            const Table ct = homology_table(c, top);
            for (int k = 1; k <= top; ++k) t[k] = direct_sum(t[k], ct[k]);
          }
          return t;
        } else {
          Table acc = homology_table(n.children.front(), top);
          for (std::size_t i = 1; i < n.children.size(); ++i) {
            acc = kunneth(acc, homology_table(n.children[i], top), top);
          }
          return acc;
        }
      },
      x.node());
}

}  // namespace

FgAbelianGroup homology(const SpaceExpr& x, int degree) {
  if (degree < 0) throw DomainError("homology degree must be >= 0");
  return homology_table(x, degree)[degree];
}

HomologyProfile homology_profile(const SpaceExpr& x, int bound) {
  if (bound < 0) throw DomainError("homology bound must be >= 0");
  const Table t = homology_table(x, bound);
  HomologyProfile p;
  p.bound = bound;
  for (int k = 0; k <= bound; ++k) p.groups.emplace(k, t[k]);
  const auto dim = dimension(x);
  p.exact_above_bound = dim.has_value() && *dim <= bound;
  return p;
}

std::size_t fundamental_group_free_rank(const SpaceExpr& x) {
  return std::visit(
      [&](const auto& n) -> std::size_t {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Sphere>) {
          return n.dim == 1 ? 1 : 0;
        } else if constexpr (std::is_same_v<T, EilenbergMacLane>) {
          if (n.degree >= 2 || n.group.is_trivial()) return 0;
          if (is_circle_group(n.group)) return 1;
          throw UnsupportedSpace("fundamental group " + n.group.to_string() + " of " +
                                 x.to_string() + " is not free");
        } else if constexpr (std::is_same_v<T, Wedge>) {
          std::size_t rank = 0;
          for (const SpaceExpr& c : n.children) rank += fundamental_group_free_rank(c);
          return rank;
        } else if constexpr (std::is_same_v<T, Product>) {
          // F_a x F_b is free only when one side is trivial.
          std::size_t rank = 0;
          std::size_t nontrivial = 0;
          for (const SpaceExpr& c : n.children) {
            const std::size_t r = fundamental_group_free_rank(c);
            if (r) ++nontrivial;
            rank += r;
          }
          if (nontrivial > 1) {
            throw UnsupportedSpace("fundamental group of " + x.to_string() +
                                   " is a product of nontrivial free groups, not free");
          }
          return rank;
        } else {
          return 0;
        }
      },
      x.node());
}

}  // namespace borsuk::spaces
