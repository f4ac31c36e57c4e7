#pragma once

#include <compare>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "borsuk/abelian.hpp"

namespace borsuk::spaces {

using abelian::FgAbelianGroup;

class SpaceExpr;

struct Point {};

struct Sphere {
  int dim;
};

struct Wedge {
  std::vector<SpaceExpr> children;
};

/// M(A, n): simply connected, reduced homology A in degree n only.
struct Moore {
  FgAbelianGroup group;
  int degree;
};

/// K(A, n) with abelian coefficients.
struct EilenbergMacLane {
  FgAbelianGroup group;
  int degree;
};

struct ComplexProjective {
  int n;
};

struct Product {
  std::vector<SpaceExpr> children;
};

/// Expression tree over the supported space families. Construct through the
/// factory functions below; they enforce the constructor domains and throw
/// DomainError.
class SpaceExpr {
 public:
  using Node = std::variant<Point, Sphere, Wedge, Moore, EilenbergMacLane, ComplexProjective, Product>;

  SpaceExpr() : node_(Point{}) {}

  static SpaceExpr point() { return SpaceExpr(Point{}); }
  static SpaceExpr sphere(int dim);
  static SpaceExpr wedge(std::vector<SpaceExpr> children);
  static SpaceExpr moore(FgAbelianGroup group, int degree);
  static SpaceExpr eilenberg_maclane(FgAbelianGroup group, int degree);
  static SpaceExpr complex_projective(int n);
  static SpaceExpr product(std::vector<SpaceExpr> children);

  const Node& node() const noexcept { return node_; }

  template <class T>
  bool is() const noexcept {
    return std::holds_alternative<T>(node_);
  }
  template <class T>
  const T& as() const {
    return std::get<T>(node_);
  }

  /// Literal in the space grammar; round-trips through the parser.
  std::string to_string() const;

  friend bool operator==(const SpaceExpr& a, const SpaceExpr& b);
  /// Point < Sphere < Moore < CP < K < Wedge < Product, then by contents.
  friend std::strong_ordering operator<=>(const SpaceExpr& a, const SpaceExpr& b);

 private:
  explicit SpaceExpr(Node node) : node_(std::move(node)) {}

  Node node_;
};

std::ostream& operator<<(std::ostream& out, const SpaceExpr& x);

/// Homotopy-preserving normal form: wedges and products flattened, point
/// summands/factors dropped, one-child wedges unwrapped, children sorted.
/// Inside a wedge all Moore spaces and spheres of a common degree >= 2 are
/// merged into M(direct sum, n), and every Moore space is split into its
/// free part (a wedge of spheres) plus a torsion Moore space.
/// K(0, n) becomes a point and K(Z, 1) the circle.
SpaceExpr canonicalize(const SpaceExpr& x);

/// Cellular dimension, or nullopt when the space is infinite dimensional.
std::optional<int> dimension(const SpaceExpr& x);

/// H_n(X; Z). Throws UnsupportedSpace for K(A, n) outside K(Z/m, 1), K(Z, 2)
/// and the degenerate K(0, n), K(Z, 1).
FgAbelianGroup homology(const SpaceExpr& x, int degree);

struct HomologyProfile {
  std::map<int, FgAbelianGroup> groups;
  int bound = 0;
  /// Every degree above `bound` is known to vanish.
  bool exact_above_bound = false;
};

HomologyProfile homology_profile(const SpaceExpr& x, int bound);

/// Rank of pi_1 when it is a finitely generated free group (0 = simply
/// connected); UnsupportedSpace otherwise.
std::size_t fundamental_group_free_rank(const SpaceExpr& x);

}  // namespace borsuk::spaces
