#include "borsuk/abelian.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "borsuk/errors.hpp"

namespace borsuk::abelian {

FgAbelianGroup FgAbelianGroup::free(std::size_t rank) {
  FgAbelianGroup g;
  g.free_rank_ = rank;
  return g;
}

FgAbelianGroup FgAbelianGroup::cyclic(const Integer& order) {
  if (order < 2) throw DomainError("cyclic group order must be at least 2, got " + order.get_str());
  FgAbelianGroup g;
  g.factors_.push_back(order);
  return g;
}

FgAbelianGroup FgAbelianGroup::from_invariant_factors(std::size_t free_rank,
                                                      std::vector<Integer> factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 2) throw DomainError("invariant factor must be at least 2");
    if (i > 0 && !mpz_divisible_p(factors[i].get_mpz_t(), factors[i - 1].get_mpz_t())) {
      throw DomainError("invariant factors must form a divisibility chain");
    }
  }
  FgAbelianGroup g;
  g.free_rank_ = free_rank;
  g.factors_ = std::move(factors);
  return g;
}

FgAbelianGroup FgAbelianGroup::from_cyclic_orders(std::size_t free_rank,
                                                  const std::vector<Integer>& orders) {
  PrimaryDecomposition primary;
  primary.free_rank = free_rank;
  for (const Integer& n : orders) {
    if (n < 1) throw DomainError("cyclic order must be positive, got " + n.get_str());
    for (const auto& [p, e] : factorize(n)) ++primary.components[{p, e}];
  }
  return from_primary(primary);
}

bool FgAbelianGroup::is_cyclic() const noexcept {
  return (free_rank_ == 1 && factors_.empty()) || (free_rank_ == 0 && factors_.size() == 1);
}

Integer FgAbelianGroup::order() const {
  if (free_rank_ != 0) throw SizeLimitError("group " + to_string() + " is infinite");
  Integer n = 1;
  for (const Integer& d : factors_) n *= d;
  return n;
}

FgAbelianGroup FgAbelianGroup::torsion() const {
  FgAbelianGroup g = *this;
  g.free_rank_ = 0;
  return g;
}

std::string FgAbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  if (free_rank_ == 1) {
    out << 'Z';
    first = false;
  } else if (free_rank_ > 1) {
    out << "Z^" << free_rank_;
    first = false;
  }
  for (const Integer& d : factors_) {
    if (!first) out << " + ";
    out << "Z/" << d;
    first = false;
  }
  return out.str();
}

std::strong_ordering operator<=>(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  if (auto c = a.free_rank_ <=> b.free_rank_; c != 0) return c;
  if (auto c = a.factors_.size() <=> b.factors_.size(); c != 0) return c;
  const std::size_t n = std::min(a.factors_.size(), b.factors_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a.factors_[i], b.factors_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& out, const FgAbelianGroup& g) { return out << g.to_string(); }

std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n) {
  std::vector<std::pair<Integer, unsigned>> out;
  Integer rest = abs(n);
  if (rest < 2) return out;
  auto strip = [&](const Integer& p) {
    unsigned e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  };
  strip(2);
  for (Integer p = 3; p * p <= rest; p += 2) strip(p);
  if (rest > 1) out.emplace_back(rest, 1);
  return out;
}

FgAbelianGroup from_presentation(const IntMatrix& relations) {
  const SmithForm snf = smith_normal_form(relations);
  const std::vector<Integer> diag = snf.diagonal();
  std::size_t free_rank = relations.rows() - diag.size();
  std::vector<Integer> factors;
  for (const Integer& d : diag) {
    if (d == 0) {
      ++free_rank;
    } else if (d > 1) {
      factors.push_back(d);
    }
  }
  return FgAbelianGroup::from_invariant_factors(free_rank, std::move(factors));
}

IntMatrix presentation_matrix(const FgAbelianGroup& group) {
  const auto& factors = group.invariant_factors();
  IntMatrix m(group.free_rank() + factors.size(), factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) m(group.free_rank() + i, i) = factors[i];
  return m;
}

bool is_isomorphic(const FgAbelianGroup& a, const FgAbelianGroup& b) { return a == b; }

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  std::vector<Integer> orders = a.invariant_factors();
  orders.insert(orders.end(), b.invariant_factors().begin(), b.invariant_factors().end());
  return FgAbelianGroup::from_cyclic_orders(a.free_rank() + b.free_rank(), orders);
}

PrimaryDecomposition primary_decomposition(const FgAbelianGroup& group) {
  PrimaryDecomposition out;
  out.free_rank = group.free_rank();
  for (const Integer& d : group.invariant_factors()) {
    for (const auto& [p, e] : factorize(d)) ++out.components[{p, e}];
  }
  return out;
}

FgAbelianGroup from_primary(const PrimaryDecomposition& primary) {
  // Exponents per prime, largest first; the i-th largest invariant factor
  // collects the i-th largest power of every prime.
  std::map<Integer, std::vector<unsigned>> by_prime;
  std::size_t length = 0;
  for (const auto& [key, multiplicity] : primary.components) {
    const auto& [p, e] = key;
    if (p < 2 || e == 0 || multiplicity == 0) {
      throw DomainError("malformed primary component");
    }
    auto& exps = by_prime[p];
    exps.insert(exps.end(), multiplicity, e);
  }
  for (auto& [p, exps] : by_prime) {
    std::sort(exps.begin(), exps.end(), std::greater<>());
    length = std::max(length, exps.size());
  }
  std::vector<Integer> factors(length, Integer(1));
  for (const auto& [p, exps] : by_prime) {
    for (std::size_t i = 0; i < exps.size(); ++i) {
      Integer pe;
      mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), exps[i]);
      factors[length - 1 - i] *= pe;
    }
  }
  return FgAbelianGroup::from_invariant_factors(primary.free_rank, std::move(factors));
}

Integer count_direct_summands(const FgAbelianGroup& group) {
  const PrimaryDecomposition primary = primary_decomposition(group);
  Integer count = primary.free_rank + 1;
  for (const auto& [key, multiplicity] : primary.components) count *= multiplicity + 1;
  return count;
}

std::vector<FgAbelianGroup> enumerate_direct_summands(const FgAbelianGroup& group) {
  const PrimaryDecomposition primary = primary_decomposition(group);
  std::vector<std::pair<std::pair<Integer, unsigned>, std::size_t>> parts(
      primary.components.begin(), primary.components.end());

  std::vector<FgAbelianGroup> out;
  std::vector<std::size_t> choice(parts.size(), 0);
  for (std::size_t rank = 0; rank <= primary.free_rank; ++rank) {
    std::fill(choice.begin(), choice.end(), 0);
    for (;;) {
      PrimaryDecomposition sub;
      sub.free_rank = rank;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (choice[i]) sub.components[parts[i].first] = choice[i];
      }
      out.push_back(from_primary(sub));

      std::size_t i = 0;
      while (i < parts.size() && choice[i] == parts[i].second) choice[i++] = 0;
      if (i == parts.size()) break;
      ++choice[i];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

FgAbelianGroup tensor(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  // Z^r (x) Z^s = Z^rs, Z (x) Z/n = Z/n, Z/m (x) Z/n = Z/gcd(m, n).
  std::vector<Integer> orders;
  for (const Integer& m : a.invariant_factors()) orders.insert(orders.end(), b.free_rank(), m);
  for (const Integer& n : b.invariant_factors()) orders.insert(orders.end(), a.free_rank(), n);
  for (const Integer& m : a.invariant_factors()) {
    for (const Integer& n : b.invariant_factors()) orders.push_back(gcd(m, n));
  }
  return FgAbelianGroup::from_cyclic_orders(a.free_rank() * b.free_rank(), orders);
}

FgAbelianGroup tor(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  std::vector<Integer> orders;
  for (const Integer& m : a.invariant_factors()) {
    for (const Integer& n : b.invariant_factors()) orders.push_back(gcd(m, n));
  }
  return FgAbelianGroup::from_cyclic_orders(0, orders);
}

}  // namespace borsuk::abelian
