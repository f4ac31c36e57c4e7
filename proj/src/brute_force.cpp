// Subgroup-enumeration oracle for direct summands of a finite abelian group.
// Deliberately shares nothing with the primary-decomposition counting path
// except the final canonical constructor.

#include <algorithm>
#include <cstdint>
#include <set>

#include "borsuk/abelian.hpp"
#include "borsuk/errors.hpp"

namespace borsuk::abelian {

namespace {

using Bits = std::vector<std::uint64_t>;

class FiniteGroupTable {
 public:
  explicit FiniteGroupTable(const std::vector<std::size_t>& moduli) : moduli_(moduli) {
    size_ = 1;
    for (std::size_t m : moduli_) size_ *= m;
    sum_.resize(size_ * size_);
    std::vector<std::size_t> a(moduli_.size()), b(moduli_.size());
    for (std::size_t x = 0; x < size_; ++x) {
      decode(x, a);
      for (std::size_t y = 0; y < size_; ++y) {
        decode(y, b);
        std::size_t z = 0;
        for (std::size_t i = moduli_.size(); i-- > 0;) {
          z = z * moduli_[i] + (a[i] + b[i]) % moduli_[i];
        }
        sum_[x * size_ + y] = static_cast<std::uint32_t>(z);
      }
    }
  }

  std::size_t size() const { return size_; }
  std::size_t add(std::size_t x, std::size_t y) const { return sum_[x * size_ + y]; }
  std::size_t times(std::size_t x, std::size_t k) const {
    std::size_t acc = 0;
    for (std::size_t i = 0; i < k; ++i) acc = add(acc, x);
    return acc;
  }

 private:
  void decode(std::size_t x, std::vector<std::size_t>& out) const {
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
      out[i] = x % moduli_[i];
      x /= moduli_[i];
    }
  }

  std::vector<std::size_t> moduli_;
  std::size_t size_ = 1;
  std::vector<std::uint32_t> sum_;
};

bool test_bit(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1U; }
void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

std::size_t popcount(const Bits& b) {
  std::size_t n = 0;
  for (std::uint64_t w : b) n += static_cast<std::size_t>(__builtin_popcountll(w));
  return n;
}

std::vector<std::size_t> members(const Bits& b, std::size_t size) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size; ++i) {
    if (test_bit(b, i)) out.push_back(i);
  }
  return out;
}

// H + <g>
Bits extend(const FiniteGroupTable& table, const Bits& h, std::size_t g) {
  Bits out = h;
  const std::vector<std::size_t> hs = members(h, table.size());
  for (std::size_t x = g; !test_bit(h, x); x = table.add(x, g)) {
    for (std::size_t y : hs) set_bit(out, table.add(x, y));
  }
  return out;
}

// Isomorphism type from the sizes of the p^k-torsion layers.
FgAbelianGroup classify(const FiniteGroupTable& table, const Bits& h,
                        const std::vector<std::size_t>& primes) {
  const std::vector<std::size_t> hs = members(h, table.size());
  PrimaryDecomposition primary;
  for (std::size_t p : primes) {
    // log_p |{x in H : p^k x = 0}| for k = 0, 1, ...
    std::vector<std::size_t> layer{0};
    std::vector<std::size_t> current = hs;
    for (;;) {
      std::size_t killed = 0;
      for (std::size_t& x : current) {
        x = table.times(x, p);
        if (x == 0) ++killed;
      }
      std::size_t log = 0;
      for (std::size_t c = killed; c > 1; c /= p) ++log;
      if (log == layer.back()) break;
      layer.push_back(log);
    }
    // at_least[k] = number of cyclic p-factors of exponent >= k
    for (std::size_t k = 1; k < layer.size(); ++k) {
      const std::size_t at_least = layer[k] - layer[k - 1];
      const std::size_t above = k + 1 < layer.size() ? layer[k + 1] - layer[k] : 0;
      if (at_least > above) {
        primary.components[{Integer(static_cast<unsigned long>(p)), static_cast<unsigned>(k)}] =
            at_least - above;
      }
    }
  }
  return from_primary(primary);
}

}  // namespace

std::vector<FgAbelianGroup> brute_force_summands(const FgAbelianGroup& group,
                                                 std::size_t order_bound) {
  if (!group.is_finite()) {
    throw SizeLimitError("brute-force summand oracle needs a finite group, got " +
                         group.to_string());
  }
  const Integer order = group.order();
  if (order > static_cast<unsigned long>(order_bound)) {
    throw SizeLimitError("group order " + order.get_str() + " exceeds the oracle bound " +
                         std::to_string(order_bound));
  }

  std::vector<std::size_t> moduli;
  for (const Integer& d : group.invariant_factors()) moduli.push_back(d.get_ui());
  const FiniteGroupTable table(moduli);
  const std::size_t n = table.size();
  const std::size_t words = (n + 63) / 64;

  std::vector<std::size_t> primes;
  for (const auto& [p, e] : factorize(order)) primes.push_back(p.get_ui());

  // Every subgroup is reached from {0} by adjoining one element at a time.
  Bits zero(words, 0);
  set_bit(zero, 0);
  std::set<Bits> seen{zero};
  std::vector<Bits> frontier{zero};
  while (!frontier.empty()) {
    std::vector<Bits> next;
    for (const Bits& h : frontier) {
      for (std::size_t g = 1; g < n; ++g) {
        if (test_bit(h, g)) continue;
        Bits k = extend(table, h, g);
        if (seen.insert(k).second) next.push_back(std::move(k));
      }
    }
    frontier = std::move(next);
  }
  const std::vector<Bits> subgroups(seen.begin(), seen.end());

  std::vector<FgAbelianGroup> out;
  for (const Bits& h : subgroups) {
    const std::size_t hn = popcount(h);
    const bool has_complement = std::any_of(subgroups.begin(), subgroups.end(), [&](const Bits& k) {
      if (popcount(k) * hn != n) return false;
      // Trivial intersection plus |H||K| = |A| gives H + K = A.
      for (std::size_t w = 0; w < words; ++w) {
        const std::uint64_t meet = h[w] & k[w];
        if (meet != (w == 0 ? std::uint64_t{1} : 0)) return false;
      }
      return true;
    });
    if (has_complement) out.push_back(classify(table, h, primes));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace borsuk::abelian
