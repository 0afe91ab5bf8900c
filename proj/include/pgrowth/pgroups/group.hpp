#ifndef PGROWTH_PGROUPS_GROUP_HPP_INCLUDED
#define PGROWTH_PGROUPS_GROUP_HPP_INCLUDED

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "pgrowth/common.hpp"

namespace pgrowth::pgroups {

using Elem = std::uint32_t;

/// Finite group given by its Cayley table. Element 0 is the identity.
class FiniteGroup {
 public:
  /// The trivial group.
  FiniteGroup() : n_(1), table_{0}, inverse_{0}, label_("trivial") {}

  /// Validates the table as a group law: identity at 0, Latin rows and
  /// columns, and associativity (exhaustive up to order 256, 10^5 random
  /// triples above).
  static FiniteGroup from_table(std::size_t n, std::vector<Elem> table, std::string label = {},
                                const Limits& limits = {}, std::uint64_t seed = 0x5eedULL) {
    if (n == 0) throw DomainError("a group has at least one element");
    if (n > limits.group_order)
      throw ResourceError("group_order", limits.group_order, "group of order " + std::to_string(n));
    if (table.size() != n * n) throw DomainError("Cayley table must have order^2 entries");
    FiniteGroup g;
    g.n_ = n;
    g.table_ = std::move(table);
    g.label_ = std::move(label);
    g.validate(seed);
    g.compute_inverses();
    g.compute_generators();
    return g;
  }

  /// Builds the table from a multiplication law on {0, ..., n-1}.
  template <class Mul>
  static FiniteGroup from_law(std::size_t n, Mul&& mul, std::string label, const Limits& limits = {}) {
    if (n > limits.group_order)
      throw ResourceError("group_order", limits.group_order, "group of order " + std::to_string(n));
    std::vector<Elem> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Elem>(mul(static_cast<Elem>(a), static_cast<Elem>(b)));
    return from_table(n, std::move(table), std::move(label), limits);
  }

  std::size_t order() const noexcept { return n_; }
  Elem identity() const noexcept { return 0; }
  Elem mul(Elem a, Elem b) const { return table_[std::size_t{a} * n_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  const std::string& label() const noexcept { return label_; }
  const std::vector<Elem>& table() const noexcept { return table_; }

  /// A small generating set fixed at construction.
  const std::vector<Elem>& generators() const noexcept { return generators_; }

  Elem power(Elem a, long long k) const {
    if (k < 0) return power(inv(a), -k);
    Elem r = 0;
    for (long long i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  std::size_t element_order(Elem a) const {
    std::size_t k = 1;
    for (Elem x = a; x != 0; x = mul(x, a)) ++k;
    return k;
  }

  /// g^-1 a g
  Elem conjugate(Elem a, Elem g) const { return mul(mul(inv(g), a), g); }
  /// a^-1 b^-1 a b
  Elem commutator(Elem a, Elem b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }

  bool is_p_group(std::uint64_t p) const { return n_ == 1 || exact_log(n_, p).has_value(); }

  /// The prime p when the order is a nontrivial p-power.
  std::optional<std::uint64_t> prime() const { return prime_of_power(n_); }

  bool is_abelian() const {
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = a + 1; b < n_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

 private:
  void validate(std::uint64_t seed) const {
    for (std::size_t i = 0; i < table_.size(); ++i)
      if (table_[i] >= n_) throw DomainError("Cayley table entry out of range");
    for (Elem a = 0; a < n_; ++a)
      if (mul(0, a) != a || mul(a, 0) != a) throw DomainError("element 0 is not the identity");
    std::vector<char> seen(n_);
    for (Elem a = 0; a < n_; ++a) {
      std::fill(seen.begin(), seen.end(), 0);
      for (Elem b = 0; b < n_; ++b) {
        if (seen[mul(a, b)]++) throw DomainError("Cayley table row is not a permutation");
      }
      std::fill(seen.begin(), seen.end(), 0);
      for (Elem b = 0; b < n_; ++b) {
        if (seen[mul(b, a)]++) throw DomainError("Cayley table column is not a permutation");
      }
    }
    auto check = [&](Elem a, Elem b, Elem c) {
      if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw DomainError("Cayley table is not associative");
    };
    if (n_ <= 256) {
      for (Elem a = 0; a < n_; ++a)
        for (Elem b = 0; b < n_; ++b)
          for (Elem c = 0; c < n_; ++c) check(a, b, c);
    } else {
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n_ - 1));
      for (int i = 0; i < 100000; ++i) check(pick(rng), pick(rng), pick(rng));
    }
  }

  void compute_inverses() {
    inverse_.assign(n_, 0);
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = 0; b < n_; ++b)
        if (mul(a, b) == 0) {
          inverse_[a] = b;
          break;
        }
  }

  std::size_t closure_size(const std::vector<Elem>& gens) const {
    std::vector<char> in(n_, 0);
    std::vector<Elem> queue{0};
    in[0] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (Elem g : gens) {
        Elem y = mul(queue[i], g);
        if (!in[y]) {
          in[y] = 1;
          queue.push_back(y);
        }
      }
    return queue.size();
  }

  // Greedy by decreasing element order, then drop redundant generators.
  void compute_generators() {
    std::vector<Elem> elems(n_);
    std::iota(elems.begin(), elems.end(), Elem{0});
    std::vector<std::size_t> ord(n_);
    for (Elem a = 0; a < n_; ++a) ord[a] = element_order(a);
    std::stable_sort(elems.begin(), elems.end(), [&](Elem a, Elem b) { return ord[a] > ord[b]; });
    generators_.clear();
    std::size_t size = 1;
    for (Elem a : elems) {
      if (size == n_) break;
      generators_.push_back(a);
      std::size_t s = closure_size(generators_);
      if (s == size)
        generators_.pop_back();
      else
        size = s;
    }
    for (std::size_t i = generators_.size(); i-- > 0;) {
      std::vector<Elem> without = generators_;
      without.erase(without.begin() + static_cast<std::ptrdiff_t>(i));
      if (closure_size(without) == n_) generators_ = std::move(without);
    }
  }

  std::size_t n_;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<Elem> generators_;
  std::string label_;
};

/// A subgroup (or any element subset) of a parent group, as a sorted index set.
class Subgroup {
 public:
  Subgroup() = default;

  /// `parent_order` is the order of the ambient group.
  Subgroup(std::size_t parent_order, std::vector<Elem> elements) : mask_(parent_order, 0) {
    for (Elem e : elements) {
      if (e >= parent_order) throw DomainError("subgroup element out of range");
      mask_[e] = 1;
    }
    for (Elem e = 0; e < parent_order; ++e)
      if (mask_[e]) elements_.push_back(e);
  }

  static Subgroup from_mask(std::vector<char> mask) {
    Subgroup s;
    s.mask_ = std::move(mask);
    for (Elem e = 0; e < s.mask_.size(); ++e)
      if (s.mask_[e]) s.elements_.push_back(e);
    return s;
  }

  static Subgroup trivial(std::size_t parent_order) { return Subgroup(parent_order, {0}); }
  static Subgroup whole(const FiniteGroup& g) {
    std::vector<Elem> all(g.order());
    std::iota(all.begin(), all.end(), Elem{0});
    return Subgroup(g.order(), std::move(all));
  }

  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t parent_order() const noexcept { return mask_.size(); }
  bool contains(Elem e) const { return e < mask_.size() && mask_[e]; }
  const std::vector<Elem>& elements() const noexcept { return elements_; }
  const std::vector<char>& mask() const noexcept { return mask_; }

  bool is_subset_of(const Subgroup& other) const {
    return std::all_of(elements_.begin(), elements_.end(), [&](Elem e) { return other.contains(e); });
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements_ == b.elements_; }
  /// Canonical order: by size, then by element set.
  friend std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b) {
    if (auto c = a.elements_.size() <=> b.elements_.size(); c != 0) return c;
    return a.elements_ <=> b.elements_;
  }

 private:
  std::vector<Elem> elements_;
  std::vector<char> mask_;
};

/// Homomorphism as an image table over the domain's elements.
struct GroupHom {
  std::vector<Elem> image;
  std::size_t codomain_order = 1;

  Elem operator()(Elem x) const { return image[x]; }

  bool is_homomorphism(const FiniteGroup& dom, const FiniteGroup& cod) const {
    if (image.size() != dom.order() || cod.order() != codomain_order) return false;
    if (image[0] != 0) return false;
    for (Elem a = 0; a < dom.order(); ++a)
      for (Elem b = 0; b < dom.order(); ++b)
        if (image[dom.mul(a, b)] != cod.mul(image[a], image[b])) return false;
    return true;
  }

  bool is_bijective() const {
    if (image.size() != codomain_order) return false;
    std::vector<char> seen(codomain_order, 0);
    for (Elem y : image)
      if (seen[y]++) return false;
    return true;
  }

  Subgroup kernel() const {
    std::vector<Elem> k;
    for (Elem x = 0; x < image.size(); ++x)
      if (image[x] == 0) k.push_back(x);
    return Subgroup(image.size(), std::move(k));
  }

  /// Full preimage of a subset of the codomain.
  Subgroup preimage(const Subgroup& target) const {
    std::vector<Elem> pre;
    for (Elem x = 0; x < image.size(); ++x)
      if (target.contains(image[x])) pre.push_back(x);
    return Subgroup(image.size(), std::move(pre));
  }

  Subgroup image_of(const Subgroup& source) const {
    std::vector<Elem> out;
    for (Elem x : source.elements()) out.push_back(image[x]);
    return Subgroup(codomain_order, std::move(out));
  }

  friend bool operator==(const GroupHom&, const GroupHom&) = default;
};

}  // namespace pgrowth::pgroups

#endif  // PGROWTH_PGROUPS_GROUP_HPP_INCLUDED
