#ifndef PGROWTH_PGROUPS_SUBGROUPS_HPP_INCLUDED
#define PGROWTH_PGROUPS_SUBGROUPS_HPP_INCLUDED

// Closures, quotients, Frattini-type subgroups and generator counts.

#include <algorithm>
#include <functional>
#include <numeric>
#include <span>
#include <vector>

#include "pgrowth/pgroups/group.hpp"

namespace pgrowth::pgroups {

/// Exhaustive search stopped at its work cap; the true value lies in
/// [lower, upper].
class SearchCapError : public ResourceError {
 public:
  SearchCapError(std::uint64_t cap, std::size_t lower, std::size_t upper, const std::string& what)
      : ResourceError("search_work", cap,
                      what + ": bracket [" + std::to_string(lower) + ", " + std::to_string(upper) + "]"),
        lower_(lower),
        upper_(upper) {}

  std::size_t lower() const noexcept { return lower_; }
  std::size_t upper() const noexcept { return upper_; }

 private:
  std::size_t lower_;
  std::size_t upper_;
};

/// Incrementally grown subgroup with a record of the generators added.
class Closure {
 public:
  explicit Closure(const FiniteGroup& g) : g_(&g), mask_(g.order(), 0), elements_{0} { mask_[0] = 1; }

  bool contains(Elem e) const { return mask_[e] != 0; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Elem>& generators() const noexcept { return gens_; }

  /// Adds x and closes up; returns false if x was already present.
  bool add(Elem x) {
    if (mask_[x]) return false;
    gens_.push_back(x);
    // every old element times every generator, then new elements likewise
    std::vector<Elem> queue = elements_;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (Elem gen : gens_) {
        Elem y = g_->mul(queue[i], gen);
        if (!mask_[y]) {
          mask_[y] = 1;
          elements_.push_back(y);
          queue.push_back(y);
        }
      }
    return true;
  }

  void add_all(std::span<const Elem> xs) {
    for (Elem x : xs) add(x);
  }

  Subgroup subgroup() const { return Subgroup::from_mask(mask_); }

 private:
  const FiniteGroup* g_;
  std::vector<char> mask_;
  std::vector<Elem> elements_;
  std::vector<Elem> gens_;
};

inline Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Elem> gens) {
  Closure c(g);
  for (Elem x : gens) {
    if (x >= g.order()) throw DomainError("generator index out of range");
    c.add(x);
  }
  return c.subgroup();
}

inline Subgroup subgroup_generated(const FiniteGroup& g, std::initializer_list<Elem> gens) {
  return subgroup_generated(g, std::span<const Elem>(gens.begin(), gens.size()));
}

/// A small generating set of a subgroup, chosen greedily in index order.
inline std::vector<Elem> generating_set(const FiniteGroup& g, const Subgroup& h) {
  Closure c(g);
  for (Elem x : h.elements())
    if (c.order() < h.order()) c.add(x);
  return c.generators();
}

inline Subgroup normal_closure(const FiniteGroup& g, std::span<const Elem> gens) {
  Closure c(g);
  for (Elem x : gens) {
    if (x >= g.order()) throw DomainError("generator index out of range");
    c.add(x);
  }
  for (std::size_t i = 0; i < c.generators().size(); ++i) {
    Elem h = c.generators()[i];
    for (Elem s : g.generators()) c.add(g.conjugate(h, s));
  }
  return c.subgroup();
}

inline Subgroup normal_closure(const FiniteGroup& g, std::initializer_list<Elem> gens) {
  return normal_closure(g, std::span<const Elem>(gens.begin(), gens.size()));
}

inline bool is_subgroup(const FiniteGroup& g, const Subgroup& h) {
  if (h.parent_order() != g.order() || !h.contains(0)) return false;
  for (Elem a : h.elements())
    for (Elem b : h.elements())
      if (!h.contains(g.mul(a, b))) return false;
  return true;
}

inline bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (Elem x : h.elements())
    for (Elem s : g.generators())
      if (!h.contains(g.conjugate(x, s))) return false;
  return true;
}

/// Conjugacy classes, each sorted, ordered by least element (identity first).
inline std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<std::vector<Elem>> classes;
  for (Elem x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<Elem> cls{x};
    seen[x] = 1;
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (Elem s : g.generators()) {
        Elem y = g.conjugate(cls[i], s);
        if (!seen[y]) {
          seen[y] = 1;
          cls.push_back(y);
        }
      }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

inline Subgroup center(const FiniteGroup& g) {
  std::vector<Elem> z;
  for (Elem x = 0; x < g.order(); ++x) {
    bool central = std::all_of(g.generators().begin(), g.generators().end(),
                               [&](Elem s) { return g.mul(x, s) == g.mul(s, x); });
    if (central) z.push_back(x);
  }
  return Subgroup(g.order(), std::move(z));
}

inline Subgroup derived_subgroup(const FiniteGroup& g) {
  std::vector<Elem> comms;
  for (Elem a : g.generators())
    for (Elem b : g.generators()) comms.push_back(g.commutator(a, b));
  return normal_closure(g, comms);
}

/// Product of two normal subgroups.
inline Subgroup normal_product(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<char> mask(g.order(), 0);
  for (Elem x : a.elements()) {
    if (mask[x]) continue;
    for (Elem y : b.elements()) mask[g.mul(x, y)] = 1;
  }
  return Subgroup::from_mask(std::move(mask));
}

inline Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> out;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
                        std::back_inserter(out));
  return Subgroup(a.parent_order(), std::move(out));
}

// ---------------------------------------------------------------------------

struct Quotient {
  FiniteGroup group;
  GroupHom projection;
};

/// G/N on left cosets; coset labels follow the least element of each coset.
inline Quotient quotient(const FiniteGroup& g, const Subgroup& n, const Limits& limits = {}) {
  if (!is_subgroup(g, n) || !is_normal(g, n)) throw DomainError("quotient needs a normal subgroup");
  const std::size_t m = g.order() / n.order();
  std::vector<Elem> label(g.order(), static_cast<Elem>(-1));
  std::vector<Elem> rep;
  for (Elem x = 0; x < g.order(); ++x) {
    if (label[x] != static_cast<Elem>(-1)) continue;
    Elem id = static_cast<Elem>(rep.size());
    rep.push_back(x);
    for (Elem y : n.elements()) label[g.mul(x, y)] = id;
  }
  std::vector<Elem> table(m * m);
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b) table[a * m + b] = label[g.mul(rep[a], rep[b])];
  std::string name = g.label().empty() ? std::string("quotient") : g.label() + "/N";
  return {FiniteGroup::from_table(m, std::move(table), std::move(name), limits), GroupHom{std::move(label), m}};
}

struct Embedded {
  FiniteGroup group;
  std::vector<Elem> embedding;  // subgroup index -> parent element

  GroupHom as_hom(std::size_t parent_order) const { return GroupHom{embedding, parent_order}; }

  /// Parent-level subgroup -> subgroup of `group` (elements outside are ignored).
  Subgroup restrict(const Subgroup& s) const {
    std::vector<Elem> out;
    for (Elem i = 0; i < embedding.size(); ++i)
      if (s.contains(embedding[i])) out.push_back(i);
    return Subgroup(embedding.size(), std::move(out));
  }

  Subgroup lift(const Subgroup& s, std::size_t parent_order) const {
    std::vector<Elem> out;
    for (Elem i : s.elements()) out.push_back(embedding[i]);
    return Subgroup(parent_order, std::move(out));
  }
};

/// The subgroup H as a group in its own right; H's i-th least element becomes i.
inline Embedded induced_group(const FiniteGroup& g, const Subgroup& h, const Limits& limits = {}) {
  if (!is_subgroup(g, h)) throw DomainError("induced_group needs a subgroup");
  const auto& el = h.elements();
  const std::size_t m = el.size();
  std::vector<Elem> index(g.order(), 0);
  for (Elem i = 0; i < m; ++i) index[el[i]] = i;
  std::vector<Elem> table(m * m);
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b) table[a * m + b] = index[g.mul(el[a], el[b])];
  return {FiniteGroup::from_table(m, std::move(table), "subgroup", limits), el};
}

// ---------------------------------------------------------------------------

inline std::uint64_t require_p_group(const FiniteGroup& g, const char* what) {
  if (g.order() == 1) return 0;
  auto p = g.prime();
  if (!p) throw DomainError(std::string(what) + " needs a p-group, got order " + std::to_string(g.order()));
  return *p;
}

/// Phi(G) = G^p [G, G] for a p-group G.
inline Subgroup frattini_p(const FiniteGroup& g) {
  std::uint64_t p = require_p_group(g, "frattini_p");
  if (p == 0) return Subgroup::trivial(1);
  std::vector<Elem> gens;
  for (Elem x = 0; x < g.order(); ++x) gens.push_back(g.power(x, static_cast<long long>(p)));
  for (Elem a : g.generators())
    for (Elem b : g.generators()) gens.push_back(g.commutator(a, b));
  return normal_closure(g, gens);
}

/// Phi_G(N) = N^p [N, G] for a normal p-subgroup N.
inline Subgroup phi_sub(const FiniteGroup& g, const Subgroup& n) {
  if (!is_subgroup(g, n) || !is_normal(g, n)) throw DomainError("phi_sub needs a normal subgroup");
  if (n.order() == 1) return n;
  auto p = prime_of_power(n.order());
  if (!p) throw DomainError("phi_sub needs a p-subgroup, got order " + std::to_string(n.order()));
  std::vector<Elem> gens;
  for (Elem x : n.elements()) gens.push_back(g.power(x, static_cast<long long>(*p)));
  for (Elem x : generating_set(g, n))
    for (Elem s : g.generators()) gens.push_back(g.commutator(x, s));
  return normal_closure(g, gens);
}

/// Burnside basis size log_p (G : Phi(G)).
inline std::size_t d_min(const FiniteGroup& g) {
  std::uint64_t p = require_p_group(g, "d_min");
  if (p == 0) return 0;
  return *exact_log(g.order() / frattini_p(g).order(), p);
}

/// log_p (G : Phi_G(Phi(G))).
inline std::size_t cmea_rank(const FiniteGroup& g) {
  std::uint64_t p = require_p_group(g, "cmea_rank");
  if (p == 0) return 0;
  return *exact_log(g.order() / phi_sub(g, frattini_p(g)).order(), p);
}

/// True when Phi(G) is central of exponent p (G/Phi(G) is always elementary abelian).
inline bool is_cmea(const FiniteGroup& g) {
  std::uint64_t p = require_p_group(g, "is_cmea");
  if (p == 0) return true;
  Subgroup phi = frattini_p(g);
  Subgroup z = center(g);
  for (Elem x : phi.elements())
    if (!z.contains(x) || g.power(x, static_cast<long long>(p)) != 0) return false;
  return true;
}

/// G / O^p(G), where O^p(G) is generated by the elements of order prime to p.
inline Quotient max_p_quotient(const FiniteGroup& g, std::uint64_t p, const Limits& limits = {}) {
  if (!is_prime(p)) throw DomainError("max_p_quotient needs a prime");
  std::vector<Elem> coprime;
  for (Elem x = 1; x < g.order(); ++x)
    if (g.element_order(x) % p != 0) coprime.push_back(x);
  return quotient(g, subgroup_generated(g, coprime), limits);
}

// ---------------------------------------------------------------------------

/// Minimal size of a set of classes of G in N whose normal closure is N.
/// Classes that already lie in the partial product are skipped, since a
/// minimal normal generating set never contains a redundant class.
inline std::size_t d_normal_search(const FiniteGroup& g, const Subgroup& n, const Limits& limits = {},
                                   std::size_t seed_upper = 0) {
  if (!is_subgroup(g, n) || !is_normal(g, n)) throw DomainError("d_normal needs a normal subgroup");
  if (n.order() == 1) return 0;

  std::vector<Subgroup> class_closures;
  for (const auto& cls : conjugacy_classes(g)) {
    if (cls.front() == 0 || !n.contains(cls.front())) continue;
    class_closures.push_back(subgroup_generated(g, cls));
  }
  // a class whose closure is N settles m = 1
  for (const auto& k : class_closures)
    if (k.order() == n.order()) return 1;

  // greedy upper bound
  std::size_t upper = 0;
  {
    Subgroup cur = Subgroup::trivial(g.order());
    for (const auto& k : class_closures) {
      if (cur.order() == n.order()) break;
      if (k.is_subset_of(cur)) continue;
      cur = normal_product(g, cur, k);
      ++upper;
    }
  }
  if (seed_upper != 0) upper = std::min(upper, seed_upper);

  std::uint64_t work = 0;
  std::function<bool(std::size_t, std::size_t, const Subgroup&)> dfs = [&](std::size_t start, std::size_t left,
                                                                          const Subgroup& cur) -> bool {
    for (std::size_t c = start; c < class_closures.size(); ++c) {
      if (class_closures[c].is_subset_of(cur)) continue;
      if (++work > limits.search_work) return false;
      Subgroup next = normal_product(g, cur, class_closures[c]);
      if (left == 1) {
        if (next.order() == n.order()) return true;
      } else if (next.order() < n.order() && dfs(c + 1, left - 1, next)) {
        return true;
      }
    }
    return false;
  };
  for (std::size_t m = 2; m < upper; ++m) {
    if (dfs(0, m, Subgroup::trivial(g.order()))) return m;
    if (work > limits.search_work)
      throw SearchCapError(limits.search_work, m, upper, "normal generator search");
  }
  return upper;
}

/// d_G(N). For p-groups this is dim N / Phi_G(N), since a set normally
/// generates N exactly when its image spans that central elementary quotient.
inline std::size_t d_normal(const FiniteGroup& g, const Subgroup& n, const Limits& limits = {}) {
  if (!is_subgroup(g, n) || !is_normal(g, n)) throw DomainError("d_normal needs a normal subgroup");
  if (n.order() == 1) return 0;
  if (auto p = g.prime()) return *exact_log(n.order() / phi_sub(g, n).order(), *p);
  return d_normal_search(g, n, limits);
}

/// Elements of N whose images form a basis of N / Phi_G(N); they normally generate N.
inline std::vector<Elem> normal_generating_witness(const FiniteGroup& g, const Subgroup& n) {
  Subgroup phi = phi_sub(g, n);
  Closure c(g);
  for (Elem x : generating_set(g, phi)) c.add(x);
  std::vector<Elem> witness;
  for (Elem x : n.elements()) {
    if (c.contains(x)) continue;
    witness.push_back(x);
    // Phi_G(N) together with the chosen elements is normal, so plain
    // closure of the union is enough
    c.add(x);
  }
  return witness;
}

/// d(G): exact minimal generating-set size. p-groups use the Burnside basis
/// unless `exhaustive` is requested.
inline std::size_t min_generating_set_size(const FiniteGroup& g, const Limits& limits = {}, bool exhaustive = false) {
  if (g.order() == 1) return 0;
  if (!exhaustive && g.prime()) return d_min(g);

  const std::size_t upper = g.generators().size();
  std::vector<Elem> reps;
  for (const auto& cls : conjugacy_classes(g))
    if (cls.front() != 0) reps.push_back(cls.front());

  std::uint64_t work = 0;
  std::function<bool(Elem, std::size_t, const Closure&)> dfs;
  // extend by elements with index > `from`
  dfs = [&](Elem from, std::size_t left, const Closure& cur) -> bool {
    for (Elem x = from + 1; x < g.order(); ++x) {
      if (cur.contains(x)) continue;
      if (++work > limits.search_work) return false;
      Closure next = cur;
      next.add(x);
      if (left == 1) {
        if (next.order() == g.order()) return true;
      } else if (dfs(x, left - 1, next)) {
        return true;
      }
    }
    return false;
  };
  for (std::size_t m = 1; m < upper; ++m) {
    for (Elem r : reps) {
      Closure c(g);
      c.add(r);
      if (m == 1) {
        ++work;
        if (c.order() == g.order()) return 1;
        continue;
      }
      if (dfs(0, m - 1, c)) return m;
    }
    if (work > limits.search_work) throw SearchCapError(limits.search_work, m, upper, "generator search");
  }
  return upper;
}

}  // namespace pgrowth::pgroups

#endif  // PGROWTH_PGROUPS_SUBGROUPS_HPP_INCLUDED
