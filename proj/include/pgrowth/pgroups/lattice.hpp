#ifndef PGROWTH_PGROUPS_LATTICE_HPP_INCLUDED
#define PGROWTH_PGROUPS_LATTICE_HPP_INCLUDED

// Subgroup lattices, automorphism groups, characteristic subgroups.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "pgrowth/pgroups/subgroups.hpp"

namespace pgrowth::pgroups {

/// Every normal subgroup exactly once, in canonical order. BFS from the
/// trivial subgroup, joining each found subgroup with the normal closure of
/// one conjugacy class at a time.
inline std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, const Limits& limits = {}) {
  if (g.order() > limits.lattice_order)
    throw ResourceError("lattice_order", limits.lattice_order, "normal subgroup lattice of a group of order " + std::to_string(g.order()));
  std::vector<Subgroup> class_closures;
  for (const auto& cls : conjugacy_classes(g))
    if (cls.front() != 0) class_closures.push_back(subgroup_generated(g, cls));
  std::sort(class_closures.begin(), class_closures.end());
  class_closures.erase(std::unique(class_closures.begin(), class_closures.end()), class_closures.end());

  std::set<Subgroup> found{Subgroup::trivial(g.order())};
  std::vector<Subgroup> queue{Subgroup::trivial(g.order())};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& k : class_closures) {
      if (k.is_subset_of(queue[i])) continue;
      Subgroup join = normal_product(g, queue[i], k);
      if (found.insert(join).second) queue.push_back(std::move(join));
    }
  }
  return {found.begin(), found.end()};
}

/// Every subgroup exactly once, by joining with cyclic subgroups.
inline std::vector<Subgroup> all_subgroups(const FiniteGroup& g, const Limits& limits = {}) {
  if (g.order() > limits.lattice_order)
    throw ResourceError("lattice_order", limits.lattice_order, "subgroup lattice of a group of order " + std::to_string(g.order()));
  std::vector<Subgroup> cyclics;
  std::vector<Elem> cyclic_gen;
  {
    std::set<Subgroup> seen;
    for (Elem x = 1; x < g.order(); ++x) {
      Subgroup c = subgroup_generated(g, {x});
      if (seen.insert(c).second) {
        cyclics.push_back(std::move(c));
        cyclic_gen.push_back(x);
      }
    }
  }
  std::set<Subgroup> found{Subgroup::trivial(g.order())};
  std::vector<Subgroup> queue{Subgroup::trivial(g.order())};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    std::vector<Elem> base = generating_set(g, queue[i]);
    for (std::size_t c = 0; c < cyclics.size(); ++c) {
      if (cyclics[c].is_subset_of(queue[i])) continue;
      Closure cl(g);
      for (Elem x : base) cl.add(x);
      cl.add(cyclic_gen[c]);
      Subgroup join = cl.subgroup();
      if (found.insert(join).second) queue.push_back(std::move(join));
    }
  }
  return {found.begin(), found.end()};
}

/// Automorphisms as element permutations; index 0 is the identity map.
struct AutGroup {
  std::vector<GroupHom> automorphisms;

  std::size_t order() const noexcept { return automorphisms.size(); }

  bool fixes(const Subgroup& s) const {
    for (const auto& a : automorphisms)
      for (Elem x : s.elements())
        if (!s.contains(a(x))) return false;
    return true;
  }
};

/// Backtracking over images of a fixed generating sequence. Each partial
/// assignment is checked on the subgroup its generators span (images must
/// have matching element orders and define a consistent map there).
inline AutGroup automorphisms(const FiniteGroup& g, const Limits& limits = {}) {
  if (g.order() > limits.aut_order)
    throw ResourceError("aut_order", limits.aut_order, "automorphism group of a group of order " + std::to_string(g.order()));
  const std::size_t n = g.order();
  std::vector<Elem> gens = g.generators();
  if (auto p = g.prime()) {
    // a Burnside basis is the shortest generating sequence available
    Subgroup phi = frattini_p(g);
    Closure c(g);
    for (Elem x : generating_set(g, phi)) c.add(x);
    gens.clear();
    for (Elem x = 0; x < n && c.order() < n; ++x)
      if (c.add(x)) gens.push_back(x);
  }
  std::vector<std::size_t> ord(n);
  for (Elem x = 0; x < n; ++x) ord[x] = g.element_order(x);

  AutGroup out;
  std::vector<Elem> images(gens.size());
  std::uint64_t work = 0;

  // Spanning-tree extension of gens[0..k) -> images[0..k); nullopt on conflict.
  auto extend = [&](std::size_t k, bool full) -> std::optional<std::vector<Elem>> {
    const Elem none = static_cast<Elem>(-1);
    std::vector<Elem> map(n, none);
    map[0] = 0;
    std::vector<Elem> queue{0};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Elem x = queue[i];
      for (std::size_t j = 0; j < k; ++j) {
        Elem y = g.mul(x, gens[j]);
        Elem fy = g.mul(map[x], images[j]);
        if (map[y] == none) {
          map[y] = fy;
          queue.push_back(y);
        } else if (map[y] != fy) {
          return std::nullopt;
        }
      }
    }
    if (full) {
      std::vector<char> hit(n, 0);
      for (Elem x = 0; x < n; ++x) {
        if (map[x] == none || hit[map[x]]) return std::nullopt;
        hit[map[x]] = 1;
      }
    } else {
      // the partial map must be injective on the spanned subgroup
      std::vector<char> hit(n, 0);
      for (Elem x : queue) {
        if (hit[map[x]]) return std::nullopt;
        hit[map[x]] = 1;
      }
    }
    return map;
  };

  std::function<void(std::size_t)> assign = [&](std::size_t k) {
    if (k == gens.size()) {
      if (auto m = extend(k, true)) out.automorphisms.push_back(GroupHom{std::move(*m), n});
      return;
    }
    for (Elem y = 1; y < n; ++y) {
      if (ord[y] != ord[gens[k]]) continue;
      if (++work > limits.search_work)
        throw ResourceError("search_work", limits.search_work, "automorphism backtracking");
      images[k] = y;
      if (extend(k + 1, false)) assign(k + 1);
    }
  };
  if (gens.empty()) {
    out.automorphisms.push_back(GroupHom{{0}, 1});
  } else {
    assign(0);
  }
  std::sort(out.automorphisms.begin(), out.automorphisms.end(),
            [](const GroupHom& a, const GroupHom& b) { return a.image < b.image; });
  return out;
}

/// Normal subgroups fixed setwise by every automorphism.
inline std::vector<Subgroup> characteristic_subgroups(const FiniteGroup& g, const Limits& limits = {}) {
  if (g.order() > limits.aut_order)
    throw ResourceError("aut_order", limits.aut_order, "characteristic subgroups of a group of order " + std::to_string(g.order()));
  AutGroup aut = automorphisms(g, limits);
  std::vector<Subgroup> out;
  for (auto& s : normal_subgroups(g, limits))
    if (aut.fixes(s)) out.push_back(std::move(s));
  return out;
}

}  // namespace pgrowth::pgroups

#endif  // PGROWTH_PGROUPS_LATTICE_HPP_INCLUDED
