#ifndef PGROWTH_PGROUPS_CONSTRUCTORS_HPP_INCLUDED
#define PGROWTH_PGROUPS_CONSTRUCTORS_HPP_INCLUDED

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "pgrowth/pgroups/group.hpp"

namespace pgrowth::pgroups {

inline FiniteGroup trivial_group() { return FiniteGroup(); }

inline FiniteGroup cyclic(std::size_t n, const Limits& limits = {}) {
  if (n < 1) throw DomainError("cyclic group order must be >= 1");
  return FiniteGroup::from_law(
      n, [n](Elem a, Elem b) { return (a + b) % n; }, "cyclic:" + std::to_string(n), limits);
}

/// (F_p)^r; element index is the base-p encoding of the vector.
inline FiniteGroup elementary_abelian(std::size_t p, std::size_t r, const Limits& limits = {}) {
  if (!is_prime(p)) throw DomainError("elementary_abelian needs a prime");
  std::size_t n = 1;
  for (std::size_t i = 0; i < r; ++i) {
    n *= p;
    if (n > limits.group_order)
      throw ResourceError("group_order", limits.group_order, "elementary abelian group of rank " + std::to_string(r));
  }
  return FiniteGroup::from_law(
      n,
      [p, r](Elem a, Elem b) {
        Elem out = 0, scale = 1;
        for (std::size_t i = 0; i < r; ++i) {
          out += static_cast<Elem>(((a % p) + (b % p)) % p) * scale;
          a /= static_cast<Elem>(p);
          b /= static_cast<Elem>(p);
          scale *= static_cast<Elem>(p);
        }
        return out;
      },
      "elementary_abelian:" + std::to_string(p) + "," + std::to_string(r), limits);
}

/// Dihedral group of order `order` (= 2n); element r^i s^j has index i + n j.
inline FiniteGroup dihedral(std::size_t order, const Limits& limits = {}) {
  if (order < 2 || order % 2 != 0) throw DomainError("dihedral group order must be even and >= 2");
  const std::size_t n = order / 2;
  return FiniteGroup::from_law(
      order,
      [n](Elem a, Elem b) {
        std::size_t i = a % n, j = a / n, k = b % n, l = b / n;
        std::size_t rot = j == 0 ? (i + k) % n : (i + n - k) % n;
        return static_cast<Elem>(rot + n * ((j + l) % 2));
      },
      "dihedral:" + std::to_string(order), limits);
}

/// Symmetric group on m points; elements are permutations in lexicographic
/// order (identity first), composed left to right: (a b)(x) = b(a(x)).
inline FiniteGroup symmetric(std::size_t m, const Limits& limits = {}) {
  if (m < 1) throw DomainError("symmetric group needs at least one point");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    perms.push_back(perm);
    if (perms.size() > limits.group_order)
      throw ResourceError("group_order", limits.group_order, "symmetric group on " + std::to_string(m) + " points");
  } while (std::next_permutation(perm.begin(), perm.end()));
  auto index_of = [&](const std::vector<std::size_t>& q) {
    return static_cast<Elem>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  return FiniteGroup::from_law(
      perms.size(),
      [&](Elem a, Elem b) {
        std::vector<std::size_t> c(m);
        for (std::size_t x = 0; x < m; ++x) c[x] = perms[b][perms[a][x]];
        return index_of(c);
      },
      "symmetric:" + std::to_string(m), limits);
}

/// G x H; (g, h) has index g |H| + h.
inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, const Limits& limits = {}) {
  const std::size_t m = h.order();
  return FiniteGroup::from_law(
      g.order() * m,
      [&](Elem a, Elem b) {
        return static_cast<Elem>(g.mul(static_cast<Elem>(a / m), static_cast<Elem>(b / m)) * m +
                                 h.mul(static_cast<Elem>(a % m), static_cast<Elem>(b % m)));
      },
      g.label() + "*" + h.label(), limits);
}

/// Free CMEA group on d generators: normal forms x^a y^b z^c with
/// a, b in F_p^d and c in F_p^{C(d,2)}, where y_i = x_i^p and
/// z_ik = [x_i, x_k] (k < i) are central of exponent p.
/// Order p^{d + C(d+1,2)}.
inline FiniteGroup free_cmea(std::size_t d, std::size_t p, const Limits& limits = {}) {
  if (d < 1) throw DomainError("free_cmea needs d >= 1");
  if (!is_prime(p)) throw DomainError("free_cmea needs a prime");
  const std::size_t pairs = d * (d - 1) / 2;
  const std::size_t coords = 2 * d + pairs;
  std::size_t n = 1;
  for (std::size_t i = 0; i < coords; ++i) {
    n *= p;
    if (n > limits.group_order)
      throw ResourceError("group_order", limits.group_order, "free CMEA group with d=" + std::to_string(d));
  }
  // z index for the pair (i, k), k < i
  auto z_index = [](std::size_t i, std::size_t k) { return i * (i - 1) / 2 + k; };
  auto decode = [&](Elem e) {
    std::vector<std::size_t> v(coords);
    for (std::size_t i = 0; i < coords; ++i) {
      v[i] = e % p;
      e /= static_cast<Elem>(p);
    }
    return v;
  };
  auto encode = [&](const std::vector<std::size_t>& v) {
    Elem e = 0;
    for (std::size_t i = coords; i-- > 0;) e = static_cast<Elem>(e * p + v[i]);
    return e;
  };
  return FiniteGroup::from_law(
      n,
      [&](Elem lhs, Elem rhs) {
        auto u = decode(lhs), v = decode(rhs);
        // layout: a[0..d), b[d..2d), c[2d..)
        std::vector<std::size_t> w(coords, 0);
        for (std::size_t i = 0; i < pairs; ++i) w[2 * d + i] = (u[2 * d + i] + v[2 * d + i]) % p;
        for (std::size_t i = 0; i < d; ++i) w[d + i] = (u[d + i] + v[d + i]) % p;
        // moving x_k^{v_k} left past x_i^{u_i} (i > k) leaves z_ik^{u_i v_k}
        for (std::size_t k = 0; k < d; ++k)
          for (std::size_t i = k + 1; i < d; ++i) {
            std::size_t& z = w[2 * d + z_index(i, k)];
            z = (z + u[i] * v[k]) % p;
          }
        for (std::size_t i = 0; i < d; ++i) {
          std::size_t a = u[i] + v[i];
          if (a >= p) {
            a -= p;
            w[d + i] = (w[d + i] + 1) % p;  // x_i^p = y_i
          }
          w[i] = a;
        }
        return encode(w);
      },
      "free_cmea:" + std::to_string(d) + "," + std::to_string(p), limits);
}

/// (F_p)^{p^k} semidirect C_{p^k}, the generator of the top group shifting
/// coordinates cyclically. Element (v, t) has index code(v) + p^{p^k} t, so
/// the base group is exactly the indices below p^{p^k}.
inline FiniteGroup lamplighter_quotient(std::size_t p, std::size_t k, const Limits& limits = {}) {
  if (!is_prime(p)) throw DomainError("lamplighter_quotient needs a prime");
  std::size_t m = 1;
  for (std::size_t i = 0; i < k; ++i) m *= p;
  std::size_t base = 1;
  for (std::size_t i = 0; i < m; ++i) {
    base *= p;
    if (base * m > limits.group_order)
      throw ResourceError("group_order", limits.group_order,
                          "lamplighter quotient p=" + std::to_string(p) + ", k=" + std::to_string(k));
  }
  auto coord = [&](std::size_t code, std::size_t i) {
    for (std::size_t j = 0; j < i; ++j) code /= p;
    return code % p;
  };
  return FiniteGroup::from_law(
      base * m,
      [&](Elem a, Elem b) {
        std::size_t va = a % base, ta = a / base, vb = b % base, tb = b / base;
        std::size_t out = 0, scale = 1;
        for (std::size_t i = 0; i < m; ++i) {
          // (sigma^t w)_i = w_{i - t}
          std::size_t c = (coord(va, i) + coord(vb, (i + m - ta) % m)) % p;
          out += c * scale;
          scale *= p;
        }
        return static_cast<Elem>(out + base * ((ta + tb) % m));
      },
      "lamplighter:" + std::to_string(p) + "," + std::to_string(k), limits);
}

/// The base subgroup (F_p)^{p^k} of lamplighter_quotient(p, k).
inline Subgroup lamplighter_base(std::size_t p, std::size_t k) {
  std::size_t m = 1;
  for (std::size_t i = 0; i < k; ++i) m *= p;
  std::size_t base = 1;
  for (std::size_t i = 0; i < m; ++i) base *= p;
  std::vector<Elem> elems(base);
  std::iota(elems.begin(), elems.end(), Elem{0});
  return Subgroup(base * m, std::move(elems));
}

}  // namespace pgrowth::pgroups

#endif  // PGROWTH_PGROUPS_CONSTRUCTORS_HPP_INCLUDED
