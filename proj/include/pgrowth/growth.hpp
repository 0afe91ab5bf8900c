#ifndef PGROWTH_GROWTH_HPP_INCLUDED
#define PGROWTH_GROWTH_HPP_INCLUDED

// Normal and characteristic subgroup growth tables, and checkers for the
// counting and transfer inequalities on finite instances.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pgrowth/common.hpp"
#include "pgrowth/fplin.hpp"
#include "pgrowth/pgroups/lattice.hpp"
#include "pgrowth/pgroups/subgroups.hpp"

namespace pgrowth::growth {

using pgroups::Elem;
using pgroups::FiniteGroup;
using pgroups::Subgroup;

struct GrowthRow {
  std::size_t index = 1;
  std::size_t normal = 0;
  std::optional<std::size_t> characteristic;
  std::optional<std::size_t> subgroups;
  std::size_t cumulative_normal = 0;
  std::optional<std::size_t> cumulative_characteristic;
};

struct GrowthTable {
  std::string label;
  std::size_t order = 1;
  std::vector<GrowthRow> rows;  // one per divisor of the order, ascending

  std::size_t total_normal() const { return rows.empty() ? 0 : rows.back().cumulative_normal; }

  /// s_n: number of normal subgroups of index at most n.
  std::size_t cumulative_normal_at(std::size_t n) const {
    std::size_t s = 0;
    for (const auto& r : rows)
      if (r.index <= n) s = r.cumulative_normal;
    return s;
  }
};

inline std::vector<std::size_t> divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

inline GrowthTable growth_table(const FiniteGroup& g, bool with_characteristic = false, bool with_subgroups = false,
                                const Limits& limits = {}) {
  GrowthTable t;
  t.label = g.label();
  t.order = g.order();
  auto normal = pgroups::normal_subgroups(g, limits);
  std::vector<Subgroup> chars, subs;
  if (with_characteristic) chars = pgroups::characteristic_subgroups(g, limits);
  if (with_subgroups) subs = pgroups::all_subgroups(g, limits);
  auto count_index = [&](const std::vector<Subgroup>& list, std::size_t idx) {
    return static_cast<std::size_t>(std::count_if(list.begin(), list.end(), [&](const Subgroup& s) {
      return g.order() / s.order() == idx;
    }));
  };
  std::size_t cn = 0, cc = 0;
  for (std::size_t idx : divisors(g.order())) {
    GrowthRow r;
    r.index = idx;
    r.normal = count_index(normal, idx);
    cn += r.normal;
    r.cumulative_normal = cn;
    if (with_characteristic) {
      r.characteristic = count_index(chars, idx);
      cc += *r.characteristic;
      r.cumulative_characteristic = cc;
    }
    if (with_subgroups) r.subgroups = count_index(subs, idx);
    t.rows.push_back(r);
  }
  return t;
}

// ---------------------------------------------------------------------------

struct BoundEntry {
  std::string label;
  std::string lhs;
  std::string rhs;
  bool holds = true;
};

/// Uniform checker output. Sides are exact decimal or "a/b" strings.
struct BoundReport {
  std::string name;
  std::string relation;  // how lhs and rhs compare when the bound holds
  std::vector<BoundEntry> entries;
  std::vector<std::pair<std::string, std::string>> quantities;
  bool vacuous = false;
  bool holds = true;

  void add(std::string label, std::string lhs, std::string rhs, bool ok) {
    entries.push_back({std::move(label), std::move(lhs), std::move(rhs), ok});
    holds = holds && ok;
  }
  void note(std::string key, std::string value) { quantities.emplace_back(std::move(key), std::move(value)); }
};

inline std::string str(const BigInt& v) { return v.str(); }
inline std::string str(const Rational& v) { return to_fraction_string(v); }
inline std::string str(std::size_t v) { return std::to_string(v); }

inline std::size_t log_index(std::size_t index, std::uint64_t p) {
  auto e = exact_log(index, p);
  if (!e) throw DomainError("index " + std::to_string(index) + " is not a power of " + std::to_string(p));
  return *e;
}

/// Normal subgroups of index p^n are counted against chains
/// G = N_0 > N_1 > ... > N_n of normal subgroups with (N_i : N_{i+1}) = p.
/// N_{i+1} is a hyperplane of N_i / Phi_G(N_i), so there are at most
/// (p^f(i) - 1)/(p - 1) choices per step, f(i) = max d_G(N) over normal N
/// of index p^i.
inline BoundReport chain_upper_bound(const FiniteGroup& g, const Limits& limits = {}) {
  BoundReport r;
  r.name = "chain_upper_bound";
  r.relation = "<=";
  r.note("group", g.label());
  std::uint64_t p = pgroups::require_p_group(g, "chain_upper_bound");
  if (p == 0) {
    r.vacuous = true;
    return r;
  }
  const std::size_t top = log_index(g.order(), p);
  auto normal = pgroups::normal_subgroups(g, limits);
  std::vector<std::size_t> count(top + 1, 0), f(top + 1, 0);
  for (const auto& n : normal) {
    std::size_t i = log_index(g.order() / n.order(), p);
    ++count[i];
    f[i] = std::max(f[i], pgroups::d_normal(g, n, limits));
  }
  r.note("p", std::to_string(p));
  BigInt bound = 1;
  std::size_t f_sum = 0;
  for (std::size_t n = 1; n <= top; ++n) {
    bound *= (big_pow(BigInt(p), f[n - 1]) - 1) / (p - 1);
    f_sum += f[n - 1];
    r.note("f(" + std::to_string(n - 1) + ")", std::to_string(f[n - 1]));
    r.add("index p^" + std::to_string(n), str(BigInt(count[n])), str(bound), BigInt(count[n]) <= bound);
  }
  r.note("sum_f", std::to_string(f_sum));
  return r;
}

/// With D = dim N/Phi_G(N) and L = log_p (G:N): if D > c L, the number of
/// codimension floor(c L / 2) subspaces of F_p^D is compared with p^(c^2 L^2 / 4).
inline BoundReport subspace_lower_bound(const FiniteGroup& g, const Subgroup& n, const Rational& c,
                                        const Limits& limits = {}) {
  BoundReport r;
  r.name = "subspace_lower_bound";
  r.relation = ">=";
  r.note("group", g.label());
  if (c <= 0) throw DomainError("c must be positive");
  std::uint64_t p = pgroups::require_p_group(g, "subspace_lower_bound");
  if (!pgroups::is_subgroup(g, n) || !pgroups::is_normal(g, n)) throw DomainError("N must be normal");
  if (p == 0) {
    r.vacuous = true;
    return r;
  }
  const std::size_t log_gn = log_index(g.order() / n.order(), p);
  const std::size_t dim = n.order() == 1 ? 0 : log_index(n.order() / pgroups::phi_sub(g, n).order(), p);
  (void)limits;
  r.note("p", std::to_string(p));
  r.note("log_index", std::to_string(log_gn));
  r.note("dim", std::to_string(dim));
  r.note("c", str(c));
  if (Rational(dim) <= c * log_gn) {
    r.vacuous = true;
    return r;
  }
  const BigInt codim_big = floor_of(c * log_gn / 2);
  const auto codim = static_cast<long long>(codim_big);
  const BigInt count = fplin::gaussian_binomial(static_cast<long long>(dim), static_cast<long long>(dim) - codim, p);
  const Rational exponent = c * c * log_gn * log_gn / 4;
  // count >= p^(a/b)  <=>  count^b >= p^a
  const BigInt a = numerator(exponent), b = denominator(exponent);
  const bool ok = big_pow(count, static_cast<std::size_t>(b)) >= big_pow(BigInt(p), static_cast<std::size_t>(a));
  r.note("codim", str(codim_big));
  r.note("exponent", str(exponent));
  r.add("subspaces", str(count), std::to_string(p) + "^(" + str(exponent) + ")", ok);
  return r;
}

/// s_n(G) <= s_n(D) n^(G:D) for every n <= |G|.
inline BoundReport index_transfer_check(const FiniteGroup& g, const Subgroup& d, const Limits& limits = {}) {
  BoundReport r;
  r.name = "index_transfer_check";
  r.relation = "<=";
  r.note("group", g.label());
  auto emb = pgroups::induced_group(g, d, limits);
  GrowthTable tg = growth_table(g, false, false, limits);
  GrowthTable td = growth_table(emb.group, false, false, limits);
  const std::size_t idx = g.order() / d.order();
  r.note("index", std::to_string(idx));
  for (std::size_t n = 1; n <= g.order(); ++n) {
    BigInt lhs = tg.cumulative_normal_at(n);
    BigInt rhs = BigInt(td.cumulative_normal_at(n)) * big_pow(BigInt(n), idx);
    r.add("n=" + std::to_string(n), str(lhs), str(rhs), lhs <= rhs);
  }
  return r;
}

/// d_G(N) >= d_H(N) / (G:H) for H a normal p-subgroup of G and N <= H normal in G.
inline BoundReport virtual_transfer_check(const FiniteGroup& g, const Subgroup& h, const Subgroup& n,
                                          const Limits& limits = {}) {
  BoundReport r;
  r.name = "virtual_transfer_check";
  r.relation = ">=";
  r.note("group", g.label());
  if (!pgroups::is_subgroup(g, h) || !pgroups::is_normal(g, h)) throw DomainError("H must be normal in G");
  if (h.order() > 1 && !prime_of_power(h.order())) throw DomainError("H must be a p-group");
  if (!n.is_subset_of(h)) throw DomainError("N must lie in H");
  if (!pgroups::is_subgroup(g, n) || !pgroups::is_normal(g, n)) throw DomainError("N must be normal in G");
  auto emb = pgroups::induced_group(g, h, limits);
  Subgroup n_in_h = emb.restrict(n);
  const std::size_t dg = pgroups::d_normal(g, n, limits);
  const std::size_t dh = pgroups::d_normal(emb.group, n_in_h, limits);
  const std::size_t idx = g.order() / h.order();
  r.note("d_G(N)", std::to_string(dg));
  r.note("d_H(N)", std::to_string(dh));
  r.note("index", std::to_string(idx));
  Rational rhs(static_cast<long long>(dh), static_cast<long long>(idx));
  r.add("d_G(N)", std::to_string(dg), str(rhs), Rational(dg) >= rhs);
  return r;
}

/// d_G(Psi) >= rk_cm(H)/(G:D) - d(G), H the maximal p-quotient of D and Psi
/// the preimage of Phi(H) in D.
inline BoundReport theorem1_check(const FiniteGroup& g, const Subgroup& d, std::uint64_t p, const Limits& limits = {}) {
  BoundReport r;
  r.name = "theorem1_check";
  r.relation = ">=";
  r.note("group", g.label());
  if (!is_prime(p)) throw DomainError("p must be prime");
  if (!pgroups::is_subgroup(g, d) || !pgroups::is_normal(g, d)) throw DomainError("D must be normal in G");
  auto emb = pgroups::induced_group(g, d, limits);
  auto h = pgroups::max_p_quotient(emb.group, p, limits);
  Subgroup phi_h = pgroups::frattini_p(h.group);
  Subgroup psi = emb.lift(h.projection.preimage(phi_h), g.order());
  const std::size_t lhs = pgroups::d_normal(g, psi, limits);
  const std::size_t rk = pgroups::cmea_rank(h.group);
  const std::size_t dg = pgroups::min_generating_set_size(g, limits);
  const std::size_t idx = g.order() / d.order();
  Rational rhs = Rational(static_cast<long long>(rk), static_cast<long long>(idx)) - Rational(dg);
  r.note("p", std::to_string(p));
  r.note("|H|", std::to_string(h.group.order()));
  r.note("|Psi|", std::to_string(psi.order()));
  r.note("rk_cm(H)", std::to_string(rk));
  r.note("d(G)", std::to_string(dg));
  r.note("index", std::to_string(idx));
  r.add("d_G(Psi)", std::to_string(lhs), str(rhs), Rational(lhs) >= rhs);
  return r;
}

/// d(U_i) / (G : U_i) along a descending chain.
inline std::vector<Rational> rank_gradient_chain(const FiniteGroup& g, const std::vector<Subgroup>& chain,
                                                 const Limits& limits = {}) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (!pgroups::is_subgroup(g, chain[i])) throw DomainError("chain member is not a subgroup");
    if (i > 0 && !chain[i].is_subset_of(chain[i - 1])) throw DomainError("chain is not descending");
    auto emb = pgroups::induced_group(g, chain[i], limits);
    const std::size_t d = pgroups::min_generating_set_size(emb.group, limits);
    out.emplace_back(static_cast<long long>(d), static_cast<long long>(g.order() / chain[i].order()));
  }
  return out;
}

/// Nielsen-Schreier: an index-m subgroup of a free group of rank d has rank m(d-1)+1.
inline BigInt free_subgroup_rank(const BigInt& d, const BigInt& index) {
  if (d < 1) throw DomainError("rank must be >= 1");
  if (index < 1) throw DomainError("index must be >= 1");
  return index * (d - 1) + 1;
}

/// d1 = p^k (d-1) + 1; checks d1 + C(d1+1, 2) > d1^2/2 and
/// d1^2/2 >= ((d-1)^2/2) p^(2k).
inline BoundReport prop14_arithmetic_check(long long d, std::uint64_t p, std::size_t k) {
  BoundReport r;
  r.name = "prop14_arithmetic_check";
  r.relation = ">";
  if (d < 1) throw DomainError("d must be >= 1");
  if (!is_prime(p)) throw DomainError("p must be prime");
  const BigInt pk = big_pow(BigInt(p), k);
  const BigInt d1 = free_subgroup_rank(BigInt(d), pk);
  const BigInt rk = d1 + d1 * (d1 + 1) / 2;
  const Rational half_sq = Rational(d1 * d1) / 2;
  const Rational floor_side = Rational(BigInt(d - 1) * (d - 1)) / 2 * Rational(pk * pk);
  r.note("d1", str(d1));
  r.note("cmea_rank", str(rk));
  r.add("d1 + C(d1+1,2) > d1^2/2", str(rk), str(half_sq), Rational(rk) > half_sq);
  r.add("d1^2/2 >= (d-1)^2 p^(2k)/2", str(half_sq), str(floor_side), half_sq >= floor_side);
  return r;
}

}  // namespace pgrowth::growth

#endif  // PGROWTH_GROWTH_HPP_INCLUDED
