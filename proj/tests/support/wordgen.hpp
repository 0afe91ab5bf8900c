// Random free-group words and the valuation-axiom checks on them.
#pragma once

#include <random>

#include "pgrowth/freealg.hpp"

namespace wordgen {

using pgrowth::freealg::DegreeMap;
using pgrowth::freealg::Letter;
using pgrowth::freealg::Word;

/// Nonempty reduced word with at most `max_len` letters counted with multiplicity.
inline Word random_word(std::mt19937_64& rng, std::size_t gens, std::size_t max_len) {
  while (true) {
    std::vector<Letter> ls;
    std::size_t budget = 1 + rng() % max_len;
    while (budget > 0) {
      long long e = 1 + static_cast<long long>(rng() % std::min<std::size_t>(budget, 3));
      budget -= static_cast<std::size_t>(e);
      ls.push_back({rng() % gens, rng() % 2 ? e : -e});
    }
    Word w = Word(ls).reduced();
    if (!w.empty() && w.length() <= max_len) return w;
  }
}

/// d(w) >= bound, decided at truncation `bound`: either the valuation comes
/// out at or above it, or mu(w) - 1 vanishes below it.
inline bool degree_at_least(const Word& w, pgrowth::fplin::Scalar p, const DegreeMap& deg, std::size_t bound) {
  if (w.reduced().empty() || bound <= 1) return true;
  try {
    return pgrowth::freealg::magnus_degree(w, p, deg, bound) >= bound;
  } catch (const pgrowth::DegreeCapError&) {
    return true;
  }
}

struct AxiomResult {
  bool product = true, inverse = true, commutator = true;
  bool all() const { return product && inverse && commutator; }
};

/// d(uv) >= min, d(u^-1) = d(u), d([u,v]) >= d(u) + d(v).
inline AxiomResult check_axioms(const Word& u, const Word& v, pgrowth::fplin::Scalar p, const DegreeMap& deg) {
  const std::size_t cap = 64;
  const std::size_t du = pgrowth::freealg::magnus_degree(u, p, deg, cap);
  const std::size_t dv = pgrowth::freealg::magnus_degree(v, p, deg, cap);
  AxiomResult r;
  r.inverse = pgrowth::freealg::magnus_degree(u.inverse(), p, deg, du + 1) == du;
  r.product = degree_at_least(u * v, p, deg, std::min(du, dv));
  r.commutator = degree_at_least(pgrowth::freealg::commutator(u, v), p, deg, du + dv);
  return r;
}

}  // namespace wordgen
