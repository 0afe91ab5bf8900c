// Random F_pG-modules for property tests: direct sums of trivial, regular,
// cyclic-submodule and quotient pieces, conjugated by a random basis change.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "pgrowth/pgrowth.hpp"

namespace modgen {

using pgrowth::fpgmod::FpGModule;
using pgrowth::fplin::FpMatrix;
using pgrowth::fplin::Scalar;
using pgrowth::fplin::Vec;

inline Vec random_vector(std::mt19937_64& rng, Scalar p, std::size_t n) {
  Vec v(n);
  for (auto& x : v) x = static_cast<Scalar>(rng() % p);
  return v;
}

inline FpMatrix random_invertible(std::mt19937_64& rng, Scalar p, std::size_t n) {
  while (true) {
    FpMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<Scalar>(rng() % p);
    if (pgrowth::fplin::inverse(m)) return m;
  }
}

/// One indecomposable-ish piece of dimension at most `room`, or nothing.
inline std::optional<FpGModule> random_piece(std::mt19937_64& rng, std::shared_ptr<const pgrowth::pgroups::FiniteGroup> g,
                                             Scalar p, std::size_t room) {
  using namespace pgrowth::fpgmod;
  const FpGModule reg = regular_module(g, p);
  switch (rng() % 4) {
    case 0:
      return trivial_module(g, p, 1);
    case 1:
      if (reg.dim() <= room) return reg;
      break;
    case 2: {
      Subspace s = spin(reg, {random_vector(rng, p, reg.dim())});
      if (s.dim() > 0 && s.dim() <= room) return submodule_module(reg, s);
      break;
    }
    default: {
      Subspace s = spin(reg, {random_vector(rng, p, reg.dim())});
      if (s.dim() < reg.dim() && reg.dim() - s.dim() <= room) return quotient_frame(reg, s).module();
      break;
    }
  }
  return std::nullopt;
}

/// A module of dimension in [1, max_dim].
inline FpGModule random_module(std::mt19937_64& rng, std::shared_ptr<const pgrowth::pgroups::FiniteGroup> g, Scalar p,
                               std::size_t max_dim) {
  using namespace pgrowth::fpgmod;
  const std::size_t target = 1 + rng() % max_dim;
  std::optional<FpGModule> acc;
  for (int attempts = 0; attempts < 50 && (!acc || acc->dim() < target); ++attempts) {
    std::size_t room = target - (acc ? acc->dim() : 0);
    auto piece = random_piece(rng, g, p, room);
    if (!piece) continue;
    acc = acc ? direct_sum(*acc, *piece) : *piece;
  }
  if (!acc) acc = trivial_module(g, p, 1);
  return change_basis(*acc, random_invertible(rng, p, acc->dim()));
}

struct Case {
  std::string group;
  Scalar p;
};

inline const std::vector<Case>& cases() {
  static const std::vector<Case> c = {{"cyclic:2", 2}, {"cyclic:2", 3}, {"cyclic:3", 2},
                                      {"cyclic:3", 3}, {"symmetric:3", 2}, {"symmetric:3", 3}};
  return c;
}

}  // namespace modgen
