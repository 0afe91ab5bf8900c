#ifndef PGROWTH_GSCERT_HPP_INCLUDED
#define PGROWTH_GSCERT_HPP_INCLUDED

// Hilbert series of generators and relators, exact evaluation of
// 1 - H_X(t) + H_R(t), certificate search over weights and a rational grid,
// and the normal-generator lower bound a certificate implies.

#include <map>
#include <optional>
#include <vector>

#include "pgrowth/common.hpp"
#include "pgrowth/freealg.hpp"

namespace pgrowth::gscert {

using freealg::Alphabet;
using freealg::DegreeMap;
using freealg::Word;

struct Presentation {
  Alphabet alphabet;
  std::vector<Word> relators;
  DegreeMap default_weights;

  Presentation() = default;
  Presentation(Alphabet a, std::vector<Word> rels, std::optional<DegreeMap> weights = std::nullopt)
      : alphabet(std::move(a)), default_weights(weights ? std::move(*weights) : DegreeMap::unit(alphabet.size())) {
    if (default_weights.size() != alphabet.size()) throw DomainError("one weight per generator is required");
    for (auto& r : rels) {
      for (const auto& l : r.letters())
        if (l.gen >= alphabet.size()) throw DomainError("relator uses an unknown generator");
      Word red = r.reduced();
      if (red.empty()) throw DomainError("relators must be nontrivial after free reduction");
      relators.push_back(std::move(red));
    }
  }

  std::size_t generator_count() const noexcept { return alphabet.size(); }
  fplin::Scalar p() const noexcept { return alphabet.p; }

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Polynomial in t with nonnegative integer coefficients.
class HilbertPoly {
 public:
  HilbertPoly() = default;

  void add_term(std::size_t exponent, const BigInt& coefficient = 1) {
    if (coefficient == 0) return;
    coefficients_[exponent] += coefficient;
  }

  const std::map<std::size_t, BigInt>& coefficients() const noexcept { return coefficients_; }
  bool is_zero() const noexcept { return coefficients_.empty(); }
  std::size_t max_exponent() const { return coefficients_.empty() ? 0 : coefficients_.rbegin()->first; }

  Rational evaluate(const Rational& t) const {
    Rational sum = 0;
    for (const auto& [e, c] : coefficients_) sum += Rational(c) * rational_pow(t, static_cast<long long>(e));
    return sum;
  }

  friend bool operator==(const HilbertPoly&, const HilbertPoly&) = default;

 private:
  std::map<std::size_t, BigInt> coefficients_;
};

struct GsCertificate {
  DegreeMap degree_map;
  Rational t0;
  Rational value;  // 1 - H_X(t0) + H_R(t0) < 0
  Rational delta;  // -value
};

inline HilbertPoly hilbert_of_generators(const DegreeMap& deg) {
  HilbertPoly h;
  for (int w : deg.weights) h.add_term(static_cast<std::size_t>(w));
  return h;
}

inline HilbertPoly hilbert_of_relators(const Presentation& pres, const DegreeMap& deg, std::size_t cap = 24) {
  if (cap < 1) throw DomainError("degree cap must be >= 1");
  HilbertPoly h;
  for (std::size_t d : freealg::relator_hilbert_terms(pres.relators, pres.p(), deg, cap)) h.add_term(d);
  return h;
}

inline void require_open_unit(const Rational& t0) {
  if (t0 <= 0 || t0 >= 1) throw DomainError("t0 must lie strictly between 0 and 1, got " + to_fraction_string(t0));
}

inline Rational ggs_value(const HilbertPoly& hx, const HilbertPoly& hr, const Rational& t0) {
  require_open_unit(t0);
  return Rational(1) - hx.evaluate(t0) + hr.evaluate(t0);
}

inline Rational ggs_value(const Presentation& pres, const DegreeMap& deg, const Rational& t0, std::size_t cap = 24) {
  require_open_unit(t0);
  return ggs_value(hilbert_of_generators(deg), hilbert_of_relators(pres, deg, cap), t0);
}

/// Recomputes the value from scratch; true iff it matches and is negative.
inline bool verify_certificate(const Presentation& pres, const GsCertificate& cert, std::size_t cap = 24) {
  Rational v = ggs_value(pres, cert.degree_map, cert.t0, cap);
  return v == cert.value && v < 0 && cert.delta == -v;
}

struct SearchReport {
  std::optional<GsCertificate> certificate;
  // Inconclusive outcome data; a missing certificate is not a disproof.
  int weight_bound = 1;
  std::size_t grid = 2;
  std::size_t maps_scanned = 0;
  std::size_t maps_pruned = 0;
  std::optional<Rational> min_value;  // least exactly evaluated value
  std::optional<DegreeMap> min_weights;
  std::optional<Rational> min_t0;

  bool found() const noexcept { return certificate.has_value(); }
};

/// Scans degree maps with weights in [1, W] in lexicographic order and
/// t0 in {1/Q, ..., (Q-1)/Q} ascending; returns the first certificate.
/// A map is pruned without computing relator degrees when
/// 1 - H_X((Q-1)/Q) >= 0, since then no grid point can be negative.
inline SearchReport ggs_search(const Presentation& pres, int weight_bound, std::size_t grid, std::size_t cap = 24) {
  if (weight_bound < 1) throw DomainError("weight bound must be >= 1");
  if (grid < 2) throw DomainError("grid denominator must be >= 2");
  SearchReport report;
  report.weight_bound = weight_bound;
  report.grid = grid;

  const std::size_t n = pres.generator_count();
  std::vector<int> w(n, 1);
  const Rational t_max(static_cast<long long>(grid - 1), static_cast<long long>(grid));
  while (true) {
    DegreeMap deg(w);
    ++report.maps_scanned;
    HilbertPoly hx = hilbert_of_generators(deg);
    if (Rational(1) - hx.evaluate(t_max) >= 0) {
      ++report.maps_pruned;
    } else {
      HilbertPoly hr = hilbert_of_relators(pres, deg, cap);
      for (std::size_t a = 1; a < grid; ++a) {
        Rational t(static_cast<long long>(a), static_cast<long long>(grid));
        Rational v = ggs_value(hx, hr, t);
        if (!report.min_value || v < *report.min_value) {
          report.min_value = v;
          report.min_weights = deg;
          report.min_t0 = t;
        }
        if (v < 0) {
          report.certificate = GsCertificate{deg, t, v, -v};
          return report;
        }
      }
    }
    // lexicographic successor, first generator most significant
    std::size_t i = n;
    while (i > 0 && w[i - 1] == weight_bound) w[--i] = 1;
    if (i == 0) break;
    ++w[i - 1];
  }
  return report;
}

/// floor(delta * t0^-n) + 1: lower bound on the number of normal generators
/// of a normal subgroup all of whose elements have degree >= n.
inline BigInt gs_generator_bound(const GsCertificate& cert, long long n) {
  if (n < 1) throw DomainError("n must be >= 1");
  require_open_unit(cert.t0);
  return floor_of(cert.delta * rational_pow(cert.t0, -n)) + 1;
}

}  // namespace pgrowth::gscert

#endif  // PGROWTH_GSCERT_HPP_INCLUDED
