#ifndef PGROWTH_FREEALG_HPP_INCLUDED
#define PGROWTH_FREEALG_HPP_INCLUDED

// Truncated power series in non-commuting variables over F_p, the Magnus
// embedding of free-group words, and the degree (valuation) it induces.

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "pgrowth/common.hpp"
#include "pgrowth/fplin.hpp"

namespace pgrowth::freealg {

using fplin::Scalar;

struct Alphabet {
  std::vector<std::string> names;
  Scalar p = 2;

  Alphabet() = default;
  Alphabet(std::vector<std::string> generator_names, Scalar prime) : names(std::move(generator_names)), p(prime) {
    fplin::require_prime(p);
    if (names.empty()) throw DomainError("alphabet must be nonempty");
    if (names.size() > 255) throw DomainError("at most 255 generators are supported");
    for (std::size_t i = 0; i < names.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (names[i] == names[j]) throw DomainError("duplicate generator '" + names[i] + "'");
  }

  std::size_t size() const noexcept { return names.size(); }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return i;
    return std::nullopt;
  }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

/// Positive weight d_x per generator.
struct DegreeMap {
  std::vector<int> weights;

  DegreeMap() = default;
  explicit DegreeMap(std::vector<int> w) : weights(std::move(w)) {
    for (int x : weights)
      if (x < 1) throw DomainError("generator degrees must be >= 1");
  }

  static DegreeMap unit(std::size_t n) { return DegreeMap(std::vector<int>(n, 1)); }

  std::size_t size() const noexcept { return weights.size(); }
  int operator[](std::size_t i) const { return weights[i]; }
  int max_weight() const { return weights.empty() ? 1 : *std::max_element(weights.begin(), weights.end()); }

  friend bool operator==(const DegreeMap&, const DegreeMap&) = default;
};

// ---------------------------------------------------------------------------

struct Letter {
  std::size_t gen = 0;
  long long exp = 1;  // never zero
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Element of the free group, stored as written (not necessarily reduced).
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) {
    for (const auto& l : letters)
      if (l.exp != 0) letters_.push_back(l);
  }

  static Word generator(std::size_t g, long long e = 1) { return Word({Letter{g, e}}); }

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  std::size_t syllables() const noexcept { return letters_.size(); }

  /// Number of letters counted with |exponent|.
  std::size_t length() const {
    std::size_t n = 0;
    for (const auto& l : letters_) n += static_cast<std::size_t>(l.exp < 0 ? -l.exp : l.exp);
    return n;
  }

  /// Free reduction; adjacent syllables in the same generator are merged.
  Word reduced() const {
    std::vector<Letter> out;
    for (const auto& l : letters_) {
      if (!out.empty() && out.back().gen == l.gen) {
        out.back().exp += l.exp;
        if (out.back().exp == 0) out.pop_back();
      } else {
        out.push_back(l);
      }
    }
    return Word(std::move(out));
  }

  Word inverse() const {
    std::vector<Letter> out(letters_.rbegin(), letters_.rend());
    for (auto& l : out) l.exp = -l.exp;
    return Word(std::move(out));
  }

  Word power(long long k) const {
    Word base = k < 0 ? inverse() : *this;
    std::vector<Letter> out;
    for (long long i = 0; i < (k < 0 ? -k : k); ++i)
      out.insert(out.end(), base.letters_.begin(), base.letters_.end());
    return Word(std::move(out));
  }

  friend Word operator*(const Word& a, const Word& b) {
    std::vector<Letter> out = a.letters_;
    out.insert(out.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(out));
  }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// [u, v] = u v u^-1 v^-1.
inline Word commutator(const Word& u, const Word& v) { return u * v * u.inverse() * v.inverse(); }

// ---------------------------------------------------------------------------

/// A monomial is a word in the generators, one char per letter.
using Monomial = std::string;

/// Power series in non-commuting variables over F_p, truncated below a
/// weighted degree N: every stored monomial has degree < N and a nonzero
/// coefficient.
class NcSeries {
 public:
  NcSeries(Scalar p, DegreeMap degrees, std::size_t truncation)
      : p_(p), degrees_(std::make_shared<const DegreeMap>(std::move(degrees))), truncation_(truncation) {
    fplin::require_prime(p);
  }

  static NcSeries one(Scalar p, const DegreeMap& degrees, std::size_t truncation) {
    NcSeries s(p, degrees, truncation);
    s.set({}, 1);
    return s;
  }

  /// The variable x_g itself (not 1 + x_g).
  static NcSeries variable(Scalar p, const DegreeMap& degrees, std::size_t truncation, std::size_t g) {
    NcSeries s(p, degrees, truncation);
    s.set(Monomial(1, static_cast<char>(g)), 1);
    return s;
  }

  Scalar p() const noexcept { return p_; }
  const DegreeMap& degrees() const noexcept { return *degrees_; }
  std::size_t truncation() const noexcept { return truncation_; }
  const std::map<Monomial, Scalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  std::size_t degree_of(const Monomial& m) const {
    std::size_t d = 0;
    for (char c : m) d += static_cast<std::size_t>((*degrees_)[static_cast<unsigned char>(c)]);
    return d;
  }

  Scalar coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
  }

  Scalar constant_term() const { return coefficient({}); }

  /// Sets a coefficient; monomials at or above the truncation are ignored.
  void set(const Monomial& m, long long c) {
    if (degree_of(m) >= truncation_) return;
    Scalar v = fplin::reduce_mod(c, p_);
    if (v == 0)
      terms_.erase(m);
    else
      terms_[m] = v;
  }

  /// Least weighted degree of a nonzero non-constant monomial, if any.
  std::optional<std::size_t> valuation_without_constant() const {
    std::optional<std::size_t> best;
    for (const auto& [m, c] : terms_) {
      if (m.empty()) continue;
      std::size_t d = degree_of(m);
      if (!best || d < *best) best = d;
    }
    return best;
  }

  NcSeries operator-() const {
    NcSeries r = *this;
    for (auto& [m, c] : r.terms_) c = fplin::sub_mod(0, c, p_);
    return r;
  }

  friend bool operator==(const NcSeries& a, const NcSeries& b) {
    return a.p_ == b.p_ && *a.degrees_ == *b.degrees_ && a.truncation_ == b.truncation_ && a.terms_ == b.terms_;
  }

  void require_compatible(const NcSeries& other) const {
    if (p_ != other.p_ || *degrees_ != *other.degrees_ || truncation_ != other.truncation_)
      throw UsageError("series differ in prime, degree map or truncation");
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    // degree-then-lexicographic order reads naturally
    std::vector<std::pair<std::size_t, const std::pair<const Monomial, Scalar>*>> order;
    for (const auto& t : terms_) order.emplace_back(degree_of(t.first), &t);
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::string out;
    for (const auto& [deg, term] : order) {
      if (!out.empty()) out += " + ";
      const auto& [m, c] = *term;
      if (m.empty()) {
        out += std::to_string(c);
        continue;
      }
      if (c != 1) out += std::to_string(c) + "*";
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += "*";
        out += names.at(static_cast<unsigned char>(m[i]));
      }
    }
    return out;
  }

 private:
  friend NcSeries nc_add(const NcSeries&, const NcSeries&);
  friend NcSeries nc_mul(const NcSeries&, const NcSeries&);

  Scalar p_;
  std::shared_ptr<const DegreeMap> degrees_;
  std::size_t truncation_;
  std::map<Monomial, Scalar> terms_;
};

inline NcSeries nc_add(const NcSeries& a, const NcSeries& b) {
  a.require_compatible(b);
  NcSeries r = a;
  for (const auto& [m, c] : b.terms_) {
    Scalar v = fplin::add_mod(r.coefficient(m), c, r.p_);
    if (v == 0)
      r.terms_.erase(m);
    else
      r.terms_[m] = v;
  }
  return r;
}

inline NcSeries nc_sub(const NcSeries& a, const NcSeries& b) { return nc_add(a, -b); }

/// Product; monomials whose degree reaches the truncation are dropped.
inline NcSeries nc_mul(const NcSeries& a, const NcSeries& b) {
  a.require_compatible(b);
  const std::size_t N = a.truncation_;
  const Scalar p = a.p_;
  // bucket the right factor by degree so each left term only visits
  // right terms that survive truncation
  std::vector<std::vector<const std::pair<const Monomial, Scalar>*>> by_degree(N);
  for (const auto& t : b.terms_) by_degree[b.degree_of(t.first)].push_back(&t);

  std::unordered_map<Monomial, Scalar> acc;
  for (const auto& [ma, ca] : a.terms_) {
    const std::size_t da = a.degree_of(ma);
    for (std::size_t db = 0; da + db < N; ++db)
      for (const auto* tb : by_degree[db]) {
        Monomial m = ma + tb->first;
        Scalar& slot = acc[m];
        slot = static_cast<Scalar>((slot + std::uint64_t{ca} * tb->second) % p);
      }
  }
  NcSeries r(p, *a.degrees_, N);
  r.degrees_ = a.degrees_;
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.emplace(std::move(m), c);
  return r;
}

/// (1 + u)^-1 = sum_k (-u)^k for u with zero constant term.
inline NcSeries nc_inverse_of_one_plus(const NcSeries& u) {
  if (u.constant_term() != 0) throw DomainError("nc_inverse_of_one_plus needs a zero constant term");
  NcSeries result = NcSeries::one(u.p(), u.degrees(), u.truncation());
  NcSeries term = result;
  const NcSeries minus_u = -u;
  // every monomial of u has degree >= 1, so (-u)^k vanishes once k >= N
  while (true) {
    term = nc_mul(term, minus_u);
    if (term.is_zero()) break;
    result = nc_add(result, term);
  }
  return result;
}

// ---------------------------------------------------------------------------

/// Series of (1 + x_g)^e, from the generalized binomial theorem.
inline NcSeries magnus_letter(std::size_t g, long long e, Scalar p, const DegreeMap& degrees,
                              std::size_t truncation) {
  NcSeries s(p, degrees, truncation);
  const std::size_t dx = static_cast<std::size_t>(degrees[g]);
  for (std::size_t j = 0; j * dx < truncation; ++j) {
    BigInt c = binomial(e, j) % p;
    if (c < 0) c += p;
    s.set(Monomial(j, static_cast<char>(g)), static_cast<long long>(c));
  }
  return s;
}

/// Image of w under x -> 1 + x, exact modulo weighted degree >= truncation.
inline NcSeries magnus(const Word& w, Scalar p, const DegreeMap& degrees, std::size_t truncation) {
  if (truncation < 1) throw DomainError("truncation must be >= 1");
  for (const auto& l : w.letters())
    if (l.gen >= degrees.size()) throw DomainError("word uses a generator without a degree");
  NcSeries result = NcSeries::one(p, degrees, truncation);
  const Word r = w.reduced();
  for (const auto& l : r.letters())
    result = nc_mul(result, magnus_letter(l.gen, l.exp, p, degrees, truncation));
  return result;
}

/// d(w): least weighted degree of a monomial of mu(w) - 1. Truncations grow
/// geometrically up to `max_truncation`; the answer does not depend on the
/// truncation once it exceeds d(w).
inline std::size_t magnus_degree(const Word& w, Scalar p, const DegreeMap& degrees,
                                 std::size_t max_truncation = 24) {
  Word r = w.reduced();
  if (r.empty()) throw DomainError("magnus_degree of the trivial word is undefined");
  std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(degrees.max_weight()) + 1, max_truncation);
  while (true) {
    NcSeries s = magnus(r, p, degrees, n);
    if (auto v = s.valuation_without_constant()) return *v;
    if (n >= max_truncation) throw DegreeCapError(max_truncation);
    n = std::min(max_truncation, n + (n + 1) / 2);
  }
}

/// {d(r) : r in rels}, preserving order and multiplicity.
inline std::vector<std::size_t> relator_hilbert_terms(const std::vector<Word>& rels, Scalar p,
                                                      const DegreeMap& degrees, std::size_t cap = 24) {
  std::vector<std::size_t> out;
  out.reserve(rels.size());
  for (std::size_t i = 0; i < rels.size(); ++i) {
    try {
      out.push_back(magnus_degree(rels[i], p, degrees, cap));
    } catch (const DegreeCapError&) {
      throw DegreeCapError(cap, i);
    }
  }
  return out;
}

}  // namespace pgrowth::freealg

#endif  // PGROWTH_FREEALG_HPP_INCLUDED
