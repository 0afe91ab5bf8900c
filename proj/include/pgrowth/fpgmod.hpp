#ifndef PGROWTH_FPGMOD_HPP_INCLUDED
#define PGROWTH_FPGMOD_HPP_INCLUDED

// Modules over F_pG for finite groups G. Vectors are rows and G acts on the
// right, so the matrix of g h is M(g) M(h).

#include <algorithm>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "pgrowth/common.hpp"
#include "pgrowth/fplin.hpp"
#include "pgrowth/pgroups/group.hpp"

namespace pgrowth::fpgmod {

using fplin::EchelonBasis;
using fplin::FpMatrix;
using fplin::Scalar;
using fplin::Subspace;
using fplin::Vec;
using pgroups::Elem;
using pgroups::FiniteGroup;

class FpGModule {
 public:
  FpGModule() = default;

  /// One matrix per generator. Throws unless the generators generate G,
  /// the matrices are invertible, and g -> M(g) is well defined on G
  /// (checked exactly along every Cayley-graph edge).
  FpGModule(Scalar p, std::shared_ptr<const FiniteGroup> group, std::vector<Elem> generators,
            std::vector<FpMatrix> matrices)
      : p_(p), group_(std::move(group)), generators_(std::move(generators)), matrices_(std::move(matrices)) {
    fplin::require_prime(p_);
    if (!group_) throw UsageError("module needs a group");
    if (generators_.size() != matrices_.size()) throw DomainError("one matrix per generator is required");
    dim_ = matrices_.empty() ? 0 : matrices_.front().rows();
    for (std::size_t i = 0; i < matrices_.size(); ++i) {
      const auto& m = matrices_[i];
      if (generators_[i] >= group_->order()) throw DomainError("generator index out of range");
      if (m.p() != p_ || m.rows() != dim_ || m.cols() != dim_) throw DomainError("generator matrices must be square of one size over F_p");
      if (!fplin::inverse(m)) throw DomainError("generator matrix is not invertible");
    }
    build_element_matrices();
  }

  /// As above but with the dimension given explicitly (needed when there are
  /// no generators, i.e. G trivial).
  FpGModule(Scalar p, std::shared_ptr<const FiniteGroup> group, std::vector<Elem> generators,
            std::vector<FpMatrix> matrices, std::size_t dim)
      : FpGModule(p, std::move(group), std::move(generators), std::move(matrices)) {
    if (!matrices_.empty() && dim != dim_) throw DomainError("dimension does not match matrices");
    if (matrices_.empty()) {
      dim_ = dim;
      build_element_matrices();
    }
  }

  Scalar p() const noexcept { return p_; }
  std::size_t dim() const noexcept { return dim_; }
  const FiniteGroup& group() const { return *group_; }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const noexcept { return group_; }
  const std::vector<Elem>& generators() const noexcept { return generators_; }
  const std::vector<FpMatrix>& matrices() const noexcept { return matrices_; }
  const FpMatrix& element_matrix(Elem g) const { return element_matrices_.at(g); }

  /// v . g for generator number i.
  Vec act(const Vec& v, std::size_t i) const { return matrices_[i].apply(v); }

  bool is_submodule(const Subspace& u) const {
    if (u.ambient_dim() != dim_) return false;
    for (const auto& m : matrices_)
      for (const auto& b : u.basis())
        if (!u.contains(m.apply(b))) return false;
    return true;
  }

 private:
  void build_element_matrices() {
    const std::size_t n = group_->order();
    std::vector<std::optional<FpMatrix>> mats(n);
    mats[0] = FpMatrix::identity(p_, dim_);
    std::vector<Elem> queue{0};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Elem x = queue[i];
      for (std::size_t j = 0; j < generators_.size(); ++j) {
        Elem y = group_->mul(x, generators_[j]);
        FpMatrix my = *mats[x] * matrices_[j];
        if (!mats[y]) {
          mats[y] = std::move(my);
          queue.push_back(y);
        } else if (*mats[y] != my) {
          throw DomainError("generator matrices do not satisfy the group relations");
        }
      }
    }
    if (queue.size() != n) throw DomainError("module generators do not generate the group");
    element_matrices_.clear();
    for (auto& m : mats) element_matrices_.push_back(std::move(*m));
  }

  Scalar p_ = 2;
  std::shared_ptr<const FiniteGroup> group_;
  std::vector<Elem> generators_;
  std::vector<FpMatrix> matrices_;
  std::vector<FpMatrix> element_matrices_;
  std::size_t dim_ = 0;
};

inline std::shared_ptr<const FiniteGroup> share(const FiniteGroup& g) { return std::make_shared<const FiniteGroup>(g); }

/// F_pG with basis indexed by group elements, e_x . g = e_{xg}.
inline FpGModule regular_module(std::shared_ptr<const FiniteGroup> g, Scalar p) {
  const std::size_t n = g->order();
  std::vector<FpMatrix> mats;
  for (Elem s : g->generators()) {
    FpMatrix m(p, n, n);
    for (Elem x = 0; x < n; ++x) m(x, g->mul(x, s)) = 1;
    mats.push_back(std::move(m));
  }
  return FpGModule(p, g, g->generators(), std::move(mats), n);
}

inline FpGModule trivial_module(std::shared_ptr<const FiniteGroup> g, Scalar p, std::size_t dim = 1) {
  std::vector<FpMatrix> mats(g->generators().size(), FpMatrix::identity(p, dim));
  return FpGModule(p, g, g->generators(), std::move(mats), dim);
}

inline void require_same_action_data(const FpGModule& a, const FpGModule& b) {
  if (a.p() != b.p() || a.group() != b.group() || a.generators() != b.generators())
    throw UsageError("modules over different groups, primes or generator lists");
}

inline FpMatrix block_diagonal(const FpMatrix& a, const FpMatrix& b) {
  FpMatrix m(a.p(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

inline FpGModule direct_sum(const FpGModule& a, const FpGModule& b) {
  require_same_action_data(a, b);
  std::vector<FpMatrix> mats;
  for (std::size_t i = 0; i < a.matrices().size(); ++i) mats.push_back(block_diagonal(a.matrices()[i], b.matrices()[i]));
  return FpGModule(a.p(), a.group_ptr(), a.generators(), std::move(mats), a.dim() + b.dim());
}

/// M^n, block diagonal; n = 0 gives the zero module.
inline FpGModule power_module(const FpGModule& m, std::size_t n, const Limits& limits = {}) {
  if (n * m.dim() > 64 || !fplin::checked_power(m.p(), n * m.dim(), limits.enumeration))
    throw ResourceError("enumeration", limits.enumeration, "power module of dimension " + std::to_string(n * m.dim()));
  std::vector<FpMatrix> mats;
  for (const auto& a : m.matrices()) {
    FpMatrix acc(m.p(), 0, 0);
    for (std::size_t k = 0; k < n; ++k) acc = block_diagonal(acc, a);
    mats.push_back(std::move(acc));
  }
  return FpGModule(m.p(), m.group_ptr(), m.generators(), std::move(mats), n * m.dim());
}

/// The same module written in the basis given by the rows of `basis`:
/// new matrices are B A B^-1.
inline FpGModule change_basis(const FpGModule& m, const FpMatrix& basis) {
  auto inv = fplin::inverse(basis);
  if (!inv) throw DomainError("change of basis matrix is not invertible");
  std::vector<FpMatrix> mats;
  for (const auto& a : m.matrices()) mats.push_back(basis * a * *inv);
  return FpGModule(m.p(), m.group_ptr(), m.generators(), std::move(mats), m.dim());
}

inline void require_enumerable(const FpGModule& m, const Limits& limits, const char* what) {
  if (m.dim() > 63 || !fplin::checked_power(m.p(), m.dim(), limits.enumeration))
    throw ResourceError("enumeration", limits.enumeration,
                        std::string(what) + ": p^" + std::to_string(m.dim()) + " vectors");
}

/// Smallest submodule containing `seed` and the given vectors.
inline Subspace spin(const FpGModule& m, const std::vector<Vec>& vectors, const Subspace* seed = nullptr) {
  EchelonBasis b = seed ? seed->echelon() : EchelonBasis(m.p(), m.dim());
  std::vector<Vec> queue;
  auto push = [&](const Vec& v) {
    if (b.insert(v)) queue.push_back(v);
  };
  for (const auto& v : vectors) {
    if (v.size() != m.dim()) throw UsageError("vector length does not match module dimension");
    push(v);
  }
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::size_t j = 0; j < m.matrices().size(); ++j) push(m.act(queue[i], j));
  return Subspace(b);
}

/// M2 / M1 for submodules M1 <= M2, with a canonical complement: the
/// reductions of M2 modulo the echelon basis of M1.
class SubquotientFrame {
 public:
  SubquotientFrame(const FpGModule& m, Subspace m1, Subspace m2) : m1_(std::move(m1)), m2_(std::move(m2)) {
    if (!m.is_submodule(m1_) || !m.is_submodule(m2_)) throw DomainError("frame bounds must be submodules");
    if (!m2_.contains(m1_)) throw DomainError("frame needs M1 <= M2");
    std::vector<Vec> reps;
    for (const auto& b : m2_.basis()) reps.push_back(m1_.reduce(b));
    complement_ = Subspace::span(m.p(), m.dim(), reps);
    std::vector<FpMatrix> mats;
    const std::size_t k = complement_.dim();
    for (const auto& a : m.matrices()) {
      FpMatrix q(m.p(), k, k);
      for (std::size_t i = 0; i < k; ++i) {
        Vec c = project(a.apply(complement_.basis()[i]));
        for (std::size_t j = 0; j < k; ++j) q(i, j) = c[j];
      }
      mats.push_back(std::move(q));
    }
    module_ = FpGModule(m.p(), m.group_ptr(), m.generators(), std::move(mats), k);
  }

  const Subspace& lower() const noexcept { return m1_; }
  const Subspace& upper() const noexcept { return m2_; }
  const Subspace& complement() const noexcept { return complement_; }
  const FpGModule& module() const noexcept { return module_; }

  /// Coordinates in M2/M1 of a vector of M2.
  Vec project(const Vec& v) const { return complement_.coordinates(m1_.reduce(v)); }
  /// A representative in M2 of a quotient vector.
  Vec lift(const Vec& coords) const { return complement_.combine(coords); }

  /// Full preimage in M of a subspace of M2/M1.
  Subspace lift_subspace(const Subspace& s) const {
    EchelonBasis b = m1_.echelon();
    for (const auto& v : s.basis()) b.insert(lift(v));
    return Subspace(b);
  }

 private:
  Subspace m1_, m2_, complement_;
  FpGModule module_;
};

inline SubquotientFrame quotient_frame(const FpGModule& m, const Subspace& n) {
  return SubquotientFrame(m, n, Subspace::full(m.p(), m.dim()));
}

inline FpGModule submodule_module(const FpGModule& m, const Subspace& u) {
  return SubquotientFrame(m, Subspace::zero(m.p(), m.dim()), u).module();
}

/// Basis of Hom(S, T) as matrices X with A_g X = X B_g.
inline std::vector<FpMatrix> hom_space(const FpGModule& s, const FpGModule& t) {
  require_same_action_data(s, t);
  const std::size_t a = s.dim(), b = t.dim();
  const Scalar p = s.p();
  const std::size_t eqs_per = a * b;
  FpMatrix sys(p, a * b, eqs_per * s.matrices().size());
  for (std::size_t g = 0; g < s.matrices().size(); ++g) {
    const FpMatrix& A = s.matrices()[g];
    const FpMatrix& B = t.matrices()[g];
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < b; ++j) {
        std::size_t col = g * eqs_per + i * b + j;
        // (A X)_{ij} = sum_l A_il X_lj
        for (std::size_t l = 0; l < a; ++l)
          sys(l * b + j, col) = fplin::add_mod(sys(l * b + j, col), A(i, l), p);
        // (X B)_{ij} = sum_l X_il B_lj
        for (std::size_t l = 0; l < b; ++l)
          sys(i * b + l, col) = fplin::sub_mod(sys(i * b + l, col), B(l, j), p);
      }
  }
  std::vector<FpMatrix> out;
  std::vector<Vec> null;
  if (s.matrices().empty()) {
    for (std::size_t u = 0; u < a * b; ++u) {
      Vec e(a * b, 0);
      e[u] = 1;
      null.push_back(std::move(e));
    }
  } else {
    null = fplin::left_null_space(sys);
  }
  for (const auto& x : null) {
    FpMatrix m(p, a, b);
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < b; ++j) m(i, j) = x[i * b + j];
    out.push_back(std::move(m));
  }
  return out;
}

/// An invertible intertwiner X (v -> v X) from S to T, if any.
inline std::optional<FpMatrix> module_iso(const FpGModule& s, const FpGModule& t, const Limits& limits = {}) {
  require_same_action_data(s, t);
  if (s.dim() != t.dim()) return std::nullopt;
  auto homs = hom_space(s, t);
  if (homs.empty()) {
    if (s.dim() == 0) return FpMatrix(s.p(), 0, 0);
    return std::nullopt;
  }
  for (const auto& h : homs)
    if (fplin::inverse(h)) return h;
  if (homs.size() > 63 || !fplin::checked_power(s.p(), homs.size(), limits.enumeration))
    throw ResourceError("enumeration", limits.enumeration, "hom space of dimension " + std::to_string(homs.size()));
  const std::uint64_t total = *fplin::checked_power(s.p(), homs.size(), limits.enumeration);
  for (std::uint64_t code = 1; code < total; ++code) {
    Vec c = fplin::decode_vector(code, s.p(), homs.size());
    FpMatrix x(s.p(), s.dim(), s.dim());
    for (std::size_t i = 0; i < homs.size(); ++i)
      for (Scalar r = 0; r < c[i]; ++r) x = x + homs[i];
    if (fplin::inverse(x)) return x;
  }
  return std::nullopt;
}

inline BigInt endomorphism_count(const FpGModule& s) { return big_pow(BigInt(s.p()), hom_space(s, s).size()); }

/// Socle with a decomposition into simple submodules (a direct sum).
struct SocleResult {
  Subspace socle;
  std::vector<Subspace> simples;
};

/// A cyclic submodule spin(v) is simple iff every nonzero vector in it spins
/// to a subspace of the same dimension. Vectors are tried in order of their
/// spin dimension, skipping those already in the running sum.
inline SocleResult socle_decomposition(const FpGModule& m, const Limits& limits = {}) {
  require_enumerable(m, limits, "socle");
  const Scalar p = m.p();
  const std::size_t d = m.dim();
  SocleResult out{Subspace::zero(p, d), {}};
  if (d == 0) return out;
  const std::uint64_t total = *fplin::checked_power(p, d, limits.enumeration);
  std::vector<std::uint32_t> spin_dim(total, 0);
  std::vector<std::uint64_t> order;
  for (std::uint64_t code = 1; code < total; ++code) {
    Vec v = fplin::decode_vector(code, p, d);
    auto lead = std::find_if(v.begin(), v.end(), [](Scalar s) { return s != 0; });
    if (*lead != 1) continue;  // one representative per line
    spin_dim[code] = static_cast<std::uint32_t>(spin(m, {v}).dim());
    order.push_back(code);
  }
  auto dim_of = [&](Vec v) {
    auto lead = std::find_if(v.begin(), v.end(), [](Scalar s) { return s != 0; });
    Scalar f = fplin::inv_mod(*lead, p);
    for (auto& x : v) x = fplin::mul_mod(x, f, p);
    return spin_dim[fplin::encode_vector(v, p)];
  };
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return spin_dim[a] < spin_dim[b]; });
  EchelonBasis sum(p, d);
  for (std::uint64_t code : order) {
    Vec v = fplin::decode_vector(code, p, d);
    if (sum.contains(v)) continue;
    Subspace s = spin(m, {v});
    const std::size_t k = s.dim();
    const std::uint64_t size = *fplin::checked_power(p, k, limits.enumeration);
    bool simple = true;
    for (std::uint64_t c = 1; c < size && simple; ++c) {
      Vec u = s.combine(fplin::decode_vector(c, p, k));
      if (dim_of(u) != k) simple = false;
    }
    if (!simple) continue;
    for (const auto& b : s.basis()) sum.insert(b);
    out.simples.push_back(std::move(s));
  }
  out.socle = Subspace(sum);
  return out;
}

inline Subspace socle(const FpGModule& m, const Limits& limits = {}) { return socle_decomposition(m, limits).socle; }

/// Groups the summands of a socle decomposition by isomorphism type.
struct IsotypicClass {
  FpGModule simple;                       // module on the first summand
  std::vector<std::size_t> summands;      // indices into SocleResult::simples
};

inline std::vector<IsotypicClass> isotypic_classes(const FpGModule& m, const SocleResult& soc, const Limits& limits = {}) {
  std::vector<IsotypicClass> classes;
  for (std::size_t i = 0; i < soc.simples.size(); ++i) {
    FpGModule t = submodule_module(m, soc.simples[i]);
    bool placed = false;
    for (auto& c : classes) {
      if (module_iso(c.simple, t, limits)) {
        c.summands.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back(IsotypicClass{std::move(t), {i}});
  }
  return classes;
}

/// Representatives of the simple F_pG-modules, from the composition factors
/// of the regular module (repeated socle and quotient).
inline std::vector<FpGModule> simple_modules(std::shared_ptr<const FiniteGroup> g, Scalar p, const Limits& limits = {}) {
  std::vector<FpGModule> reps;
  FpGModule cur = regular_module(g, p);
  while (cur.dim() > 0) {
    SocleResult soc = socle_decomposition(cur, limits);
    for (const auto& s : soc.simples) {
      FpGModule t = submodule_module(cur, s);
      bool known = std::any_of(reps.begin(), reps.end(), [&](const FpGModule& r) { return module_iso(r, t, limits).has_value(); });
      if (!known) reps.push_back(std::move(t));
    }
    cur = quotient_frame(cur, soc.socle).module();
  }
  std::stable_sort(reps.begin(), reps.end(), [](const FpGModule& a, const FpGModule& b) { return a.dim() < b.dim(); });
  return reps;
}

/// c_ell = c_1 / 2^(ell-1), c_1 = 1 / (sum of dimensions of the simples).
inline Rational gerdau_constant(std::shared_ptr<const FiniteGroup> g, Scalar p, std::size_t ell, const Limits& limits = {}) {
  if (ell < 1) throw DomainError("depth must be >= 1");
  std::size_t total = 0;
  for (const auto& s : simple_modules(g, p, limits)) total += s.dim();
  return Rational(1, static_cast<long long>(total)) / Rational(big_pow(2, ell - 1));
}

/// M1 < M2 with M2/M1 isomorphic to simple^multiplicity. Each witness is a
/// (dim simple) x (dim M) matrix whose rows lie in M2 and which induces an
/// injective module map simple -> M2/M1; together they span M2/M1.
struct IsotypicSection {
  Subspace m1, m2;
  FpGModule simple;
  std::size_t multiplicity = 0;
  std::size_t depth = 1;
  std::vector<FpMatrix> witnesses;
};

inline IsotypicSection isotypic_section(const FpGModule& m, const Limits& limits = {}) {
  if (m.dim() == 0) throw DomainError("isotypic section of the zero module");
  SocleResult soc = socle_decomposition(m, limits);
  const std::size_t dn = soc.socle.dim();
  if (2 * dn > m.dim()) {
    auto classes = isotypic_classes(m, soc, limits);
    auto best = std::max_element(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
      return a.summands.size() < b.summands.size();
    });
    IsotypicSection out;
    out.m1 = Subspace::zero(m.p(), m.dim());
    EchelonBasis top(m.p(), m.dim());
    for (std::size_t i : best->summands) {
      const Subspace& t = soc.simples[i];
      for (const auto& b : t.basis()) top.insert(b);
      auto x = module_iso(best->simple, submodule_module(m, t), limits);
      if (!x) throw Error("isotypic class members are not isomorphic");
      // rows: images of the simple's basis in ambient coordinates
      out.witnesses.push_back(*x * t.basis_matrix());
    }
    out.m2 = Subspace(top);
    out.simple = best->simple;
    out.multiplicity = best->summands.size();
    out.depth = dn == m.dim() ? 1 : 2;
    return out;
  }
  SubquotientFrame frame = quotient_frame(m, soc.socle);
  IsotypicSection inner = isotypic_section(frame.module(), limits);
  IsotypicSection out;
  out.m1 = frame.lift_subspace(inner.m1);
  out.m2 = frame.lift_subspace(inner.m2);
  out.simple = std::move(inner.simple);
  out.multiplicity = inner.multiplicity;
  out.depth = inner.depth + 1;
  for (const auto& w : inner.witnesses) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < w.rows(); ++i) rows.push_back(frame.lift(w.row_vector(i)));
    out.witnesses.push_back(FpMatrix::from_vectors(m.p(), m.dim(), rows));
  }
  return out;
}

/// Independent re-check of a section: bounds are submodules, each witness
/// intertwines modulo M1, and the witnesses span M2/M1 directly.
inline bool verify_section(const FpGModule& m, const IsotypicSection& s) {
  if (!m.is_submodule(s.m1) || !m.is_submodule(s.m2) || !s.m2.contains(s.m1)) return false;
  if (s.m2.dim() <= s.m1.dim()) return false;
  const std::size_t k = s.simple.dim();
  if (s.witnesses.size() != s.multiplicity || s.m2.dim() - s.m1.dim() != k * s.multiplicity) return false;
  if (s.simple.p() != m.p() || s.simple.generators() != m.generators()) return false;
  EchelonBasis span = s.m1.echelon();
  for (const auto& e : s.witnesses) {
    if (e.rows() != k || e.cols() != m.dim()) return false;
    for (std::size_t i = 0; i < k; ++i) {
      if (!s.m2.contains(e.row_vector(i))) return false;
      if (!span.insert(e.row_vector(i))) return false;
    }
    for (std::size_t g = 0; g < m.matrices().size(); ++g) {
      FpMatrix lhs = s.simple.matrices()[g] * e;
      FpMatrix rhs = e * m.matrices()[g];
      for (std::size_t i = 0; i < k; ++i) {
        Vec diff(m.dim());
        for (std::size_t j = 0; j < m.dim(); ++j) diff[j] = fplin::sub_mod(lhs(i, j), rhs(i, j), m.p());
        if (!s.m1.contains(diff)) return false;
      }
    }
  }
  return span.dim() == s.m2.dim();
}

/// Every submodule, found by closing {0} under U -> U + spin(v) for coset
/// representatives v of M/U.
inline std::vector<Subspace> all_submodules(const FpGModule& m, const Limits& limits = {}) {
  require_enumerable(m, limits, "submodule lattice");
  const Scalar p = m.p();
  std::set<Subspace> found{Subspace::zero(p, m.dim())};
  std::vector<Subspace> queue{Subspace::zero(p, m.dim())};
  std::uint64_t work = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Subspace u = queue[i];
    SubquotientFrame frame = quotient_frame(m, u);
    const std::size_t k = frame.complement().dim();
    const std::uint64_t total = *fplin::checked_power(p, k, limits.enumeration);
    for (std::uint64_t code = 1; code < total; ++code) {
      Vec c = fplin::decode_vector(code, p, k);
      if (*std::find_if(c.begin(), c.end(), [](Scalar s) { return s != 0; }) != 1) continue;
      if (++work > limits.search_work) throw ResourceError("search_work", limits.search_work, "submodule lattice");
      Subspace w = spin(m, {frame.lift(c)}, &u);
      if (found.insert(w).second) {
        if (found.size() > limits.enumeration)
          throw ResourceError("enumeration", limits.enumeration, "submodule lattice size");
        queue.push_back(std::move(w));
      }
    }
  }
  return {found.begin(), found.end()};
}

inline BigInt count_submodules(const FpGModule& m, const Limits& limits = {}) {
  return BigInt(all_submodules(m, limits).size());
}

}  // namespace pgrowth::fpgmod

#endif  // PGROWTH_FPGMOD_HPP_INCLUDED
