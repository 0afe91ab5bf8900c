#ifndef PGROWTH_FPLIN_HPP_INCLUDED
#define PGROWTH_FPLIN_HPP_INCLUDED

// Exact linear algebra over prime fields, canonical subspaces, and
// Gaussian-binomial counting.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pgrowth/common.hpp"

namespace pgrowth::fplin {

using Scalar = std::uint32_t;
using Vec = std::vector<Scalar>;

/// Largest prime accepted as a field modulus; keeps products inside 64 bits.
inline constexpr Scalar max_modulus = 65521;

inline void require_prime(std::uint64_t p) {
  if (!is_prime(p) || p > max_modulus)
    throw DomainError("modulus must be a prime <= " + std::to_string(max_modulus) + ", got " +
                      std::to_string(p));
}

inline Scalar reduce_mod(long long v, Scalar p) {
  long long r = v % static_cast<long long>(p);
  return static_cast<Scalar>(r < 0 ? r + p : r);
}

inline Scalar mul_mod(Scalar a, Scalar b, Scalar p) {
  return static_cast<Scalar>((std::uint64_t{a} * b) % p);
}

inline Scalar add_mod(Scalar a, Scalar b, Scalar p) { return (a + b) % p; }
inline Scalar sub_mod(Scalar a, Scalar b, Scalar p) { return (a + p - b) % p; }

inline Scalar inv_mod(Scalar a, Scalar p) {
  if (a % p == 0) throw DomainError("zero has no inverse");
  // extended Euclid
  long long t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    long long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return reduce_mod(t, p);
}

/// An element of F_p.
struct FpScalar {
  Scalar value = 0;
  Scalar p = 2;

  FpScalar() = default;
  FpScalar(long long v, Scalar modulus) : value(reduce_mod(v, modulus)), p(modulus) {}

  friend FpScalar operator+(FpScalar a, FpScalar b) { return {static_cast<long long>(add_mod(a.value, b.value, a.p)), a.p}; }
  friend FpScalar operator-(FpScalar a, FpScalar b) { return {static_cast<long long>(sub_mod(a.value, b.value, a.p)), a.p}; }
  friend FpScalar operator*(FpScalar a, FpScalar b) { return {static_cast<long long>(mul_mod(a.value, b.value, a.p)), a.p}; }
  FpScalar inverse() const { return {static_cast<long long>(inv_mod(value, p)), p}; }
  friend bool operator==(FpScalar, FpScalar) = default;
};

// ---------------------------------------------------------------------------

/// Dense row-major matrix over F_p.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(Scalar p, std::size_t rows, std::size_t cols)
      : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  /// Entries are reduced mod p; all rows must share one length.
  static FpMatrix from_rows(Scalar p, const std::vector<std::vector<long long>>& rows,
                            std::size_t cols_if_empty = 0) {
    std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
    FpMatrix m(p, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw UsageError("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = reduce_mod(rows[i][j], p);
    }
    return m;
  }

  static FpMatrix from_vectors(Scalar p, std::size_t cols, const std::vector<Vec>& rows) {
    FpMatrix m(p, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw UsageError("vector length does not match column count");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j] % p;
    }
    return m;
  }

  static FpMatrix identity(Scalar p, std::size_t n) {
    FpMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  Scalar p() const noexcept { return p_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Scalar operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<Scalar> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  Vec row_vector(std::size_t i) const { return Vec(row(i).begin(), row(i).end()); }

  const std::vector<Scalar>& data() const noexcept { return data_; }

  std::vector<std::vector<long long>> to_rows() const {
    std::vector<std::vector<long long>> out(rows_, std::vector<long long>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
    return out;
  }

  friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
    if (a.p_ != b.p_ || a.cols_ != b.rows_) throw UsageError("matrix product shape/modulus mismatch");
    FpMatrix c(a.p_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        Scalar aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          c(i, j) = static_cast<Scalar>((c(i, j) + std::uint64_t{aik} * b(k, j)) % a.p_);
      }
    return c;
  }

  friend FpMatrix operator+(const FpMatrix& a, const FpMatrix& b) {
    if (a.p_ != b.p_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) throw UsageError("matrix sum shape mismatch");
    FpMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = add_mod(c.data_[i], b.data_[i], a.p_);
    return c;
  }

  /// Row vector times matrix.
  Vec apply(std::span<const Scalar> v) const {
    if (v.size() != rows_) throw UsageError("vector length does not match matrix rows");
    Vec out(cols_, 0);
    for (std::size_t k = 0; k < rows_; ++k) {
      if (v[k] == 0) continue;
      for (std::size_t j = 0; j < cols_; ++j)
        out[j] = static_cast<Scalar>((out[j] + std::uint64_t{v[k]} * (*this)(k, j)) % p_);
    }
    return out;
  }

  FpMatrix transpose() const {
    FpMatrix t(p_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Scalar s) { return s == 0; });
  }

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  Scalar p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  FpMatrix form;                    // same shape as the input; zero rows at the bottom
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row-echelon form by Gauss-Jordan elimination.
inline RrefResult rref(FpMatrix m) {
  const Scalar p = m.p();
  RrefResult out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    Scalar inv = inv_mod(m(r, c), p);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = mul_mod(m(r, j), inv, p);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Scalar f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = sub_mod(m(i, j), mul_mod(f, m(r, j), p), p);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.form = std::move(m);
  return out;
}

inline std::size_t rank(const FpMatrix& m) { return rref(m).rank; }

inline std::optional<FpMatrix> inverse(const FpMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  if (n == 0) return m;
  FpMatrix aug(m.p(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto r = rref(aug);
  if (r.rank < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  FpMatrix inv(m.p(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.form(i, n + j);
  return inv;
}

/// Basis of {x : x * m = 0} (left null space), as rows.
inline std::vector<Vec> left_null_space(const FpMatrix& m) {
  // x m = 0  <=>  m^T x^T = 0
  auto r = rref(m.transpose());
  const std::size_t n = m.rows();
  std::vector<bool> is_pivot(n, false);
  for (auto c : r.pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec x(n, 0);
    x[free] = 1;
    for (std::size_t i = 0; i < r.rank; ++i)
      x[r.pivots[i]] = sub_mod(0, r.form(i, free), m.p());
    basis.push_back(std::move(x));
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Vector enumeration helpers (base-p encoding, first coordinate most significant).

inline Vec decode_vector(std::uint64_t code, Scalar p, std::size_t n) {
  Vec v(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    v[i] = static_cast<Scalar>(code % p);
    code /= p;
  }
  return v;
}

inline std::uint64_t encode_vector(std::span<const Scalar> v, Scalar p) {
  std::uint64_t code = 0;
  for (Scalar s : v) code = code * p + s;
  return code;
}

/// p^n if it does not exceed `cap`.
inline std::optional<std::uint64_t> checked_power(std::uint64_t p, std::size_t n, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (v > cap / p) return std::nullopt;
    v *= p;
  }
  return v;
}

inline bool is_zero_vector(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](Scalar s) { return s == 0; });
}

// ---------------------------------------------------------------------------

/// Incrementally maintained reduced echelon basis.
class EchelonBasis {
 public:
  EchelonBasis(Scalar p, std::size_t n) : p_(p), n_(n) {}

  std::size_t dim() const noexcept { return rows_.size(); }
  std::size_t ambient_dim() const noexcept { return n_; }
  Scalar p() const noexcept { return p_; }

  /// v minus its component along the basis; zero iff v lies in the span.
  Vec reduce(Vec v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      Scalar f = v[pivots_[i]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) v[j] = sub_mod(v[j], mul_mod(f, rows_[i][j], p_), p_);
    }
    return v;
  }

  bool contains(const Vec& v) const { return is_zero_vector(reduce(v)); }

  /// Adds v to the span; returns false if it was already there.
  bool insert(Vec v) {
    v = reduce(std::move(v));
    auto lead = std::find_if(v.begin(), v.end(), [](Scalar s) { return s != 0; });
    if (lead == v.end()) return false;
    std::size_t col = static_cast<std::size_t>(lead - v.begin());
    Scalar inv = inv_mod(*lead, p_);
    for (auto& s : v) s = mul_mod(s, inv, p_);
    for (auto& row : rows_) {
      Scalar f = row[col];
      if (f == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) row[j] = sub_mod(row[j], mul_mod(f, v[j], p_), p_);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), col) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, col);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
  }

  const std::vector<Vec>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

 private:
  Scalar p_;
  std::size_t n_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// A subspace of F_p^n stored by its unique reduced row-echelon basis, so
/// equality of subspaces is equality of representations.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(Scalar p, std::size_t n) { return Subspace(EchelonBasis(p, n)); }

  static Subspace full(Scalar p, std::size_t n) {
    EchelonBasis b(p, n);
    for (std::size_t i = 0; i < n; ++i) {
      Vec e(n, 0);
      e[i] = 1;
      b.insert(std::move(e));
    }
    return Subspace(std::move(b));
  }

  static Subspace span(Scalar p, std::size_t n, const std::vector<Vec>& vectors) {
    EchelonBasis b(p, n);
    for (const auto& v : vectors) {
      if (v.size() != n) throw UsageError("vector length does not match ambient dimension");
      b.insert(v);
    }
    return Subspace(std::move(b));
  }

  explicit Subspace(const EchelonBasis& b) : p_(b.p()), n_(b.ambient_dim()), rows_(b.rows()), pivots_(b.pivots()) {}

  Scalar p() const noexcept { return p_; }
  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  std::size_t codim() const noexcept { return n_ - rows_.size(); }
  const std::vector<Vec>& basis() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  FpMatrix basis_matrix() const { return FpMatrix::from_vectors(p_, n_, rows_); }

  EchelonBasis echelon() const {
    EchelonBasis b(p_, n_);
    for (const auto& r : rows_) b.insert(r);
    return b;
  }

  Vec reduce(Vec v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      Scalar f = v[pivots_[i]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) v[j] = sub_mod(v[j], mul_mod(f, rows_[i][j], p_), p_);
    }
    return v;
  }

  bool contains(const Vec& v) const { return is_zero_vector(reduce(v)); }

  bool contains(const Subspace& other) const {
    return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const Vec& v) { return contains(v); });
  }

  /// Coordinates of a member vector in the echelon basis (its pivot entries).
  Vec coordinates(const Vec& v) const {
    Vec c(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[pivots_[i]];
    return c;
  }

  Vec combine(std::span<const Scalar> coords) const {
    Vec v(n_, 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (coords[i] == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) v[j] = add_mod(v[j], mul_mod(coords[i], rows_[i][j], p_), p_);
    }
    return v;
  }

  Subspace join(const Subspace& other) const {
    EchelonBasis b = echelon();
    for (const auto& r : other.rows_) b.insert(r);
    return Subspace(b);
  }

  /// Zassenhaus intersection.
  Subspace intersect(const Subspace& other) const {
    if (other.n_ != n_ || other.p_ != p_) throw UsageError("subspaces live in different spaces");
    std::vector<Vec> rows;
    for (const auto& u : rows_) {
      Vec r(2 * n_);
      std::copy(u.begin(), u.end(), r.begin());
      std::copy(u.begin(), u.end(), r.begin() + static_cast<std::ptrdiff_t>(n_));
      rows.push_back(std::move(r));
    }
    for (const auto& w : other.rows_) {
      Vec r(2 * n_, 0);
      std::copy(w.begin(), w.end(), r.begin());
      rows.push_back(std::move(r));
    }
    auto red = rref(FpMatrix::from_vectors(p_, 2 * n_, rows));
    std::vector<Vec> inter;
    for (std::size_t i = 0; i < red.rank; ++i) {
      if (red.pivots[i] < n_) continue;
      inter.emplace_back(red.form.row(i).begin() + static_cast<std::ptrdiff_t>(n_), red.form.row(i).end());
    }
    return span(p_, n_, inter);
  }

  /// Image under a linear map (row vectors, right action).
  Subspace image(const FpMatrix& m) const {
    EchelonBasis b(p_, m.cols());
    for (const auto& r : rows_) b.insert(m.apply(r));
    return Subspace(b);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.p_ == b.p_ && a.n_ == b.n_ && a.rows_ == b.rows_;
  }
  /// Canonical order: dimension first, then the flattened echelon basis.
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.rows_.size() <=> b.rows_.size(); c != 0) return c;
    return a.rows_ <=> b.rows_;
  }

 private:
  Scalar p_ = 2;
  std::size_t n_ = 0;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

// ---------------------------------------------------------------------------
// Counting.

inline void require_prime_power(std::uint64_t q) {
  if (!prime_of_power(q)) throw DomainError("q must be a prime power >= 2, got " + std::to_string(q));
}

/// Number of k-dimensional subspaces of an n-dimensional space over F_q.
inline BigInt gaussian_binomial(long long n, long long k, std::uint64_t q) {
  if (k < 0 || n < 0 || k > n)
    throw DomainError("gaussian_binomial needs 0 <= k <= n, got n=" + std::to_string(n) +
                      ", k=" + std::to_string(k));
  require_prime_power(q);
  BigInt num = 1, den = 1;
  const BigInt Q = q;
  for (long long i = 0; i < k; ++i) {
    num *= big_pow(Q, static_cast<std::size_t>(n - i)) - 1;
    den *= big_pow(Q, static_cast<std::size_t>(k - i)) - 1;
  }
  return num / den;
}

inline BigInt count_all_subspaces(long long n, std::uint64_t q) {
  if (n < 0) throw DomainError("dimension must be nonnegative");
  BigInt total = 0;
  for (long long k = 0; k <= n; ++k) total += gaussian_binomial(n, k, q);
  return total;
}

/// Every subspace of F_q^n of codimension `codim`, in canonical order.
/// The walk touches exactly one candidate per subspace (one per echelon
/// pattern filling), and refuses to start when that count exceeds the cap.
inline std::vector<Subspace> enumerate_subspaces(std::size_t n, Scalar q, std::size_t codim,
                                                 const Limits& limits = {}) {
  require_prime(q);
  if (codim > n) throw DomainError("codimension exceeds ambient dimension");
  const std::size_t k = n - codim;
  BigInt total = gaussian_binomial(static_cast<long long>(n), static_cast<long long>(k), q);
  if (total > limits.enumeration)
    throw ResourceError("enumeration", limits.enumeration,
                        "enumerating " + total.str() + " subspaces of F_" + std::to_string(q) + "^" +
                            std::to_string(n));

  std::vector<Subspace> out;
  std::vector<std::size_t> piv(k);
  for (std::size_t i = 0; i < k; ++i) piv[i] = i;

  while (true) {
    // free positions: row i, columns after piv[i] that are not pivots
    std::vector<std::pair<std::size_t, std::size_t>> free;
    std::vector<bool> is_piv(n, false);
    for (auto c : piv) is_piv[c] = true;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t c = piv[i] + 1; c < n; ++c)
        if (!is_piv[c]) free.emplace_back(i, c);

    std::vector<Scalar> fill(free.size(), 0);
    while (true) {
      EchelonBasis b(q, n);
      for (std::size_t i = 0; i < k; ++i) {
        Vec r(n, 0);
        r[piv[i]] = 1;
        for (std::size_t f = 0; f < free.size(); ++f)
          if (free[f].first == i) r[free[f].second] = fill[f];
        b.insert(std::move(r));
      }
      out.emplace_back(b);
      std::size_t pos = 0;
      while (pos < fill.size() && ++fill[pos] == q) fill[pos++] = 0;
      if (pos == fill.size()) break;
    }

    // next pivot combination
    std::size_t i = k;
    while (i > 0 && piv[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++piv[i - 1];
    for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pgrowth::fplin

#endif  // PGROWTH_FPLIN_HPP_INCLUDED
