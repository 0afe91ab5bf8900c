#ifndef PGROWTH_COMMON_HPP_INCLUDED
#define PGROWTH_COMMON_HPP_INCLUDED

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace pgrowth {

/// Exact nonnegative (or signed) integer of unbounded size.
using BigInt = boost::multiprecision::cpp_int;
/// Exact rational number; always kept in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Error hierarchy. The CLI maps these onto its exit codes.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the mathematical input failed (k > n, t0 outside (0,1), ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Operands that cannot be combined (mismatched primes, truncations, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A configured cap was exceeded.
class ResourceError : public Error {
 public:
  ResourceError(std::string cap_name, std::uint64_t cap_value, const std::string& what)
      : Error(what + " (cap '" + cap_name + "' = " + std::to_string(cap_value) + ")"),
        cap_name_(std::move(cap_name)),
        cap_value_(cap_value) {}

  const std::string& cap_name() const noexcept { return cap_name_; }
  std::uint64_t cap_value() const noexcept { return cap_value_; }

 private:
  std::string cap_name_;
  std::uint64_t cap_value_;
};

/// mu(w) - 1 has no nonzero monomial below the degree cap.
class DegreeCapError : public ResourceError {
 public:
  DegreeCapError(std::uint64_t cap, std::optional<std::size_t> relator = std::nullopt)
      : ResourceError("degree", cap,
                      relator ? "degree of relator " + std::to_string(*relator) + " exceeds cap"
                              : std::string("degree exceeds cap")),
        relator_(relator) {}

  std::optional<std::size_t> relator() const noexcept { return relator_; }

 private:
  std::optional<std::size_t> relator_;
};

/// Text input could not be parsed; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message,
             std::string expected = {})
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              message + (expected.empty() ? std::string() : " (expected " + expected + ")")),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string expected_;
};

// ---------------------------------------------------------------------------
// Configurable caps. Every brute-force walk consults one of these.

struct Limits {
  std::uint64_t enumeration = std::uint64_t{1} << 20;  // candidate vectors / subspaces
  std::uint64_t degree = 24;                           // Magnus truncation N_max
  std::uint64_t group_order = 4096;
  std::uint64_t lattice_order = 512;
  std::uint64_t aut_order = 128;
  std::uint64_t search_work = 2'000'000;  // closures tried by exhaustive generator searches

  /// Every cap multiplied by `factor`.
  Limits scaled(std::uint64_t factor) const {
    Limits out = *this;
    out.enumeration *= factor;
    out.degree *= factor;
    out.group_order *= factor;
    out.lattice_order *= factor;
    out.aut_order *= factor;
    out.search_work *= factor;
    return out;
  }
};

// ---------------------------------------------------------------------------
// Small integer helpers.

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// If n = p^k with p prime and k >= 1, returns p.
inline std::optional<std::uint64_t> prime_of_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  if (n != 1) return std::nullopt;
  return p;
}

/// log_p(n) when n is an exact power of p (n = 1 gives 0).
inline std::optional<std::size_t> exact_log(std::uint64_t n, std::uint64_t p) {
  if (n == 0 || p < 2) return std::nullopt;
  std::size_t k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return k;
}

inline BigInt big_pow(const BigInt& base, std::size_t e) {
  BigInt result = 1;
  for (std::size_t i = 0; i < e; ++i) result *= base;
  return result;
}

inline Rational rational_pow(const Rational& base, long long e) {
  if (e < 0) return rational_pow(Rational(1) / base, -e);
  Rational result = 1;
  for (long long i = 0; i < e; ++i) result *= base;
  return result;
}

/// Generalized binomial coefficient C(n, k) for any integer n and k >= 0.
inline BigInt binomial(long long n, std::size_t k) {
  BigInt num = 1, den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    num *= BigInt(n - static_cast<long long>(i));
    den *= BigInt(i + 1);
  }
  return num / den;
}

inline BigInt floor_of(const Rational& r) {
  BigInt q = boost::multiprecision::numerator(r) / boost::multiprecision::denominator(r);
  if (r < 0 && Rational(q) != r) q -= 1;
  return q;
}

/// Smallest x >= 0 with x^k >= n, for n >= 0 and k >= 1.
inline BigInt ceil_root(const BigInt& n, std::size_t k) {
  if (n <= 1) return n;
  BigInt lo = 1, hi = 1;
  while (big_pow(hi, k) < n) hi *= 2;
  while (lo < hi) {
    BigInt mid = (lo + hi) / 2;
    if (big_pow(mid, k) >= n)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

/// Exact "a/b" rendering; the denominator is always printed.
inline std::string to_fraction_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

/// Parses "a/b" or a bare integer "a".
inline Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) throw DomainError("not a rational 'a/b': " + std::string(text));
  BigInt n(std::string(num.front() == '+' ? num.substr(1) : num));
  BigInt d(std::string(den.front() == '+' ? den.substr(1) : den));
  if (d == 0) throw DomainError("zero denominator in " + std::string(text));
  return Rational(n, d);
}

}  // namespace pgrowth

#endif  // PGROWTH_COMMON_HPP_INCLUDED
