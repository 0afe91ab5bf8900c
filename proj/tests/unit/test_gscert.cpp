#include <catch_amalgamated.hpp>

#include <random>

#include "pgrowth/gscert.hpp"

using namespace pgrowth;
using namespace pgrowth::gscert;
using freealg::commutator;

namespace {

Word g(std::size_t i, long long e = 1) { return Word::generator(i, e); }

Alphabet letters(std::size_t n, fplin::Scalar p) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return Alphabet(names, p);
}

Rational R(long long a, long long b) { return Rational(a, b); }

/// r relators of degree 2 over F_2 on d generators, repeating a pool as needed.
std::vector<Word> quadratic_relators(std::size_t d, std::size_t r) {
  std::vector<Word> pool;
  for (std::size_t i = 0; i < d; ++i) pool.push_back(g(i, 2));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) pool.push_back(commutator(g(i), g(j)));
  std::vector<Word> out;
  for (std::size_t k = 0; k < r; ++k) out.push_back(pool[k % pool.size()]);
  return out;
}

}  // namespace

TEST_CASE("hilbert series of generators") {
  auto h = hilbert_of_generators(DegreeMap::unit(2));
  CHECK(h.coefficients() == std::map<std::size_t, BigInt>{{1, 2}});
  auto h12 = hilbert_of_generators(DegreeMap({1, 2}));
  CHECK(h12.coefficients() == std::map<std::size_t, BigInt>{{1, 1}, {2, 1}});
  CHECK(hilbert_of_generators(DegreeMap::unit(4)).evaluate(R(1, 2)) == 2);
}

TEST_CASE("hilbert series of relators") {
  Presentation free2(letters(2, 2), {});
  CHECK(hilbert_of_relators(free2, DegreeMap::unit(2)).is_zero());
  Presentation comm(letters(2, 2), {commutator(g(0), g(1))});
  CHECK(hilbert_of_relators(comm, DegreeMap::unit(2)).coefficients() == std::map<std::size_t, BigInt>{{2, 1}});
  Presentation x4(letters(1, 2), {g(0, 4)});
  CHECK(hilbert_of_relators(x4, DegreeMap::unit(1)).coefficients() == std::map<std::size_t, BigInt>{{4, 1}});
  CHECK_THROWS_AS(hilbert_of_relators(x4, DegreeMap::unit(1), 0), DomainError);
}

TEST_CASE("ggs_value examples") {
  Presentation free2(letters(2, 2), {});
  CHECK(ggs_value(free2, DegreeMap::unit(2), R(2, 3)) == R(-1, 3));
  Presentation gs(letters(4, 2), quadratic_relators(4, 3));
  CHECK(ggs_value(gs, DegreeMap::unit(4), R(1, 2)) == R(-1, 4));
  CHECK_THROWS_AS(ggs_value(free2, DegreeMap::unit(2), R(0, 1)), DomainError);
  CHECK_THROWS_AS(ggs_value(free2, DegreeMap::unit(2), R(1, 1)), DomainError);
  CHECK_THROWS_AS(ggs_value(free2, DegreeMap::unit(2), R(-1, 2)), DomainError);
}

TEST_CASE("one generator is never certified") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Word> rels;
    for (std::size_t k = rng() % 3; k > 0; --k) rels.push_back(g(0, 1 + static_cast<long long>(rng() % 5)));
    Presentation one(letters(1, 3), rels);
    Rational t = R(1 + static_cast<long long>(rng() % 19), 20);
    CHECK(ggs_value(one, DegreeMap::unit(1), t) >= Rational(1) - t);
  }
}

TEST_CASE("ggs_search examples") {
  Presentation free2(letters(2, 2), {});
  auto found = ggs_search(free2, 1, 8);
  REQUIRE(found.found());
  CHECK(found.certificate->value < 0);
  CHECK(verify_certificate(free2, *found.certificate));

  Presentation comm(letters(2, 2), {commutator(g(0), g(1))});
  auto none = ggs_search(comm, 1, 64);
  CHECK_FALSE(none.found());
  REQUIRE(none.min_value.has_value());
  CHECK(*none.min_value >= 0);
  CHECK(none.maps_scanned == 1);

  Presentation gs(letters(4, 2), quadratic_relators(4, 3));
  auto cert = ggs_search(gs, 1, 2);
  REQUIRE(cert.found());
  CHECK(cert.certificate->t0 == R(1, 2));
  CHECK(cert.certificate->value == R(-1, 4));
  CHECK(cert.certificate->delta == R(1, 4));

  CHECK_THROWS_AS(ggs_search(gs, 0, 4), DomainError);
  CHECK_THROWS_AS(ggs_search(gs, 1, 1), DomainError);
}

TEST_CASE("pruned maps are counted and leave min_value empty") {
  Presentation one(letters(1, 2), {g(0, 2)});
  auto r = ggs_search(one, 3, 16);
  CHECK_FALSE(r.found());
  CHECK(r.maps_scanned == 3);
  CHECK(r.maps_pruned == 3);
  CHECK_FALSE(r.min_value.has_value());
}

TEST_CASE("gs_generator_bound examples") {
  GsCertificate c{DegreeMap::unit(2), R(2, 3), R(-1, 3), R(1, 3)};
  CHECK(gs_generator_bound(c, 3) == 2);
  CHECK(gs_generator_bound(c, 1) == 1);
  CHECK_THROWS_AS(gs_generator_bound(c, 0), DomainError);
  BigInt prev = gs_generator_bound(c, 1);
  for (long long n = 2; n <= 30; ++n) {
    BigInt b = gs_generator_bound(c, n);
    CHECK(b >= prev);
    if (c.delta * (rational_pow(c.t0, -n) - rational_pow(c.t0, -(n - 1))) >= 1) CHECK(b > prev);
    prev = b;
  }
}

TEST_CASE("values are exact with bounded denominators") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t d = 2 + rng() % 3;
    Presentation pres(letters(d, 2), quadratic_relators(d, rng() % 5));
    std::vector<int> w(d);
    for (auto& x : w) x = 1 + static_cast<int>(rng() % 3);
    DegreeMap deg(w);
    long long b = 2 + static_cast<long long>(rng() % 9);
    Rational t = R(1 + static_cast<long long>(rng() % static_cast<unsigned long long>(b - 1)), b);
    Rational v = ggs_value(pres, deg, t);
    std::size_t top = std::max(hilbert_of_generators(deg).max_exponent(), hilbert_of_relators(pres, deg).max_exponent());
    CHECK(big_pow(BigInt(b), top) % denominator(v) == 0);
  }
}

TEST_CASE("adding a relator never lowers the value") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t d = 2 + rng() % 3;
    auto rels = quadratic_relators(d, rng() % 4);
    Presentation before(letters(d, 2), rels);
    rels.push_back(g(rng() % d, 1 + static_cast<long long>(rng() % 4)));
    Presentation after(letters(d, 2), rels);
    Rational t = R(1 + static_cast<long long>(rng() % 15), 16);
    CHECK(ggs_value(after, DegreeMap::unit(d), t) >= ggs_value(before, DegreeMap::unit(d), t));
  }
}

TEST_CASE("classical quadratic threshold") {
  for (std::size_t d = 2; d <= 6; ++d)
    for (std::size_t r = 0; r <= 9; ++r) {
      Presentation pres(letters(d, 2), quadratic_relators(d, r));
      bool expected = 4 * r < d * d;
      auto report = ggs_search(pres, 1, 64);
      CAPTURE(d, r);
      CHECK(report.found() == expected);
      if (report.found()) CHECK(verify_certificate(pres, *report.certificate));
    }
}

TEST_CASE("presentation validation") {
  CHECK_THROWS_AS(Presentation(letters(2, 2), {g(0) * g(0, -1)}), DomainError);
  CHECK_THROWS_AS(Presentation(letters(2, 2), {g(3)}), DomainError);
  CHECK_THROWS_AS(Presentation(letters(2, 2), {}, DegreeMap::unit(3)), DomainError);
  Presentation p(letters(2, 2), {g(0) * g(1) * g(1, -1)});
  CHECK(p.relators[0] == g(0));
}
