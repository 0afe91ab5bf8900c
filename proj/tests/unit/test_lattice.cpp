#include <catch_amalgamated.hpp>

#include "../support/catalog.hpp"
#include "../support/oracles.hpp"

using namespace pgrowth;
using namespace pgrowth::pgroups;

namespace {

std::vector<std::vector<char>> masks(const std::vector<Subgroup>& list) {
  std::vector<std::vector<char>> out;
  for (const auto& s : list) out.push_back(s.mask());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<char>> sorted(std::vector<std::vector<char>> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("lattice examples") {
  auto v = elementary_abelian(2, 2);
  CHECK(normal_subgroups(v).size() == 5);
  auto ch = characteristic_subgroups(v);
  REQUIRE(ch.size() == 2);
  CHECK(ch[0].order() == 1);
  CHECK(ch[1].order() == 4);
  CHECK(normal_subgroups(dihedral(8)).size() == 6);
  CHECK(all_subgroups(dihedral(8)).size() == 10);
}

TEST_CASE("automorphism counts") {
  CHECK(automorphisms(cyclic(5)).order() == 4);
  CHECK(automorphisms(cyclic(7)).order() == 6);
  CHECK(automorphisms(elementary_abelian(2, 2)).order() == 6);
  CHECK(automorphisms(dihedral(8)).order() == 8);
  CHECK(automorphisms(elementary_abelian(2, 3)).order() == 168);
  CHECK(automorphisms(symmetric(3)).order() == 6);
  CHECK(automorphisms(FiniteGroup()).order() == 1);
}

TEST_CASE("automorphisms agree with permutation search") {
  for (const auto& spec : catalog::specs()) {
    auto g = catalog::build(spec);
    if (g.order() > 8) continue;
    CAPTURE(spec);
    auto aut = automorphisms(g);
    CHECK(aut.order() == oracle::count_automorphisms(g));
    for (const auto& a : aut.automorphisms) {
      CHECK(a.is_homomorphism(g, g));
      CHECK(a.is_bijective());
    }
  }
}

TEST_CASE("automorphisms form a group") {
  for (const auto& spec : {"dihedral:8", "cyclic:2*cyclic:4", "symmetric:3", "elementary_abelian:2,2"}) {
    auto g = catalog::build(spec);
    auto aut = automorphisms(g);
    std::set<std::vector<Elem>> images;
    for (const auto& a : aut.automorphisms) images.insert(a.image);
    std::vector<Elem> id(g.order());
    std::iota(id.begin(), id.end(), Elem{0});
    CHECK(images.count(id) == 1);
    for (const auto& a : aut.automorphisms)
      for (const auto& b : aut.automorphisms) {
        std::vector<Elem> c(g.order());
        for (Elem x = 0; x < g.order(); ++x) c[x] = a(b(x));
        CHECK(images.count(c) == 1);
      }
  }
}

TEST_CASE("subgroup lists agree with the subset oracle") {
  for (const auto& spec : catalog::specs()) {
    auto g = catalog::build(spec);
    if (g.order() > 16) continue;
    CAPTURE(spec);
    CHECK(masks(normal_subgroups(g)) == sorted(oracle::normal_by_subsets(g)));
    CHECK(masks(all_subgroups(g)) == sorted(oracle::subgroups_by_subsets(g)));
  }
}

TEST_CASE("normal subgroups form a lattice") {
  for (const auto& spec : catalog::specs()) {
    auto g = catalog::build(spec);
    CAPTURE(spec);
    auto list = normal_subgroups(g);
    std::set<Subgroup> set(list.begin(), list.end());
    CHECK(set.size() == list.size());
    CHECK(std::is_sorted(list.begin(), list.end()));
    CHECK(set.count(Subgroup::trivial(g.order())) == 1);
    CHECK(set.count(Subgroup::whole(g)) == 1);
    if (list.size() > 40) continue;
    for (const auto& a : list)
      for (const auto& b : list) {
        CHECK(set.count(intersection(a, b)) == 1);
        CHECK(set.count(normal_product(g, a, b)) == 1);
      }
  }
}

TEST_CASE("characteristic subgroups are normal and fixed by every automorphism") {
  for (const auto& spec : catalog::specs()) {
    auto g = catalog::build(spec);
    if (g.order() > 64) continue;
    CAPTURE(spec);
    auto normal = normal_subgroups(g);
    auto ch = characteristic_subgroups(g);
    auto aut = automorphisms(g);
    std::set<Subgroup> ns(normal.begin(), normal.end());
    for (const auto& c : ch) {
      CHECK(ns.count(c) == 1);
      CHECK(aut.fixes(c));
    }
    std::size_t fixed = 0;
    for (const auto& n : normal) fixed += aut.fixes(n);
    CHECK(fixed == ch.size());
    CHECK(std::find(ch.begin(), ch.end(), center(g)) != ch.end());
    CHECK(std::find(ch.begin(), ch.end(), derived_subgroup(g)) != ch.end());
  }
}

TEST_CASE("lattice caps") {
  Limits tight;
  tight.lattice_order = 8;
  tight.aut_order = 4;
  CHECK_THROWS_AS(normal_subgroups(cyclic(16), tight), ResourceError);
  CHECK_THROWS_AS(all_subgroups(cyclic(16), tight), ResourceError);
  CHECK_THROWS_AS(automorphisms(cyclic(8), tight), ResourceError);
  CHECK_NOTHROW(normal_subgroups(cyclic(8), tight));
}
