#include <catch_amalgamated.hpp>

#include "../support/catalog.hpp"
#include "../support/oracles.hpp"

using namespace pgrowth;
using namespace pgrowth::growth;
using pgroups::Subgroup;

namespace {

const GrowthRow& row(const GrowthTable& t, std::size_t index) {
  for (const auto& r : t.rows)
    if (r.index == index) return r;
  throw std::out_of_range("no row");
}

Subgroup of_order(const pgroups::FiniteGroup& g, std::size_t order, bool cyclic_only = false) {
  for (const auto& s : pgroups::normal_subgroups(g)) {
    if (s.order() != order) continue;
    if (cyclic_only && pgroups::induced_group(g, s).group.generators().size() != 1) continue;
    return s;
  }
  throw std::out_of_range("no such subgroup");
}

}  // namespace

TEST_CASE("growth table examples") {
  auto v = growth_table(pgroups::elementary_abelian(2, 2), true);
  CHECK(row(v, 1).normal == 1);
  CHECK(row(v, 2).normal == 3);
  CHECK(row(v, 4).normal == 1);
  CHECK(*row(v, 1).characteristic == 1);
  CHECK(*row(v, 2).characteristic == 0);
  CHECK(*row(v, 4).characteristic == 1);

  auto c8 = growth_table(pgroups::cyclic(8), true);
  for (const auto& r : c8.rows) {
    CHECK(r.normal == 1);
    CHECK(*r.characteristic == 1);
  }
  CHECK(growth_table(pgroups::dihedral(8)).total_normal() == 6);
  CHECK(growth_table(pgroups::dihedral(8)).cumulative_normal_at(3) == 4);
}

TEST_CASE("growth tables are consistent across the catalog") {
  for (const auto& spec : catalog::specs()) {
    auto g = catalog::build(spec);
    CAPTURE(spec);
    auto t = growth_table(g, g.order() <= 64, g.order() <= 64);
    REQUIRE(!t.rows.empty());
    CHECK(t.rows.front().index == 1);
    CHECK(t.rows.front().normal == 1);
    std::size_t prev = 0;
    for (const auto& r : t.rows) {
      CHECK(r.cumulative_normal >= prev);
      prev = r.cumulative_normal;
      if (r.characteristic) {
        CHECK(*r.characteristic <= r.normal);
        CHECK(r.normal <= *r.subgroups);
      }
    }
    CHECK(t.total_normal() == pgroups::normal_subgroups(g).size());
  }
}

TEST_CASE("chain upper bound examples") {
  auto v = chain_upper_bound(pgroups::elementary_abelian(2, 2));
  CHECK(v.holds);
  REQUIRE(v.entries.size() == 2);
  CHECK(v.entries[0].lhs == "3");
  CHECK(v.entries[0].rhs == "3");
  CHECK(v.entries[1].lhs == "1");
  CHECK(v.entries[1].rhs == "3");

  for (std::size_t n : {4u, 8u, 9u, 27u}) {
    auto r = chain_upper_bound(pgroups::cyclic(n));
    CHECK(r.holds);
    for (const auto& e : r.entries) CHECK(e.lhs == "1");
  }
  auto t = chain_upper_bound(pgroups::trivial_group());
  CHECK(t.vacuous);
  CHECK(t.holds);
  CHECK_THROWS_AS(chain_upper_bound(pgroups::symmetric(3)), DomainError);
}

TEST_CASE("subspace lower bound examples") {
  auto g = pgroups::free_cmea(2, 2);
  auto r = subspace_lower_bound(g, pgroups::frattini_p(g), Rational(1));
  CHECK_FALSE(r.vacuous);
  CHECK(r.holds);
  REQUIRE(r.entries.size() == 1);
  CHECK(r.entries[0].lhs == "7");

  auto c4 = pgroups::cyclic(4);
  CHECK(subspace_lower_bound(c4, of_order(c4, 2), Rational(1)).vacuous);
  // dim 1 > c log = 1/2, but floor(c log / 2) = 0 leaves a single subspace
  auto small = subspace_lower_bound(c4, of_order(c4, 2), Rational(1, 2));
  CHECK_FALSE(small.vacuous);
  REQUIRE(small.entries.size() == 1);
  CHECK(small.entries[0].lhs == "1");
  CHECK_FALSE(small.holds);
  CHECK_THROWS_AS(subspace_lower_bound(g, pgroups::frattini_p(g), Rational(0)), DomainError);
}

TEST_CASE("subspace lower bound sweep") {
  for (const auto& spec : catalog::specs()) {
    auto g = catalog::build(spec);
    if (g.order() == 1 || !g.prime()) continue;
    const auto p = *g.prime();
    for (const auto& n : pgroups::normal_subgroups(g)) {
      for (Rational c : {Rational(1, 2), Rational(1), Rational(2)}) {
        auto r = subspace_lower_bound(g, n, c);
        if (r.vacuous) {
          CHECK(r.entries.empty());
          continue;
        }
        CAPTURE(spec, n.order(), to_fraction_string(c));
        const std::size_t L = *exact_log(g.order() / n.order(), p);
        const std::size_t D = *exact_log(n.order() / pgroups::phi_sub(g, n).order(), p);
        CHECK(Rational(static_cast<long long>(D)) > c * static_cast<long long>(L));
        // the inequality is guaranteed whenever cL/2 is an integer
        Rational half = c * static_cast<long long>(L) / 2;
        if (denominator(half) == 1) CHECK(r.holds);
      }
    }
  }
}

TEST_CASE("index transfer examples") {
  auto d8 = pgroups::dihedral(8);
  CHECK(index_transfer_check(d8, Subgroup::whole(d8)).holds);
  CHECK(index_transfer_check(d8, of_order(d8, 4, true)).holds);
  auto l = pgroups::lamplighter_quotient(2, 2);
  CHECK(index_transfer_check(l, pgroups::lamplighter_base(2, 2)).holds);
}

TEST_CASE("virtual transfer examples") {
  auto l = pgroups::lamplighter_quotient(2, 1);
  auto b = pgroups::lamplighter_base(2, 1);
  auto r = virtual_transfer_check(l, b, b);
  CHECK(r.holds);
  REQUIRE(r.entries.size() == 1);
  CHECK(r.entries[0].lhs == "1");
  CHECK(r.entries[0].rhs == "1/1");

  auto d8 = pgroups::dihedral(8);
  CHECK(virtual_transfer_check(d8, Subgroup::whole(d8), pgroups::center(d8)).holds);
  CHECK_THROWS_AS(virtual_transfer_check(d8, Subgroup::whole(d8), Subgroup(8, {0, 1, 2, 3, 4, 5, 6})), DomainError);
  auto s3 = pgroups::symmetric(3);
  CHECK_THROWS_AS(virtual_transfer_check(s3, Subgroup::whole(s3), Subgroup::whole(s3)), DomainError);
}

TEST_CASE("theorem checker examples") {
  auto d8 = pgroups::dihedral(8);
  auto r = theorem1_check(d8, of_order(d8, 4, true), 2);
  CHECK(r.holds);
  REQUIRE(r.entries.size() == 1);
  CHECK(r.entries[0].lhs == "1");
  CHECK(r.entries[0].rhs == "-1/1");

  auto t = theorem1_check(pgroups::trivial_group(), Subgroup::trivial(1), 2);
  CHECK(t.holds);
  CHECK(t.entries[0].lhs == "0");
  CHECK(t.entries[0].rhs == "0/1");

  for (const auto& spec : {"free_cmea:2,2", "elementary_abelian:3,2", "dihedral:16"}) {
    auto g = catalog::build(spec);
    auto rep = theorem1_check(g, Subgroup::whole(g), *g.prime());
    CHECK(rep.holds);
    auto lhs = pgroups::d_normal(g, pgroups::frattini_p(g));
    CHECK(rep.entries[0].lhs == std::to_string(lhs));
    CHECK(Rational(static_cast<long long>(lhs)) >=
          Rational(static_cast<long long>(pgroups::cmea_rank(g))) - static_cast<long long>(pgroups::d_min(g)));
  }
  CHECK_THROWS_AS(theorem1_check(d8, of_order(d8, 4, true), 4), DomainError);
}

TEST_CASE("rank gradients") {
  auto l = pgroups::lamplighter_quotient(2, 2);
  auto rg = rank_gradient_chain(l, {Subgroup::whole(l), pgroups::lamplighter_base(2, 2)});
  REQUIRE(rg.size() == 2);
  CHECK(rg[0] == Rational(2));
  CHECK(rg[1] == Rational(1));

  auto e = pgroups::elementary_abelian(2, 4);
  std::vector<Subgroup> flag = {Subgroup::whole(e)};
  for (std::size_t k = 3; k + 1 > 0; --k) {
    for (const auto& s : pgroups::normal_subgroups(e))
      if (s.order() == (1u << k) && s.is_subset_of(flag.back())) {
        flag.push_back(s);
        break;
      }
  }
  auto ratios = rank_gradient_chain(e, flag);
  REQUIRE(ratios.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) CHECK(ratios[i] == Rational(static_cast<long long>(4 - i), 1LL << i));
  CHECK_THROWS_AS(rank_gradient_chain(e, {flag[2], flag[1]}), DomainError);
}

TEST_CASE("free subgroup ranks and the index arithmetic") {
  CHECK(free_subgroup_rank(2, 2) == 3);
  CHECK(free_subgroup_rank(5, 1) == 5);
  CHECK(free_subgroup_rank(3, 4) == 9);
  CHECK_THROWS_AS(free_subgroup_rank(0, 2), DomainError);

  CHECK(prop14_arithmetic_check(2, 2, 1).holds);
  CHECK(prop14_arithmetic_check(2, 2, 3).holds);
  for (std::uint64_t p : {2u, 3u, 5u}) CHECK(prop14_arithmetic_check(1, p, 2).holds);
  auto r = prop14_arithmetic_check(2, 2, 1);
  CHECK(r.entries[0].lhs == "9");
  CHECK(r.entries[0].rhs == "9/2");
}
