#include <catch_amalgamated.hpp>

#include <filesystem>
#include <random>

#include "../support/catalog.hpp"
#include "../support/modgen.hpp"

using namespace pgrowth;
using namespace pgrowth::io;
namespace fs = std::filesystem;

namespace {

std::vector<fs::path> fixtures(const std::string& suffix) {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(PGROWTH_SAMPLES)) {
    const std::string name = e.path().filename().string();
    if (name.size() > suffix.size() && name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0)
      out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class F>
ParseError parse_error(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("presentation examples") {
  auto p = parse_presentation("p 2\ngens x y\nrels [x,y]");
  CHECK(p.generator_count() == 2);
  CHECK(p.relators.size() == 1);
  CHECK(p.relators[0].length() == 4);

  auto dup = parse_error([] { parse_presentation("gens x x"); });
  CHECK(dup.line() == 1);
  CHECK(dup.column() == 8);

  auto w = parse_presentation("p 2\ngens x:2 y\nrels x^-1y x");
  CHECK(w.default_weights.weights == std::vector<int>{2, 1});
  REQUIRE(w.relators.size() == 1);
  CHECK(w.relators[0].length() == 3);
}

TEST_CASE("word grammar") {
  freealg::Alphabet a({"x", "y", "xy"}, 3);
  auto x = freealg::Word::generator(0), y = freealg::Word::generator(1), xy = freealg::Word::generator(2);
  CHECK(parse_word("x y", a) == x * y);
  CHECK(parse_word("xy", a) == xy);
  CHECK(parse_word("x^3", a) == x.power(3));
  CHECK(parse_word("x^-2", a) == x.power(-2));
  CHECK(parse_word("[x,y]", a) == freealg::commutator(x, y));
  CHECK(parse_word("(x y)^2", a) == (x * y).power(2));
  CHECK(parse_word("[ [x,y] , x ]", a) == freealg::commutator(freealg::commutator(x, y), x));
  CHECK(parse_word("  x\ty ", a) == x * y);
  CHECK_THROWS_AS(parse_word("z", a), ParseError);
  CHECK_THROWS_AS(parse_word("[x y]", a), ParseError);
  CHECK_THROWS_AS(parse_word("x^", a), ParseError);
  CHECK_THROWS_AS(parse_word("(x", a), ParseError);
}

TEST_CASE("presentation diagnostics") {
  auto unknown = parse_error([] { parse_presentation("p 2\ngens x y\nrels x z"); });
  CHECK(unknown.line() == 3);
  CHECK(unknown.column() == 8);
  CHECK_THROWS_AS(parse_presentation("p 2\ngens x:0"), ParseError);
  CHECK_THROWS_AS(parse_presentation("p 4\ngens x"), ParseError);
  CHECK_THROWS_AS(parse_presentation("p 2\nrels x\ngens x"), ParseError);
  CHECK_THROWS_AS(parse_presentation("p 2\ngens x\nfoo x"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens x"), ParseError);
  CHECK_THROWS_AS(parse_presentation("p 2\ngens x\nrels x x^-1"), ParseError);
  CHECK_NOTHROW(parse_presentation("# comment\np 2 # prime\ngens x y\n\nrels x^2, y^2\nrels [x,y]"));
  CHECK(parse_presentation("p 2\ngens x y\nrels x^2, y^2\nrels [x,y]").relators.size() == 3);
}

TEST_CASE("presentation fixtures round-trip") {
  auto files = fixtures(".pres");
  REQUIRE(files.size() >= 4);
  for (const auto& f : files) {
    CAPTURE(f.string());
    auto p = parse_presentation(read_file(f.string()));
    auto text = serialize_presentation(p);
    auto q = parse_presentation(text);
    CHECK(q == p);
    CHECK(serialize_presentation(q) == text);
  }
}

TEST_CASE("random presentations round-trip") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + rng() % 4;
    std::vector<std::string> names;
    std::vector<int> w;
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(std::string(1, static_cast<char>('a' + i)) + (rng() % 2 ? "1" : ""));
      w.push_back(1 + static_cast<int>(rng() % 3));
    }
    std::vector<freealg::Word> rels;
    for (std::size_t k = rng() % 4; k > 0; --k) {
      std::vector<freealg::Letter> ls;
      for (std::size_t j = 1 + rng() % 5; j > 0; --j)
        ls.push_back({rng() % n, (rng() % 2 ? 1 : -1) * static_cast<long long>(1 + rng() % 3)});
      auto word = freealg::Word(ls).reduced();
      if (!word.empty()) rels.push_back(word);
    }
    gscert::Presentation p(freealg::Alphabet(names, trial % 2 ? 3 : 2), rels, freealg::DegreeMap(w));
    CHECK(parse_presentation(serialize_presentation(p)) == p);
  }
}

TEST_CASE("builtin groups") {
  CHECK(builtin_group("dihedral:8").order() == 8);
  CHECK(builtin_group("cyclic:2*cyclic:3").order() == 6);
  CHECK(builtin_group("trivial").order() == 1);
  CHECK(builtin_group("free_cmea:2,2").label() == "free_cmea:2,2");
  CHECK_THROWS_AS(builtin_group("cyclic"), UsageError);
  CHECK_THROWS_AS(builtin_group("bogus:3"), UsageError);
  CHECK_THROWS_AS(builtin_group("symmetric:9"), Error);
  Limits tight;
  tight.group_order = 10;
  CHECK_THROWS_AS(builtin_group("cyclic:11", tight), ResourceError);
}

TEST_CASE("group JSON round-trip") {
  for (const auto& spec : catalog::specs()) {
    auto g = catalog::build(spec);
    if (g.order() > 64) continue;
    auto j = group_to_json(g);
    auto h = group_from_json(json::parse(j.dump()));
    CHECK(h.order() == g.order());
    CHECK(h.table() == g.table());
    CHECK(h.label() == g.label());
    CHECK(group_to_json(h).dump() == j.dump());
  }
  for (const auto& f : fixtures(".group.json")) {
    auto g = group_from_json(json::parse(read_file(f.string())));
    CHECK(group_from_json(group_to_json(g)).table() == g.table());
  }
  CHECK_THROWS_AS(group_from_json(json::parse(R"({"order":2,"table":[[0,1],[1,0]]})")), UsageError);
  CHECK_THROWS_AS(group_from_json(json::parse(R"({"format":1,"order":2,"table":[[0,1],[0,1]]})")), DomainError);
  CHECK_THROWS_AS(group_from_json(json::parse(R"({"format":1,"order":2,"table":[[0,1]]})")), DomainError);
  CHECK_THROWS_AS(group_from_json(json::parse(R"({"format":1,"order":"x"})")), UsageError);
}

TEST_CASE("subgroup specifiers") {
  auto d8 = builtin_group("dihedral:8");
  CHECK(parse_subgroup(d8, "whole").order() == 8);
  CHECK(parse_subgroup(d8, "trivial").order() == 1);
  CHECK(parse_subgroup(d8, "center").order() == 2);
  CHECK(parse_subgroup(d8, "derived").order() == 2);
  CHECK(parse_subgroup(d8, "frattini").order() == 2);
  CHECK(parse_subgroup(d8, "cyclic4").order() == 4);
  CHECK(parse_subgroup(d8, "elements:0").order() == 1);
  CHECK(parse_subgroup(builtin_group("lamplighter:2,2"), "base").order() == 16);
  CHECK_THROWS_AS(parse_subgroup(d8, "base"), UsageError);
  CHECK_THROWS_AS(parse_subgroup(d8, "cyclic3"), DomainError);
  CHECK_THROWS_AS(parse_subgroup(d8, "nonsense"), UsageError);
  CHECK_THROWS_AS(parse_subgroup(d8, "gens:9"), UsageError);
  for (pgroups::Elem x = 1; x < 8; ++x) {
    auto s = parse_subgroup(d8, "gens:" + std::to_string(x));
    CHECK(s == pgroups::subgroup_generated(d8, {x}));
    CHECK(parse_subgroup(d8, "normal:" + std::to_string(x)) == pgroups::normal_closure(d8, {x}));
  }
}

TEST_CASE("module JSON round-trip") {
  std::mt19937_64 rng(47);
  for (const auto& c : modgen::cases()) {
    auto g = fpgmod::share(builtin_group(c.group));
    for (int t = 0; t < 3; ++t) {
      auto m = modgen::random_module(rng, g, c.p, 6);
      auto j = module_to_json(m);
      auto back = module_from_json(json::parse(j.dump()));
      CHECK(back.matrices() == m.matrices());
      CHECK(back.generators() == m.generators());
      CHECK(module_to_json(back).dump() == j.dump());
    }
  }
  for (const auto& f : fixtures(".module.json")) {
    auto m = module_from_json(json::parse(read_file(f.string())));
    CHECK(module_from_json(module_to_json(m)).matrices() == m.matrices());
  }
  auto bad = json::parse(R"({"format":1,"p":2,"group":{"format":1,"builtin":"cyclic","params":[3]},
                             "generators":[1],"matrices":[[[0,1],[1,0]]]})");
  CHECK_THROWS_AS(module_from_json(bad), DomainError);
  auto sq = module_from_json(json::parse(read_file(std::string(PGROWTH_SAMPLES) + "/c2_regular_sq.module.json")));
  CHECK(sq.dim() == 4);
}

TEST_CASE("result serialization is exact") {
  gscert::GsCertificate c{freealg::DegreeMap::unit(2), Rational(2, 3), Rational(-1, 3), Rational(1, 3)};
  auto j = certificate_to_json(c);
  CHECK(j["t0"] == "2/3");
  CHECK(j["value"] == "-1/3");
  CHECK(j["delta"] == "1/3");
  CHECK(j["weights"] == json::array({1, 1}));

  auto t = growth::growth_table(builtin_group("elementary_abelian:2,2"), true);
  CHECK(growth_to_csv(t) == "index,normal,characteristic\n1,1,1\n2,3,0\n4,1,1\n");
  auto tn = growth::growth_table(builtin_group("cyclic:4"));
  CHECK(growth_to_csv(tn) == "index,normal,characteristic\n1,1,\n2,1,\n4,1,\n");

  auto r = growth::prop14_arithmetic_check(2, 2, 1);
  auto rj = report_to_json(r);
  CHECK(rj["holds"] == true);
  CHECK(rj["entries"][0]["rhs"] == "9/2");
  auto csv = report_to_csv(r);
  CHECK(csv.find("9/2") != std::string::npos);
  CHECK(csv.find('.') == std::string::npos);
}
