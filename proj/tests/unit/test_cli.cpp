#include <catch_amalgamated.hpp>

#include <filesystem>

#include "../support/run.hpp"
#include "pgrowth/io.hpp"

using pgrowth::io::json;

TEST_CASE("ggs check on the free presentation") {
  auto r = run::cli("ggs check " + run::sample("free2.pres") + " --t0 2/3");
  CHECK(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["value"] == "-1/3");
  CHECK(j["certificate"] == true);
  CHECK(j["format"] == 1);
}

TEST_CASE("ggs check with a nonnegative value exits 1") {
  auto r = run::cli("ggs check " + run::sample("one_rel.pres") + " --t0 1/2");
  CHECK(r.exit_code == 1);
  CHECK(json::parse(r.out)["value"] == "1/4");
}

TEST_CASE("ggs search outcomes") {
  auto found = run::cli("ggs search " + run::sample("gs4_3.pres") + " --weights-max 1 --grid 2");
  CHECK(found.exit_code == 0);
  auto j = json::parse(found.out);
  CHECK(j["certificate"]["value"] == "-1/4");
  CHECK(j["certificate"]["t0"] == "1/2");

  auto none = run::cli("ggs search " + run::sample("one_rel.pres") + " --weights-max 1 --grid 64");
  CHECK(none.exit_code == 1);
  auto n = json::parse(none.out);
  CHECK(n["found"] == false);
  CHECK(n["min_value"] == "1/4096");
}

TEST_CASE("group commands") {
  auto g = run::cli("growth --builtin dihedral:8");
  CHECK(g.exit_code == 0);
  CHECK(json::parse(g.out)["total_normal"] == "6");

  auto t = run::cli("check thm13 --builtin dihedral:8 --sub cyclic4 --p 2");
  CHECK(t.exit_code == 0);
  CHECK(json::parse(t.out)["holds"] == true);

  auto c = run::cli("--csv growth --builtin elementary_abelian:2,2 --characteristic");
  CHECK(c.exit_code == 0);
  CHECK(c.out == "index,normal,characteristic\n1,1,1\n2,3,0\n4,1,1\n");

  auto cm = run::cli("cmea-rank --builtin free_cmea:2,2");
  CHECK(json::parse(cm.out)["cmea_rank"] == 5);

  auto lat = run::cli("lattice characteristic --group " + run::sample("q8.group.json"));
  CHECK(json::parse(lat.out)["count"] == "3");
}

TEST_CASE("module commands") {
  auto c = run::cli("module count --module " + run::sample("c3_simple.module.json") + " --power 2");
  CHECK(c.exit_code == 0);
  CHECK(json::parse(c.out)["submodules"] == "7");
  auto s = run::cli("module section --builtin cyclic:2 --p 2 --regular");
  CHECK(s.exit_code == 0);
  auto j = json::parse(s.out);
  CHECK(j["multiplicity"] == 1);
  CHECK(j["verified"] == true);
}

TEST_CASE("exit code contract") {
  CHECK(run::cli("ggs check " + run::sample("free2.pres") + " --t0 5/4").exit_code == 2);
  CHECK(run::cli("ggs check /nonexistent.pres --t0 1/2").exit_code == 2);
  CHECK(run::cli("growth").exit_code == 2);
  CHECK(run::cli("bogus-command").exit_code == 2);
  CHECK(run::cli("growth --builtin nosuch:3").exit_code == 2);
  CHECK(run::cli("--order-cap 100 growth --builtin cyclic:128").exit_code == 3);
  CHECK(run::cli("--lattice-cap 4 lattice normal --builtin dihedral:8").exit_code == 3);
  CHECK(run::cli("--degree-cap 3 degree " + run::sample("weighted.pres")).exit_code == 3);
  CHECK(run::cli("--csv --json growth --builtin cyclic:2").exit_code == 2);

  auto bad = run::cli("degree " + run::quote(std::string(PGROWTH_SAMPLES) + "/../tests/unit/test_cli.cpp"));
  CHECK(bad.exit_code == 2);
  auto err = json::parse(bad.err);
  CHECK(err["error"] == "parse");
  CHECK(err.contains("line"));
}

TEST_CASE("errors are reported on stderr as JSON") {
  auto r = run::cli("--order-cap 100 growth --builtin cyclic:128");
  CHECK(r.out.empty());
  auto j = json::parse(r.err);
  CHECK(j["error"] == "resource");
  CHECK(j["cap"] == "group_order");
  CHECK(j["cap_value"] == 100);
}

TEST_CASE("format round-trips every fixture") {
  for (const auto& e : std::filesystem::directory_iterator(PGROWTH_SAMPLES)) {
    const auto path = e.path().string();
    CAPTURE(path);
    auto first = run::cli("format " + run::quote(path));
    REQUIRE(first.exit_code == 0);
    const auto tmp = "/tmp/pgrowth_fmt_" + e.path().filename().string();
    {
      std::ofstream f(tmp);
      f << first.out;
    }
    auto second = run::cli("format " + run::quote(tmp));
    CHECK(second.exit_code == 0);
    CHECK(second.out == first.out);
    std::filesystem::remove(tmp);
  }
}

TEST_CASE("reruns are byte-identical") {
  for (const std::string& args : std::vector<std::string>{"growth --builtin lamplighter:2,2 --characteristic", "module section --builtin symmetric:3 --p 3 --regular",
                                 "ggs search " + run::sample("gs4_3.pres") + " --weights-max 2 --grid 16",
                                 "check transfer --builtin dihedral:8 --sub center"}) {
    auto a = run::cli(args), b = run::cli(args);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}
