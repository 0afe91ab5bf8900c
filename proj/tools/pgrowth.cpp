// pgrowth: command-line front end.
//
// Exit codes: 0 computed, 1 negative outcome (no certificate, bound fails),
// 2 usage/parse/domain error, 3 resource cap exceeded.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pgrowth/pgrowth.hpp"

namespace {

using namespace pgrowth;
using io::json;

struct Globals {
  std::uint64_t cap = 1;
  std::optional<std::uint64_t> degree_cap, order_cap, lattice_cap, aut_cap, enum_cap, work_cap;
  bool csv = false;
  bool json_flag = false;
  bool timing = false;
  std::uint64_t seed = 0x5eedULL;

  Limits limits() const {
    Limits l = Limits{}.scaled(cap);
    if (degree_cap) l.degree = *degree_cap;
    if (order_cap) l.group_order = *order_cap;
    if (lattice_cap) l.lattice_order = *lattice_cap;
    if (aut_cap) l.aut_order = *aut_cap;
    if (enum_cap) l.enumeration = *enum_cap;
    if (work_cap) l.search_work = *work_cap;
    return l;
  }
};

struct GroupArgs {
  std::string builtin;
  std::string group_file;

  void attach(CLI::App* cmd) {
    auto* b = cmd->add_option("--builtin", builtin, "Builtin group, e.g. dihedral:8 or cyclic:2*cyclic:4");
    auto* g = cmd->add_option("--group", group_file, "Group JSON file");
    b->excludes(g);
  }

  pgroups::FiniteGroup load(const Globals& gl) const {
    if (!builtin.empty()) return io::builtin_group(builtin, gl.limits());
    if (!group_file.empty()) return io::group_from_json(parse_json_file(group_file), gl.limits(), gl.seed);
    throw UsageError("one of --builtin or --group is required");
  }

  static json parse_json_file(const std::string& path) {
    std::string text = io::read_file(path);
    try {
      return json::parse(text);
    } catch (const json::parse_error& e) {
      throw UsageError("'" + path + "' is not valid JSON: " + e.what());
    }
  }
};

/// Outcome of a command: a JSON document or CSV text, and an exit code.
struct Outcome {
  json doc;
  std::string csv;
  std::string text;  // printed verbatim instead of JSON when set
  int code = 0;
};

void emit(const Outcome& out, const Globals& gl, double elapsed_ms) {
  if (!out.text.empty()) {
    std::cout << out.text;
    return;
  }
  if (gl.csv && !out.csv.empty()) {
    std::cout << out.csv;
    return;
  }
  json doc = out.doc;
  if (gl.timing) doc["elapsed_ms"] = static_cast<long long>(elapsed_ms);
  std::cout << doc.dump(2) << '\n';
}

json hilbert_json(const gscert::HilbertPoly& h) {
  json j = json::object();
  for (const auto& [e, c] : h.coefficients()) j[std::to_string(e)] = c.str();
  return j;
}

freealg::DegreeMap weights_or_default(const std::vector<int>& w, const gscert::Presentation& pres) {
  if (w.empty()) return pres.default_weights;
  if (w.size() != pres.generator_count()) throw UsageError("--weights needs one weight per generator");
  return freealg::DegreeMap(w);
}

json base_doc(const std::string& command) {
  json j;
  j["format"] = io::format_version;
  j["command"] = command;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Golod-Shafarevich certificates, p-group ranks, module sections and subgroup growth"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_option("--cap", gl.cap, "Scale every resource cap by this factor")->check(CLI::PositiveNumber);
  app.add_option("--degree-cap", gl.degree_cap, "Magnus truncation cap");
  app.add_option("--order-cap", gl.order_cap, "Largest group order");
  app.add_option("--lattice-cap", gl.lattice_cap, "Largest group order for lattice enumeration");
  app.add_option("--aut-cap", gl.aut_cap, "Largest group order for automorphism search");
  app.add_option("--enum-cap", gl.enum_cap, "Largest vector/subspace enumeration");
  app.add_option("--work-cap", gl.work_cap, "Largest exhaustive-search work");
  auto* csv_flag = app.add_flag("--csv", gl.csv, "CSV output (growth, check)");
  auto* json_flag = app.add_flag("--json", gl.json_flag, "JSON output (default)");
  csv_flag->excludes(json_flag);
  app.add_option("--seed", gl.seed, "Seed for randomized table validation");
  app.add_flag("--timing", gl.timing, "Add elapsed_ms to JSON output");

  std::function<Outcome()> run;

  // ggs ---------------------------------------------------------------------
  auto* ggs = app.add_subcommand("ggs", "Generalized Golod-Shafarevich value and certificate search");
  ggs->require_subcommand(1);
  std::string pres_file, t0_text;
  std::vector<int> weights;
  std::optional<long long> bound_n;
  auto* ggs_check = ggs->add_subcommand("check", "Evaluate 1 - H_X(t0) + H_R(t0) exactly");
  ggs_check->add_option("file", pres_file, ".pres file")->required();
  ggs_check->add_option("--t0", t0_text, "t0 as a/b")->required();
  ggs_check->add_option("--weights", weights, "Generator weights")->delimiter(',');
  ggs_check->add_option("--n", bound_n, "Also report the normal-generator bound at degree n");
  ggs_check->callback([&] {
    run = [&] {
      auto pres = io::parse_presentation(io::read_file(pres_file));
      auto deg = weights_or_default(weights, pres);
      Rational t0 = parse_rational(t0_text);
      gscert::require_open_unit(t0);
      const auto cap = gl.limits().degree;
      auto hx = gscert::hilbert_of_generators(deg);
      auto hr = gscert::hilbert_of_relators(pres, deg, cap);
      Rational v = gscert::ggs_value(hx, hr, t0);
      Outcome out{base_doc("ggs check")};
      out.doc["weights"] = deg.weights;
      out.doc["t0"] = to_fraction_string(t0);
      out.doc["hilbert_generators"] = hilbert_json(hx);
      out.doc["hilbert_relators"] = hilbert_json(hr);
      out.doc["value"] = to_fraction_string(v);
      out.doc["certificate"] = v < 0;
      if (v < 0) {
        gscert::GsCertificate c{deg, t0, v, -v};
        out.doc["delta"] = to_fraction_string(c.delta);
        if (bound_n) out.doc["generator_bound"] = gscert::gs_generator_bound(c, *bound_n).str();
      }
      out.code = v < 0 ? 0 : 1;
      return out;
    };
  });
  int weights_max = 3;
  std::size_t grid = 64;
  auto* ggs_search = ggs->add_subcommand("search", "Search weights and a t0 grid for a certificate");
  ggs_search->add_option("file", pres_file, ".pres file")->required();
  ggs_search->add_option("--weights-max", weights_max, "Largest weight tried")->check(CLI::PositiveNumber);
  ggs_search->add_option("--grid", grid, "t0 grid denominator Q")->check(CLI::Range(2, 1 << 20));
  ggs_search->callback([&] {
    run = [&] {
      auto pres = io::parse_presentation(io::read_file(pres_file));
      auto rep = gscert::ggs_search(pres, weights_max, grid, gl.limits().degree);
      Outcome out{base_doc("ggs search")};
      out.doc["found"] = rep.found();
      out.doc["weights_max"] = rep.weight_bound;
      out.doc["grid"] = rep.grid;
      out.doc["maps_scanned"] = rep.maps_scanned;
      out.doc["maps_pruned"] = rep.maps_pruned;
      if (rep.found()) {
        out.doc["certificate"] = io::certificate_to_json(*rep.certificate);
      } else {
        out.doc["min_value"] = rep.min_value ? json(to_fraction_string(*rep.min_value)) : json(nullptr);
        out.doc["min_weights"] = rep.min_weights ? json(rep.min_weights->weights) : json(nullptr);
        out.doc["min_t0"] = rep.min_t0 ? json(to_fraction_string(*rep.min_t0)) : json(nullptr);
      }
      out.code = rep.found() ? 0 : 1;
      return out;
    };
  });

  // degree ------------------------------------------------------------------
  std::string word_text;
  auto* degree = app.add_subcommand("degree", "Magnus degrees of relators or of a word");
  degree->add_option("file", pres_file, ".pres file")->required();
  degree->add_option("--word", word_text, "A word over the generators instead of the relators");
  degree->add_option("--weights", weights, "Generator weights")->delimiter(',');
  degree->callback([&] {
    run = [&] {
      auto pres = io::parse_presentation(io::read_file(pres_file));
      auto deg = weights_or_default(weights, pres);
      const auto cap = gl.limits().degree;
      std::vector<freealg::Word> words;
      if (word_text.empty()) {
        words = pres.relators;
      } else {
        words.push_back(io::parse_word(word_text, pres.alphabet));
      }
      Outcome out{base_doc("degree")};
      out.doc["weights"] = deg.weights;
      json list = json::array();
      for (std::size_t i = 0; i < words.size(); ++i) {
        std::size_t d;
        try {
          d = freealg::magnus_degree(words[i], pres.p(), deg, cap);
        } catch (const DegreeCapError&) {
          throw DegreeCapError(cap, i);
        }
        list.push_back({{"word", io::word_to_string(words[i].reduced(), pres.alphabet)}, {"degree", d}});
      }
      out.doc["degrees"] = std::move(list);
      return out;
    };
  });

  // cmea-rank ---------------------------------------------------------------
  GroupArgs cmea_group;
  auto* cmea = app.add_subcommand("cmea-rank", "d(G) and CMEA rank of a p-group");
  cmea_group.attach(cmea);
  cmea->callback([&] {
    run = [&] {
      auto g = cmea_group.load(gl);
      Outcome out{base_doc("cmea-rank")};
      out.doc["group"] = g.label();
      out.doc["order"] = g.order();
      auto p = pgroups::require_p_group(g, "cmea-rank");
      out.doc["p"] = p;
      out.doc["frattini_order"] = pgroups::frattini_p(g).order();
      out.doc["d_min"] = pgroups::d_min(g);
      out.doc["cmea_rank"] = pgroups::cmea_rank(g);
      out.doc["is_cmea"] = pgroups::is_cmea(g);
      return out;
    };
  });

  // growth ------------------------------------------------------------------
  GroupArgs growth_group;
  bool with_char = false, with_subs = false;
  auto* growth_cmd = app.add_subcommand("growth", "Normal (and characteristic) subgroup counts by index");
  growth_group.attach(growth_cmd);
  growth_cmd->add_flag("--characteristic", with_char, "Also count characteristic subgroups");
  growth_cmd->add_flag("--subgroups", with_subs, "Also count all subgroups");
  growth_cmd->callback([&] {
    run = [&] {
      auto g = growth_group.load(gl);
      auto t = growth::growth_table(g, with_char, with_subs, gl.limits());
      Outcome out{io::growth_to_json(t)};
      out.doc["command"] = "growth";
      out.csv = io::growth_to_csv(t);
      return out;
    };
  });

  // lattice -----------------------------------------------------------------
  GroupArgs lattice_group;
  auto* lattice = app.add_subcommand("lattice", "List normal or characteristic subgroups");
  lattice->require_subcommand(1);
  auto lattice_run = [&](bool characteristic) {
    return [&, characteristic] {
      run = [&, characteristic] {
        auto g = lattice_group.load(gl);
        auto subs = characteristic ? pgroups::characteristic_subgroups(g, gl.limits())
                                   : pgroups::normal_subgroups(g, gl.limits());
        Outcome out{base_doc(characteristic ? "lattice characteristic" : "lattice normal")};
        out.doc["group"] = g.label();
        out.doc["order"] = g.order();
        out.doc["count"] = std::to_string(subs.size());
        json list = json::array();
        for (const auto& s : subs) list.push_back(io::subgroup_to_json(s));
        out.doc["subgroups"] = std::move(list);
        return out;
      };
    };
  };
  auto* lat_normal = lattice->add_subcommand("normal", "Normal subgroups");
  auto* lat_char = lattice->add_subcommand("characteristic", "Characteristic subgroups");
  lattice_group.attach(lat_normal);
  lattice_group.attach(lat_char);
  lat_normal->callback(lattice_run(false));
  lat_char->callback(lattice_run(true));

  // module ------------------------------------------------------------------
  std::string module_file, module_builtin;
  std::uint64_t module_p = 0;
  bool module_regular = false;
  std::optional<std::size_t> module_trivial, module_power;
  auto* module = app.add_subcommand("module", "F_pG-module socle, isotypic section and submodule count");
  module->require_subcommand(1);
  auto load_module = [&]() {
    fpgmod::FpGModule m;
    if (!module_file.empty()) {
      m = io::module_from_json(GroupArgs::parse_json_file(module_file), gl.limits(), gl.seed);
    } else {
      if (module_builtin.empty() || module_p == 0)
        throw UsageError("give --module FILE, or --builtin G --p P with --regular or --trivial N");
      if (!is_prime(module_p) || module_p > fplin::max_modulus) throw DomainError("--p must be a prime below 65522");
      auto g = fpgmod::share(io::builtin_group(module_builtin, gl.limits()));
      auto p = static_cast<fplin::Scalar>(module_p);
      if (module_regular) {
        m = fpgmod::regular_module(g, p);
      } else if (module_trivial) {
        m = fpgmod::trivial_module(g, p, *module_trivial);
      } else {
        throw UsageError("--builtin modules need --regular or --trivial N");
      }
    }
    if (module_power) m = fpgmod::power_module(m, *module_power, gl.limits());
    return m;
  };
  auto module_opts = [&](CLI::App* c) {
    c->add_option("--module", module_file, "Module JSON file");
    c->add_option("--builtin", module_builtin, "Builtin group for --regular/--trivial");
    c->add_option("--p", module_p, "Prime for --regular/--trivial");
    c->add_flag("--regular", module_regular, "Regular module F_pG");
    c->add_option("--trivial", module_trivial, "Trivial module of this dimension");
    c->add_option("--power", module_power, "Replace M by M^n");
  };
  auto* mod_socle = module->add_subcommand("socle", "Socle and its simple summands");
  auto* mod_section = module->add_subcommand("section", "Isotypic section M1 < M2 with M2/M1 = S^m");
  auto* mod_count = module->add_subcommand("count", "Exact number of submodules");
  module_opts(mod_socle);
  module_opts(mod_section);
  module_opts(mod_count);
  mod_socle->callback([&] {
    run = [&] {
      auto m = load_module();
      auto soc = fpgmod::socle_decomposition(m, gl.limits());
      auto classes = fpgmod::isotypic_classes(m, soc, gl.limits());
      Outcome out{base_doc("module socle")};
      out.doc["p"] = m.p();
      out.doc["dim"] = m.dim();
      out.doc["socle_dim"] = soc.socle.dim();
      out.doc["socle_basis"] = io::subspace_to_json(soc.socle);
      out.doc["simple_summands"] = soc.simples.size();
      json cls = json::array();
      for (const auto& c : classes) cls.push_back({{"simple_dim", c.simple.dim()}, {"multiplicity", c.summands.size()}});
      out.doc["isotypic_classes"] = std::move(cls);
      return out;
    };
  });
  mod_section->callback([&] {
    run = [&] {
      auto m = load_module();
      auto sec = fpgmod::isotypic_section(m, gl.limits());
      bool verified = fpgmod::verify_section(m, sec);
      Rational c = fpgmod::gerdau_constant(m.group_ptr(), m.p(), sec.depth, gl.limits());
      Rational bound = c * Rational(static_cast<long long>(m.dim()));
      bool holds = Rational(static_cast<long long>(sec.multiplicity)) >= bound;
      Outcome out{base_doc("module section")};
      out.doc["p"] = m.p();
      out.doc["dim"] = m.dim();
      out.doc["m1"] = io::subspace_to_json(sec.m1);
      out.doc["m2"] = io::subspace_to_json(sec.m2);
      out.doc["simple_dim"] = sec.simple.dim();
      out.doc["multiplicity"] = sec.multiplicity;
      out.doc["depth"] = sec.depth;
      out.doc["gerdau_constant"] = to_fraction_string(c);
      out.doc["bound"] = to_fraction_string(bound);
      out.doc["holds"] = holds;
      out.doc["verified"] = verified;
      out.code = holds && verified ? 0 : 1;
      return out;
    };
  });
  mod_count->callback([&] {
    run = [&] {
      auto m = load_module();
      Outcome out{base_doc("module count")};
      out.doc["p"] = m.p();
      out.doc["dim"] = m.dim();
      out.doc["submodules"] = fpgmod::count_submodules(m, gl.limits()).str();
      return out;
    };
  });

  // check -------------------------------------------------------------------
  GroupArgs check_group;
  std::string sub_spec, inner_spec, c_text = "1";
  std::uint64_t check_p = 0;
  long long prop_d = 2;
  std::size_t prop_k = 1;
  auto* check = app.add_subcommand("check", "Inequality checkers on finite instances");
  check->require_subcommand(1);
  auto reports_outcome = [](const std::string& command, const std::vector<growth::BoundReport>& reports) {
    Outcome out{base_doc(command)};
    bool holds = true;
    json list = json::array();
    for (const auto& r : reports) {
      holds = holds && r.holds;
      list.push_back(io::report_to_json(r));
      out.csv += io::report_to_csv(r);
    }
    out.doc["holds"] = holds;
    out.doc["reports"] = std::move(list);
    out.code = holds ? 0 : 1;
    return out;
  };
  auto* ck21 = check->add_subcommand("lemma21", "Chain upper bound; subspace lower bound with --sub");
  check_group.attach(ck21);
  ck21->add_option("--sub", sub_spec, "Normal subgroup N for the subspace bound");
  ck21->add_option("--c", c_text, "Constant c as a/b");
  ck21->callback([&] {
    run = [&] {
      auto g = check_group.load(gl);
      std::vector<growth::BoundReport> reps{growth::chain_upper_bound(g, gl.limits())};
      if (!sub_spec.empty())
        reps.push_back(growth::subspace_lower_bound(g, io::parse_subgroup(g, sub_spec), parse_rational(c_text), gl.limits()));
      return reports_outcome("check lemma21", reps);
    };
  });
  auto* ck22 = check->add_subcommand("lemma22", "d_G(N) >= d_H(N)/(G:H)");
  check_group.attach(ck22);
  ck22->add_option("--sub", sub_spec, "Normal p-subgroup H")->required();
  ck22->add_option("--inner", inner_spec, "N <= H normal in G (default H)");
  ck22->callback([&] {
    run = [&] {
      auto g = check_group.load(gl);
      auto h = io::parse_subgroup(g, sub_spec);
      auto n = inner_spec.empty() ? h : io::parse_subgroup(g, inner_spec);
      return reports_outcome("check lemma22", {growth::virtual_transfer_check(g, h, n, gl.limits())});
    };
  });
  auto* ck13 = check->add_subcommand("thm13", "d_G(Psi) >= rk_cm(H)/(G:D) - d(G)");
  check_group.attach(ck13);
  ck13->add_option("--sub", sub_spec, "Normal subgroup D")->required();
  ck13->add_option("--p", check_p, "Prime")->required();
  ck13->callback([&] {
    run = [&] {
      auto g = check_group.load(gl);
      return reports_outcome("check thm13", {growth::theorem1_check(g, io::parse_subgroup(g, sub_spec), check_p, gl.limits())});
    };
  });
  auto* cktr = check->add_subcommand("transfer", "s_n(G) <= s_n(D) n^(G:D)");
  check_group.attach(cktr);
  cktr->add_option("--sub", sub_spec, "Subgroup D")->required();
  cktr->callback([&] {
    run = [&] {
      auto g = check_group.load(gl);
      return reports_outcome("check transfer", {growth::index_transfer_check(g, io::parse_subgroup(g, sub_spec), gl.limits())});
    };
  });
  auto* ck14 = check->add_subcommand("prop14", "Index arithmetic for free subgroups");
  ck14->add_option("--d", prop_d, "Rank d")->check(CLI::PositiveNumber);
  ck14->add_option("--p", check_p, "Prime")->required();
  ck14->add_option("--k", prop_k, "Exponent k");
  ck14->callback([&] {
    run = [&] { return reports_outcome("check prop14", {growth::prop14_arithmetic_check(prop_d, check_p, prop_k)}); };
  });

  // format ------------------------------------------------------------------
  std::string format_file;
  auto* format_cmd = app.add_subcommand("format", "Parse a .pres, .group.json or .module.json file and print it canonically");
  format_cmd->add_option("file", format_file, "Input file")->required();
  format_cmd->callback([&] {
    run = [&] {
      auto ends_with = [&](std::string_view suffix) {
        return format_file.size() >= suffix.size() &&
               format_file.compare(format_file.size() - suffix.size(), suffix.size(), suffix) == 0;
      };
      Outcome out;
      if (ends_with(".pres")) {
        out.text = io::serialize_presentation(io::parse_presentation(io::read_file(format_file)));
      } else if (ends_with(".group.json")) {
        out.text = io::group_to_json(io::group_from_json(GroupArgs::parse_json_file(format_file), gl.limits(), gl.seed)).dump(2) + "\n";
      } else if (ends_with(".module.json")) {
        out.text = io::module_to_json(io::module_from_json(GroupArgs::parse_json_file(format_file), gl.limits(), gl.seed)).dump(2) + "\n";
      } else {
        throw UsageError("format needs a .pres, .group.json or .module.json file");
      }
      return out;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  auto error = [](const char* kind, const std::exception& e, int code, json extra = json::object()) {
    json j;
    j["format"] = io::format_version;
    j["error"] = kind;
    j["message"] = e.what();
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    std::cerr << j.dump() << '\n';
    return code;
  };
  try {
    if (!run) throw UsageError("no command given");
    auto start = std::chrono::steady_clock::now();
    Outcome out = run();
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    emit(out, gl, ms);
    return out.code;
  } catch (const ParseError& e) {
    return error("parse", e, 2, {{"line", e.line()}, {"column", e.column()}, {"expected", e.expected()}});
  } catch (const pgroups::SearchCapError& e) {
    return error("resource", e, 3, {{"cap", e.cap_name()}, {"lower", e.lower()}, {"upper", e.upper()}});
  } catch (const ResourceError& e) {
    return error("resource", e, 3, {{"cap", e.cap_name()}, {"cap_value", e.cap_value()}});
  } catch (const UsageError& e) {
    return error("usage", e, 2);
  } catch (const DomainError& e) {
    return error("domain", e, 2);
  } catch (const Error& e) {
    return error("error", e, 2);
  }
}
