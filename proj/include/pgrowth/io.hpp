#ifndef PGROWTH_IO_HPP_INCLUDED
#define PGROWTH_IO_HPP_INCLUDED

// Text and JSON formats: .pres presentations, group and module JSON,
// builtin group specs, subgroup specifiers and result emitters.

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pgrowth/common.hpp"
#include "pgrowth/fpgmod.hpp"
#include "pgrowth/freealg.hpp"
#include "pgrowth/gscert.hpp"
#include "pgrowth/growth.hpp"
#include "pgrowth/pgroups/constructors.hpp"
#include "pgrowth/pgroups/subgroups.hpp"

namespace pgrowth::io {

using json = nlohmann::ordered_json;
using freealg::Letter;
using freealg::Word;
using gscert::Presentation;

inline constexpr int format_version = 1;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------------------
// Presentations
//
//   # comment
//   p 2
//   gens x:2 y
//   rels [x,y], x^-1 y x
//   rels y^4

namespace detail {

inline bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class WordParser {
 public:
  WordParser(std::string_view text, std::size_t line, std::size_t offset, const freealg::Alphabet& alphabet)
      : s_(text), line_(line), offset_(offset), alphabet_(alphabet) {}

  /// A comma-separated list of words filling the rest of the text.
  std::vector<std::pair<Word, std::size_t>> relator_list() {
    std::vector<std::pair<Word, std::size_t>> out;
    while (true) {
      skip_ws();
      std::size_t start = col();
      Word w = word();
      if (w.empty() && !consumed_factor_) fail("empty relator", "generator, '[' or '('");
      out.emplace_back(std::move(w), start);
      skip_ws();
      if (at_end()) break;
      if (s_[i_] != ',') fail("unexpected '" + std::string(1, s_[i_]) + "'", "',' or end of line");
      ++i_;
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, const std::string& expected) const {
    throw ParseError(line_, col(), msg, expected);
  }
  std::size_t col() const { return offset_ + i_ + 1; }
  bool at_end() const { return i_ >= s_.size(); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  Word word() {
    consumed_factor_ = false;
    Word w;
    while (true) {
      skip_ws();
      if (at_end() || s_[i_] == ',' || s_[i_] == ']' || s_[i_] == ')') return w;
      w = w * factor();
      consumed_factor_ = true;
    }
  }

  Word factor() {
    Word base;
    char c = s_[i_];
    if (c == '[') {
      ++i_;
      Word u = word();
      if (!consumed_factor_) fail("empty commutator argument", "generator, '[' or '('");
      skip_ws();
      if (at_end() || s_[i_] != ',') fail("unterminated commutator", "','");
      ++i_;
      Word v = word();
      if (!consumed_factor_) fail("empty commutator argument", "generator, '[' or '('");
      skip_ws();
      if (at_end() || s_[i_] != ']') fail("unterminated commutator", "']'");
      ++i_;
      base = freealg::commutator(u, v);
    } else if (c == '(') {
      ++i_;
      base = word();
      skip_ws();
      if (at_end() || s_[i_] != ')') fail("unbalanced parenthesis", "')'");
      ++i_;
    } else if (ident_start(c)) {
      base = generator();
    } else {
      fail("unexpected '" + std::string(1, c) + "'", "generator, '[' or '('");
    }
    skip_ws();
    if (!at_end() && s_[i_] == '^') {
      ++i_;
      skip_ws();
      base = base.power(exponent());
    }
    consumed_factor_ = true;
    return base;
  }

  Word generator() {
    std::size_t best = 0, best_len = 0;
    for (std::size_t g = 0; g < alphabet_.size(); ++g) {
      const auto& name = alphabet_.names[g];
      if (name.size() > best_len && s_.substr(i_, name.size()) == name) {
        best = g;
        best_len = name.size();
      }
    }
    if (best_len == 0) {
      std::size_t j = i_;
      while (j < s_.size() && ident_char(s_[j])) ++j;
      std::string expected;
      for (const auto& n : alphabet_.names) expected += (expected.empty() ? "" : ", ") + n;
      fail("unknown generator '" + std::string(s_.substr(i_, j - i_)) + "'", "one of " + expected);
    }
    i_ += best_len;
    return Word::generator(best, 1);
  }

  long long exponent() {
    bool neg = false;
    if (!at_end() && (s_[i_] == '-' || s_[i_] == '+')) {
      neg = s_[i_] == '-';
      ++i_;
    }
    if (at_end() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("missing exponent", "integer");
    long long e = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      e = e * 10 + (s_[i_] - '0');
      if (e > 1'000'000) fail("exponent too large", "integer of at most 1000000");
      ++i_;
    }
    return neg ? -e : e;
  }

  std::string_view s_;
  std::size_t line_, offset_;
  const freealg::Alphabet& alphabet_;
  std::size_t i_ = 0;
  bool consumed_factor_ = false;
};

}  // namespace detail

/// Parses the .pres text format. Diagnostics carry 1-based line and column.
inline Presentation parse_presentation(std::string_view text) {
  std::optional<std::uint64_t> p;
  std::vector<std::string> names;
  std::vector<int> weights;
  std::vector<std::pair<std::size_t, std::size_t>> name_pos;
  std::vector<std::tuple<std::string, std::size_t, std::size_t>> rel_lines;  // body, line, column offset
  std::size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    std::string_view line = raw.substr(0, raw.find('#'));
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t i = 0;
    auto skip = [&] {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    };
    auto token = [&] {
      std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      return std::pair{line.substr(start, i - start), start + 1};
    };
    skip();
    if (i == line.size()) continue;
    auto [kw, kw_col] = token();
    if (kw == "p") {
      if (p) throw ParseError(line_no, kw_col, "duplicate p line");
      skip();
      auto [num, c] = token();
      if (num.empty()) throw ParseError(line_no, c, "missing prime", "integer");
      std::uint64_t v = 0;
      for (char ch : num) {
        if (!std::isdigit(static_cast<unsigned char>(ch)) || v > 65521)
          throw ParseError(line_no, c, "invalid prime '" + std::string(num) + "'", "integer");
        v = v * 10 + static_cast<std::uint64_t>(ch - '0');
      }
      if (!is_prime(v) || v > fplin::max_modulus) throw ParseError(line_no, c, "p must be a prime below 65522");
      p = v;
      skip();
      if (i != line.size()) throw ParseError(line_no, i + 1, "trailing input after p", "end of line");
    } else if (kw == "gens") {
      skip();
      while (i < line.size()) {
        auto [tok, c] = token();
        std::string_view name = tok.substr(0, tok.find(':'));
        if (name.empty() || !detail::ident_start(name[0]) ||
            !std::all_of(name.begin(), name.end(), detail::ident_char))
          throw ParseError(line_no, c, "invalid generator name '" + std::string(name) + "'", "identifier");
        if (std::find(names.begin(), names.end(), name) != names.end())
          throw ParseError(line_no, c, "duplicate generator '" + std::string(name) + "'");
        int w = 1;
        if (name.size() < tok.size()) {
          std::string_view ws = tok.substr(name.size() + 1);
          std::size_t wc = c + name.size() + 1;
          if (ws.empty() || !std::all_of(ws.begin(), ws.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }) ||
              ws.size() > 6)
            throw ParseError(line_no, wc, "invalid weight '" + std::string(ws) + "'", "positive integer");
          w = std::stoi(std::string(ws));
          if (w < 1) throw ParseError(line_no, wc, "weight must be >= 1", "positive integer");
        }
        names.emplace_back(name);
        weights.push_back(w);
        name_pos.emplace_back(line_no, c);
        skip();
      }
    } else if (kw == "rels") {
      if (names.empty()) throw ParseError(line_no, kw_col, "rels before gens");
      rel_lines.emplace_back(std::string(line.substr(i)), line_no, i);
    } else {
      throw ParseError(line_no, kw_col, "unknown directive '" + std::string(kw) + "'", "p, gens or rels");
    }
  }
  if (names.empty()) throw ParseError(line_no + 1, 1, "missing gens line", "gens");
  if (!p) throw ParseError(line_no + 1, 1, "missing p line", "p");
  freealg::Alphabet alphabet(names, static_cast<fplin::Scalar>(*p));
  std::vector<Word> rels;
  for (const auto& [body, ln, off] : rel_lines) {
    detail::WordParser wp(body, ln, off, alphabet);
    for (auto& [w, c] : wp.relator_list()) {
      if (w.reduced().empty()) throw ParseError(ln, c, "relator is trivial after free reduction");
      rels.push_back(std::move(w));
    }
  }
  return Presentation(std::move(alphabet), std::move(rels), freealg::DegreeMap(weights));
}

inline std::string word_to_string(const Word& w, const freealg::Alphabet& alphabet) {
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += alphabet.names.at(l.gen);
    if (l.exp != 1) out += "^" + std::to_string(l.exp);
  }
  return out;
}

inline std::string serialize_presentation(const Presentation& pres) {
  std::string out = "p " + std::to_string(pres.p()) + "\ngens";
  for (std::size_t g = 0; g < pres.generator_count(); ++g) {
    out += ' ' + pres.alphabet.names[g];
    if (pres.default_weights.weights[g] != 1) out += ':' + std::to_string(pres.default_weights.weights[g]);
  }
  out += '\n';
  for (const auto& r : pres.relators) out += "rels " + word_to_string(r, pres.alphabet) + '\n';
  return out;
}

/// A single word over the presentation's generators.
inline Word parse_word(std::string_view text, const freealg::Alphabet& alphabet) {
  detail::WordParser wp(text, 1, 0, alphabet);
  auto list = wp.relator_list();
  if (list.size() != 1) throw ParseError(1, list[1].second, "expected a single word");
  return list.front().first;
}

// ---------------------------------------------------------------------------
// Groups

namespace detail {

inline std::vector<std::size_t> parse_params(std::string_view s, std::string_view spec) {
  std::vector<std::size_t> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    std::string_view t = s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (t.empty() || t.size() > 9 || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw UsageError("invalid parameter '" + std::string(t) + "' in builtin '" + std::string(spec) + "'");
    out.push_back(std::stoul(std::string(t)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline pgroups::FiniteGroup builtin_factor(std::string_view spec, const Limits& limits) {
  std::size_t colon = spec.find(':');
  std::string name(spec.substr(0, colon));
  auto params = parse_params(colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1), spec);
  auto need = [&](std::size_t n) {
    if (params.size() != n)
      throw UsageError("builtin '" + name + "' takes " + std::to_string(n) + " parameter(s)");
  };
  if (name == "trivial") {
    need(0);
    return pgroups::trivial_group();
  }
  if (name == "cyclic") {
    need(1);
    return pgroups::cyclic(params[0], limits);
  }
  if (name == "elementary_abelian") {
    need(2);
    return pgroups::elementary_abelian(params[0], params[1], limits);
  }
  if (name == "dihedral") {
    need(1);
    return pgroups::dihedral(params[0], limits);
  }
  if (name == "symmetric") {
    need(1);
    if (params[0] > 7) throw ResourceError("group_order", limits.group_order, "symmetric group on " + std::to_string(params[0]) + " points");
    return pgroups::symmetric(params[0], limits);
  }
  if (name == "free_cmea") {
    need(2);
    return pgroups::free_cmea(params[0], params[1], limits);
  }
  if (name == "lamplighter") {
    need(2);
    if (params[1] > 6) throw ResourceError("group_order", limits.group_order, "lamplighter quotient");
    return pgroups::lamplighter_quotient(params[0], params[1], limits);
  }
  throw UsageError("unknown builtin group '" + name +
                   "' (expected trivial, cyclic, elementary_abelian, dihedral, symmetric, free_cmea or lamplighter)");
}

}  // namespace detail

/// "name:a,b" factors joined by '*', e.g. "cyclic:2*dihedral:8".
inline pgroups::FiniteGroup builtin_group(std::string_view spec, const Limits& limits = {}) {
  if (spec.empty()) throw UsageError("empty builtin group spec");
  std::size_t star = spec.find('*');
  pgroups::FiniteGroup g = detail::builtin_factor(spec.substr(0, star), limits);
  while (star != std::string_view::npos) {
    std::size_t next = spec.find('*', star + 1);
    auto h = detail::builtin_factor(spec.substr(star + 1, next == std::string_view::npos ? std::string_view::npos : next - star - 1), limits);
    g = pgroups::direct_product(g, h, limits);
    star = next;
  }
  return g;
}

inline json group_to_json(const pgroups::FiniteGroup& g) {
  json j;
  j["format"] = format_version;
  j["label"] = g.label();
  j["order"] = g.order();
  json rows = json::array();
  for (std::size_t a = 0; a < g.order(); ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < g.order(); ++b) row.push_back(g.mul(static_cast<pgroups::Elem>(a), static_cast<pgroups::Elem>(b)));
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  return j;
}

inline void require_format(const json& j, const char* what) {
  if (!j.is_object()) throw UsageError(std::string(what) + " must be a JSON object");
  if (!j.contains("format") || j["format"] != format_version)
    throw UsageError(std::string(what) + " needs \"format\": 1");
}

/// {format, builtin[, params]} or {format, order, table[, label]}.
inline pgroups::FiniteGroup group_from_json(const json& j, const Limits& limits = {}, std::uint64_t seed = 0x5eedULL) {
  require_format(j, "group");
  try {
    if (j.contains("builtin")) {
      std::string spec = j["builtin"].get<std::string>();
      if (j.contains("params")) {
        std::string ps;
        for (const auto& v : j["params"]) ps += (ps.empty() ? "" : ",") + std::to_string(v.get<std::size_t>());
        spec += ":" + ps;
      }
      return builtin_group(spec, limits);
    }
    std::size_t n = j.at("order").get<std::size_t>();
    if (n > limits.group_order) throw ResourceError("group_order", limits.group_order, "group of order " + std::to_string(n));
    const auto& rows = j.at("table");
    if (!rows.is_array() || rows.size() != n) throw DomainError("table must have `order` rows");
    std::vector<pgroups::Elem> table;
    table.reserve(n * n);
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != n) throw DomainError("table rows must have `order` entries");
      for (const auto& v : row) {
        long long e = v.get<long long>();
        if (e < 0 || static_cast<std::size_t>(e) >= n) throw DomainError("Cayley table entry out of range");
        table.push_back(static_cast<pgroups::Elem>(e));
      }
    }
    std::string label = j.contains("label") ? j["label"].get<std::string>() : std::string();
    return pgroups::FiniteGroup::from_table(n, std::move(table), std::move(label), limits, seed);
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed group JSON: ") + e.what());
  }
}

inline json subgroup_to_json(const pgroups::Subgroup& s) {
  json j = json::array();
  for (auto e : s.elements()) j.push_back(e);
  return j;
}

/// Named subgroups: whole, trivial, center, derived, frattini, cyclicN (the
/// subgroup generated by the least element of order N), base (lamplighter
/// base group), gens:a,b,..., normal:a,b,..., elements:a,b,...
inline pgroups::Subgroup parse_subgroup(const pgroups::FiniteGroup& g, std::string_view spec) {
  using namespace pgroups;
  auto elems = [&](std::string_view list) {
    std::vector<Elem> out;
    for (auto v : detail::parse_params(list, spec)) {
      if (v >= g.order()) throw UsageError("element " + std::to_string(v) + " out of range");
      out.push_back(static_cast<Elem>(v));
    }
    return out;
  };
  if (spec == "whole") return Subgroup::whole(g);
  if (spec == "trivial") return Subgroup::trivial(g.order());
  if (spec == "center") return center(g);
  if (spec == "derived") return derived_subgroup(g);
  if (spec == "frattini") return frattini_p(g);
  if (spec == "base") {
    std::string_view label = g.label();
    if (label.substr(0, 12) != "lamplighter:") throw UsageError("'base' needs a lamplighter builtin");
    auto params = detail::parse_params(label.substr(12), label);
    return lamplighter_base(params.at(0), params.at(1));
  }
  if (spec.substr(0, 6) == "cyclic") {
    auto params = detail::parse_params(spec.substr(6), spec);
    if (params.size() != 1) throw UsageError("cyclicN needs one order");
    for (Elem x = 0; x < g.order(); ++x)
      if (g.element_order(x) == params[0]) return subgroup_generated(g, {x});
    throw DomainError("no element of order " + std::to_string(params[0]));
  }
  if (spec.substr(0, 5) == "gens:") {
    auto e = elems(spec.substr(5));
    return subgroup_generated(g, e);
  }
  if (spec.substr(0, 7) == "normal:") {
    auto e = elems(spec.substr(7));
    return normal_closure(g, e);
  }
  if (spec.substr(0, 9) == "elements:") {
    Subgroup s(g.order(), elems(spec.substr(9)));
    if (!is_subgroup(g, s)) throw DomainError("element set is not a subgroup");
    return s;
  }
  throw UsageError("unknown subgroup specifier '" + std::string(spec) +
                   "' (expected whole, trivial, center, derived, frattini, base, cyclicN, gens:, normal: or elements:)");
}

// ---------------------------------------------------------------------------
// Modules

inline json matrix_to_json(const fplin::FpMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json module_to_json(const fpgmod::FpGModule& m) {
  json j;
  j["format"] = format_version;
  j["p"] = m.p();
  j["dim"] = m.dim();
  j["group"] = group_to_json(m.group());
  j["generators"] = m.generators();
  json mats = json::array();
  for (const auto& a : m.matrices()) mats.push_back(matrix_to_json(a));
  j["matrices"] = std::move(mats);
  return j;
}

/// {format, p, group, generators, matrices[, dim]}; or {format, p, group,
/// regular: true} / {format, p, group, trivial: dim}; optional "power": n.
inline fpgmod::FpGModule module_from_json(const json& j, const Limits& limits = {}, std::uint64_t seed = 0x5eedULL) {
  require_format(j, "module");
  try {
    std::uint64_t p = j.at("p").get<std::uint64_t>();
    if (!is_prime(p) || p > fplin::max_modulus) throw DomainError("module p must be a prime below 65522");
    auto g = fpgmod::share(group_from_json(j.at("group"), limits, seed));
    auto sp = static_cast<fplin::Scalar>(p);
    fpgmod::FpGModule m;
    if (j.value("regular", false)) {
      m = fpgmod::regular_module(g, sp);
    } else if (j.contains("trivial")) {
      m = fpgmod::trivial_module(g, sp, j["trivial"].get<std::size_t>());
    } else {
      std::vector<pgroups::Elem> gens;
      for (const auto& v : j.at("generators")) {
        auto e = v.get<long long>();
        if (e < 0 || static_cast<std::size_t>(e) >= g->order()) throw DomainError("generator index out of range");
        gens.push_back(static_cast<pgroups::Elem>(e));
      }
      std::vector<fplin::FpMatrix> mats;
      for (const auto& mj : j.at("matrices")) {
        std::vector<std::vector<long long>> rows;
        for (const auto& r : mj) rows.push_back(r.get<std::vector<long long>>());
        if (rows.size() > 64) throw ResourceError("enumeration", limits.enumeration, "module dimension");
        mats.push_back(fplin::FpMatrix::from_rows(sp, rows));
      }
      std::size_t dim = j.contains("dim") ? j["dim"].get<std::size_t>() : (mats.empty() ? 0 : mats.front().rows());
      m = fpgmod::FpGModule(sp, g, std::move(gens), std::move(mats), dim);
    }
    if (j.contains("power")) m = fpgmod::power_module(m, j["power"].get<std::size_t>(), limits);
    return m;
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed module JSON: ") + e.what());
  }
}

inline json subspace_to_json(const fplin::Subspace& s) {
  json rows = json::array();
  for (const auto& v : s.basis()) rows.push_back(v);
  return rows;
}

// ---------------------------------------------------------------------------
// Results

inline json certificate_to_json(const gscert::GsCertificate& c) {
  json j;
  j["format"] = format_version;
  j["weights"] = c.degree_map.weights;
  j["t0"] = to_fraction_string(c.t0);
  j["value"] = to_fraction_string(c.value);
  j["delta"] = to_fraction_string(c.delta);
  return j;
}

inline json growth_to_json(const growth::GrowthTable& t) {
  json j;
  j["format"] = format_version;
  j["group"] = t.label;
  j["order"] = t.order;
  json rows = json::object();
  for (const auto& r : t.rows) {
    json row;
    row["normal"] = std::to_string(r.normal);
    if (r.characteristic) row["characteristic"] = std::to_string(*r.characteristic);
    if (r.subgroups) row["subgroups"] = std::to_string(*r.subgroups);
    row["cumulative_normal"] = std::to_string(r.cumulative_normal);
    if (r.cumulative_characteristic) row["cumulative_characteristic"] = std::to_string(*r.cumulative_characteristic);
    rows[std::to_string(r.index)] = std::move(row);
  }
  j["table"] = std::move(rows);
  j["total_normal"] = std::to_string(t.total_normal());
  return j;
}

inline std::string growth_to_csv(const growth::GrowthTable& t) {
  std::string out = "index,normal,characteristic\n";
  for (const auto& r : t.rows)
    out += std::to_string(r.index) + "," + std::to_string(r.normal) + "," +
           (r.characteristic ? std::to_string(*r.characteristic) : std::string()) + "\n";
  return out;
}

inline json report_to_json(const growth::BoundReport& r) {
  json j;
  j["format"] = format_version;
  j["name"] = r.name;
  j["relation"] = r.relation;
  j["holds"] = r.holds;
  j["vacuous"] = r.vacuous;
  json q = json::object();
  for (const auto& [k, v] : r.quantities) q[k] = v;
  j["quantities"] = std::move(q);
  json entries = json::array();
  for (const auto& e : r.entries) entries.push_back({{"label", e.label}, {"lhs", e.lhs}, {"rhs", e.rhs}, {"holds", e.holds}});
  j["entries"] = std::move(entries);
  return j;
}

inline std::string report_to_csv(const growth::BoundReport& r) {
  std::string out = "label,lhs,rhs,holds\n";
  for (const auto& e : r.entries) out += "\"" + e.label + "\"," + e.lhs + "," + e.rhs + "," + (e.holds ? "true" : "false") + "\n";
  return out;
}

}  // namespace pgrowth::io

#endif  // PGROWTH_IO_HPP_INCLUDED
