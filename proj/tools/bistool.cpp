// bistool: batch front end for finite Boolean inverse semigroup computations.
//
// Subcommands cover the word problem for free structures, falsification in
// finite partial-injection structures, identity checks, decomposition into
// matrix structures over groups, type data and indexes, congruence
// enumeration, unit groups, embedding tests, radicals, and radical chains.
//
// Exit codes: 0 success, 1 false verdict under --strict, 2 input error,
// 3 resource cap.

#include <CLI11.hpp>

#include <iostream>
#include <set>
#include <sstream>

#include "bis/builtins.hpp"
#include "bis/errors.hpp"
#include "bis/free_bias.hpp"
#include "bis/json_io.hpp"
#include "bis/rook.hpp"
#include "bis/term.hpp"
#include "bis/type_structure.hpp"
#include "bis/util.hpp"
#include "bis/variety.hpp"

namespace {

using bis::json;

struct Options {
  std::string format = "text";
  bool strict = false;
  int threads = 1;
  std::uint64_t cap_elements = 100000;
  std::uint64_t cap_search = 10000000;
};

struct Outcome {
  json report;
  bool verdict_false = false;
  std::vector<std::string> text;
};

std::string digest(const std::string& payload) {
  std::ostringstream os;
  os << std::hex << bis::fnv1a(payload);
  return os.str();
}

bis::Bias load_bias(const std::string& arg, json* echo) {
  if (auto b = bis::builtin_bias(arg)) {
    *echo = arg;
    return *b;
  }
  json j = bis::load_json_file(arg);
  *echo = json{{"path", arg}, {"digest", digest(j.dump())}};
  return bis::boolean_closure(bis::semigroup_from_json(j));
}

bis::Group load_group(const std::string& arg, json* echo) {
  if (auto g = bis::builtin_group(arg)) {
    *echo = arg;
    return *g;
  }
  json j = bis::load_json_file(arg);
  *echo = json{{"path", arg}, {"digest", digest(j.dump())}};
  return bis::group_from_json(j);
}

// a variety argument is a JSON file or a shorthand list like "2:triv,1:Z2"
bis::VarietySpec load_variety(const std::string& arg, json* echo) {
  if (arg.find(':') != std::string::npos) {
    bis::VarietySpec v;
    for (auto& part : bis::split(arg, ',')) {
      auto fields = bis::split(part, ':');
      if (fields.size() != 2) throw bis::InputError("bad variety shorthand: " + part);
      bis::VarietySpec::Generator g;
      try {
        g.n = std::stoi(fields[0]);
      } catch (const std::exception&) {
        throw bis::InputError("bad variety shorthand: " + part);
      }
      if (g.n < 1) throw bis::InputError("variety shorthand: order must be positive");
      auto grp = bis::builtin_group(fields[1]);
      if (!grp) throw bis::InputError("unknown builtin group " + fields[1]);
      g.group = *grp;
      g.label = fields[1];
      v.generators.push_back(std::move(g));
    }
    *echo = arg;
    return v;
  }
  json j = bis::load_json_file(arg);
  *echo = json{{"path", arg}, {"digest", digest(j.dump())}};
  return bis::variety_from_json(j);
}

// identifiers occurring in the raw strings, minus the d(...)/r(...) sugar
std::vector<std::string> infer_alphabet(std::initializer_list<std::string> terms) {
  std::set<std::string> vars;
  for (auto& probe : terms) {
    std::string ident;
    for (std::size_t i = 0; i <= probe.size(); ++i) {
      char c = i < probe.size() ? probe[i] : ' ';
      if ((c >= 'a' && c <= 'z') || (!ident.empty() && c >= '0' && c <= '9')) {
        ident += c;
      } else {
        if (!ident.empty() && !((ident == "d" || ident == "r") && c == '('))
          vars.insert(ident);
        ident.clear();
      }
    }
  }
  return {vars.begin(), vars.end()};
}

std::vector<std::string> choose_alphabet(const std::string& spec, const std::string& t1,
                                         const std::string& t2) {
  if (!spec.empty()) return bis::split(spec, ',');
  return infer_alphabet({t1, t2});
}

json group_report(const bis::Group& g) {
  json j = bis::to_json(g);
  j["order"] = g.size();
  j["label"] = bis::describe_group(g);
  return j;
}

const char* verdict_name(bis::Verdict v) {
  switch (v) {
    case bis::Verdict::True: return "true";
    case bis::Verdict::False: return "false";
    default: return "inconclusive";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite Boolean inverse semigroup toolkit"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--strict", opt.strict, "exit 1 when a decision comes out false");
  app.add_option("--threads", opt.threads, "worker threads for exhaustive checks");
  app.add_option("--cap-elements", opt.cap_elements, "bound on enumerated elements");
  app.add_option("--cap-search", opt.cap_search, "bound on search/evaluation steps");

  std::string t1, t2, alphabet_spec, structure, group_arg, h_arg, variety_arg;
  int max_n = 4, order_n = 1, order_m = 1;

  auto* decide = app.add_subcommand("decide", "word problem for free structures");
  decide->add_option("t1", t1)->required();
  decide->add_option("t2", t2)->required();
  decide->add_option("--alphabet", alphabet_spec, "comma separated variables");

  auto* falsify_cmd = app.add_subcommand("falsify", "search for a separating assignment");
  falsify_cmd->add_option("t1", t1)->required();
  falsify_cmd->add_option("t2", t2)->required();
  falsify_cmd->add_option("--max-n", max_n, "largest ambient size to try");
  falsify_cmd->add_option("--alphabet", alphabet_spec);

  auto* check_identity = app.add_subcommand("check-identity", "identity check in a structure");
  check_identity->add_option("structure", structure)->required();
  check_identity->add_option("t1", t1)->required();
  check_identity->add_option("t2", t2)->required();
  check_identity->add_option("--alphabet", alphabet_spec);

  auto* decompose_cmd = app.add_subcommand("decompose", "matrix-over-group decomposition");
  decompose_cmd->add_option("structure", structure)->required();

  auto* typemonoid = app.add_subcommand("typemonoid", "type data of a structure");
  typemonoid->add_option("structure", structure)->required();

  auto* index_cmd = app.add_subcommand("index", "least balanced power over all elements");
  index_cmd->add_option("structure", structure)->required();

  auto* congruences = app.add_subcommand("congruences", "congruence lattice");
  congruences->add_option("structure", structure)->required();

  auto* units = app.add_subcommand("units", "unit group of a matrix structure");
  units->add_option("--n", order_n)->required();
  units->add_option("--group", group_arg)->required();

  auto* embeds = app.add_subcommand("embeds", "matrix structure embedding test");
  embeds->set_help_flag("--help", "print help");  // frees the name --h
  embeds->add_option("--m", order_m)->required();
  embeds->add_option("--g", group_arg)->required();
  embeds->add_option("--n", order_n)->required();
  embeds->add_option("--h", h_arg)->required();

  auto* radical_cmd = app.add_subcommand("radical", "radical of a variety");
  radical_cmd->add_option("--n", order_n)->required();
  radical_cmd->add_option("--variety", variety_arg)->required();

  auto* check_chain = app.add_subcommand("check-chain", "radical chain conditions");
  check_chain->add_option("--variety", variety_arg)->required();

  auto* symmetric = app.add_subcommand("symmetric", "emit a partial-injection structure");
  symmetric->add_option("--n", order_n)->required();

  // global flags remain usable after the subcommand name
  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    Outcome out;
    json inputs;
    std::string command;

    if (decide->parsed()) {
      command = "decide";
      auto alphabet = choose_alphabet(alphabet_spec, t1, t2);
      auto a = bis::parse_term(t1, alphabet);
      auto b = bis::parse_term(t2, alphabet);
      bool equal = bis::free_decide_equal_terms(a, b, alphabet);
      inputs = {{"t1", t1}, {"t2", t2}, {"alphabet", alphabet},
                {"digest", digest(t1 + "\x1f" + t2)}};
      out.report = {{"equal", equal}};
      out.verdict_false = !equal;
      out.text = {std::string("equal: ") + (equal ? "true" : "false")};
    } else if (falsify_cmd->parsed()) {
      command = "falsify";
      auto alphabet = choose_alphabet(alphabet_spec, t1, t2);
      auto a = bis::parse_term(t1, alphabet);
      auto b = bis::parse_term(t2, alphabet);
      auto sep = bis::falsify(a, b, max_n);
      inputs = {{"t1", t1}, {"t2", t2}, {"max_n", max_n},
                {"digest", digest(t1 + "\x1f" + t2)}};
      if (sep) {
        json assignment;
        for (auto& [var, p] : sep->assignment) assignment[var] = bis::to_json(p);
        out.report = {{"separator", {{"n", sep->n},
                                     {"assignment", assignment},
                                     {"lhs", sep->lhs_value},
                                     {"rhs", sep->rhs_value}}}};
        std::string line = "separated at n=" + std::to_string(sep->n) + ":";
        for (auto& [var, p] : sep->assignment) line += " " + var + "=" + p.to_string();
        out.text = {line, "values: " + sep->lhs_value + " vs " + sep->rhs_value};
      } else {
        out.report = {{"separator", nullptr}};
        out.text = {"no separator found up to n=" + std::to_string(max_n) +
                    " (not a proof of equality)"};
      }
    } else if (check_identity->parsed()) {
      command = "check-identity";
      json echo;
      bis::Bias b = load_bias(structure, &echo);
      auto alphabet = choose_alphabet(alphabet_spec, t1, t2);
      auto lhs = bis::parse_term(t1, alphabet);
      auto rhs = bis::parse_term(t2, alphabet);
      auto check = bis::satisfies_identity(b, lhs, rhs, opt.cap_search, opt.threads);
      inputs = {{"structure", echo}, {"t1", t1}, {"t2", t2}};
      out.report["satisfied"] = check.holds;
      if (!check.holds) {
        json witness;
        for (auto& [var, e] : check.witness) witness[var] = b.sgp.names[e];
        out.report["witness"] = witness;
      }
      out.verdict_false = !check.holds;
      out.text = {std::string("satisfied: ") + (check.holds ? "true" : "false")};
      if (!check.holds) {
        std::string line = "witness:";
        for (auto& [var, e] : check.witness) line += " " + var + "=" + b.sgp.names[e];
        out.text.push_back(line);
      }
    } else if (decompose_cmd->parsed()) {
      command = "decompose";
      json echo;
      bis::Bias b = load_bias(structure, &echo);
      auto dec = bis::decompose(b, opt.cap_elements);
      inputs = {{"structure", echo}};
      json factors = json::array();
      for (auto& f : dec.factors)
        factors.push_back({{"n", f.n}, {"group", group_report(f.group)}});
      out.report = {{"factors", factors}, {"iso_checked", dec.iso_checked}};
      for (auto& f : dec.factors)
        out.text.push_back("factor: order " + std::to_string(f.n) + " over " +
                           bis::describe_group(f.group));
      out.text.push_back("isomorphism checked: true");
    } else if (typemonoid->parsed()) {
      command = "typemonoid";
      json echo;
      bis::Bias b = load_bias(structure, &echo);
      auto t = bis::type_monoid(b, opt.cap_elements);
      inputs = {{"structure", echo}};
      json typ = json::array();
      for (int e : t.idempotents)
        typ.push_back({{"idempotent", b.sgp.names[e]}, {"vector", t.typ_map.at(e)}});
      out.report = {{"factor_count", t.factor_count},
                    {"unit_vector", t.unit_vector},
                    {"typ", typ}};
      std::string uv = "unit vector: (";
      for (std::size_t i = 0; i < t.unit_vector.size(); ++i)
        uv += (i ? "," : "") + std::to_string(t.unit_vector[i]);
      out.text = {"factor count: " + std::to_string(t.factor_count), uv + ")"};
    } else if (index_cmd->parsed()) {
      command = "index";
      json echo;
      bis::Bias b = load_bias(structure, &echo);
      int idx = bis::bias_index(b);
      inputs = {{"structure", echo}};
      out.report = {{"index", idx}};
      out.text = {"index: " + std::to_string(idx)};
    } else if (congruences->parsed()) {
      command = "congruences";
      json echo;
      bis::Bias b = load_bias(structure, &echo);
      auto lat = bis::congruence_lattice(b, static_cast<int>(opt.cap_elements));
      inputs = {{"structure", echo}};
      json all = json::array();
      for (auto& c : lat.all) {
        json classes = json::array();
        for (auto& cls : c.classes()) classes.push_back(cls);
        all.push_back(classes);
      }
      out.report = {{"count", lat.all.size()},
                    {"congruences", all},
                    {"subdirectly_irreducible", lat.subdirectly_irreducible},
                    {"finitely_subdirectly_irreducible",
                     lat.finitely_subdirectly_irreducible}};
      out.text = {"congruences: " + std::to_string(lat.all.size()),
                  std::string("subdirectly irreducible: ") +
                      (lat.subdirectly_irreducible ? "true" : "false")};
    } else if (units->parsed()) {
      command = "units";
      json echo;
      bis::Group g = load_group(group_arg, &echo);
      auto rep = bis::units_of_matrix_bias(order_n, g, opt.cap_elements);
      inputs = {{"n", order_n}, {"group", echo}};
      out.report = {{"order", rep.unit_elems.size()},
                    {"wreath_order", rep.wreath.size()},
                    {"isomorphic", rep.isomorphic}};
      out.verdict_false = !rep.isomorphic;
      out.text = {"unit group order: " + std::to_string(rep.unit_elems.size()),
                  "wreath product order: " + std::to_string(rep.wreath.size()),
                  std::string("isomorphic: ") + (rep.isomorphic ? "true" : "false")};
    } else if (embeds->parsed()) {
      command = "embeds";
      json echo_g, echo_h;
      bis::Group g = load_group(group_arg, &echo_g);
      bis::Group h = load_group(h_arg, &echo_h);
      bis::VarietyCaps caps;
      caps.wreath_cap = opt.cap_elements;
      auto r = bis::matrix_bias_embeds(order_m, g, order_n, h, caps);
      inputs = {{"m", order_m}, {"g", echo_g}, {"n", order_n}, {"h", echo_h}};
      if (r.verdict == bis::Verdict::Inconclusive) throw bis::ResourceError(r.note);
      bool yes = r.verdict == bis::Verdict::True;
      out.report["embeds"] = yes;
      if (!yes) out.report["reason"] = r.note;
      out.verdict_false = !yes;
      out.text = {std::string("embeds: ") + (yes ? "true" : "false")};
      if (!yes) out.text.push_back("reason: " + r.note);
    } else if (radical_cmd->parsed()) {
      command = "radical";
      json echo;
      bis::VarietySpec v = load_variety(variety_arg, &echo);
      bis::VarietyCaps caps;
      caps.wreath_cap = opt.cap_elements;
      auto rad = bis::radical(order_n, v, caps);
      inputs = {{"n", order_n}, {"variety", echo}};
      if (!rad) {
        out.report = {{"empty", true}};
        out.text = {"radical: empty class"};
      } else {
        json gens = json::array();
        for (auto& g : *rad) gens.push_back(group_report(g));
        out.report = {{"empty", false}, {"generators", gens}};
        out.text = {"radical generated by:"};
        for (auto& g : *rad)
          out.text.push_back("  " + bis::describe_group(g) + " (order " +
                             std::to_string(g.size()) + ")");
      }
    } else if (check_chain->parsed()) {
      command = "check-chain";
      json echo;
      bis::VarietySpec v = load_variety(variety_arg, &echo);
      bis::VarietyCaps caps;
      caps.wreath_cap = opt.cap_elements;
      auto rep = bis::check_radical_chain(v, caps);
      inputs = {{"variety", echo}};
      json entries = json::array();
      for (auto& e : rep.entries) {
        json je = {{"what", e.what}, {"verdict", verdict_name(e.verdict)}};
        if (!e.note.empty()) je["note"] = e.note;
        entries.push_back(je);
      }
      out.report = {{"passed", rep.passed()},
                    {"failed", rep.failed},
                    {"inconclusive", rep.inconclusive},
                    {"entries", entries}};
      out.verdict_false = !rep.passed();
      out.text = {std::string("passed: ") + (rep.passed() ? "true" : "false")};
      for (auto& e : rep.entries)
        out.text.push_back(std::string("  [") + verdict_name(e.verdict) + "] " + e.what);
    } else if (symmetric->parsed()) {
      command = "symmetric";
      auto m = bis::symmetric_inverse_monoid(order_n, 6);
      inputs = {{"n", order_n}};
      out.report = bis::to_json(m.sgp);
      out.text = {out.report.dump()};
    }

    if (opt.format == "json") {
      json j;
      j["command"] = command;
      j["inputs"] = inputs;
      j["result"] = out.report;
      std::cout << j.dump(2) << "\n";
    } else {
      for (auto& line : out.text) std::cout << line << "\n";
    }
    if (opt.strict && out.verdict_false) return 1;
    return 0;
  } catch (const bis::ResourceError& e) {
    if (opt.format == "json")
      std::cout << json{{"error", {{"kind", "resource"}, {"message", e.what()}}}}.dump(2)
                << "\n";
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const bis::InputError& e) {
    if (opt.format == "json")
      std::cout << json{{"error", {{"kind", "input"}, {"message", e.what()}}}}.dump(2) << "\n";
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    if (opt.format == "json")
      std::cout << json{{"error", {{"kind", "internal"}, {"message", e.what()}}}}.dump(2)
                << "\n";
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
