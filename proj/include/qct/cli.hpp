#pragma once

// Command-line front end. Exit codes: 0 affirmative, 1 negative, 2 usage or
// input error.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qct/qct.hpp"

namespace qct::cli {

enum Exit : int { kYes = 0, kNo = 1, kError = 2 };

struct Invocation {
  std::string subcommand;
  std::string path;
  long n = 0;
  bool has_n = false;
  std::uint32_t field = 2;
  std::string format;  // defaults to dot for ar-quiver, text otherwise
  bool per_component = false;
  bool pre_only = false;
  std::uint64_t seed = 0;
  std::string gens_path;
  long max_resolution = 64;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string names(const Quiver& q, const ModuleList& l) {
  std::string s;
  for (const auto& m : l) s += (s.empty() ? "" : ", ") + module_name(q, m);
  return s;
}

inline void print_report_text(std::ostream& out, const AdmissibilityReport& r) {
  for (const auto& v : r.violations) {
    out << "  violation " << v.rule << ":";
    for (const auto& w : v.where) out << " " << w;
    out << "\n";
  }
}

inline void print_verify_text(std::ostream& out, const VerifyReport& r) {
  out << "pass: " << yes_no(r.pass) << "\n";
  for (const auto& c : r.counterexamples)
    out << "  " << c.kind << ": " << c.module << " i=" << c.i << " direction=" << c.direction << "\n";
  out << "functorial finiteness: implied by representation-finiteness\n";
}

struct Outcome {
  int code = kYes;
  Json json;
  std::string text;
};

inline ModuleList load_gens(const Quiver& q, const std::string& path) {
  return parse_module_list(q, Json::parse(read_file(path)));
}

inline Outcome run_on(const Invocation& inv, const Quiver& q) {
  Outcome o;
  std::ostringstream text;
  auto need_n = [&] {
    if (!inv.has_n) throw CLI::ValidationError("--n", "this subcommand needs --n");
  };
  const FieldSpec field(inv.field);
  auto check_length = [&](long needed) {
    if (needed > inv.max_resolution)
      throw Error("resolution length " + std::to_string(needed) + " exceeds --max-resolution " + std::to_string(inv.max_resolution));
  };

  if (inv.subcommand == "check") {
    need_n();
    auto r = inv.pre_only ? is_n_pre_admissible(q, inv.n) : is_n_admissible(q, inv.n);
    o.code = r.verdict ? kYes : kNo;
    o.json = to_json(r);
    text << inv.n << (inv.pre_only ? "-pre-admissible: " : "-admissible: ") << yes_no(r.verdict) << "\n";
    print_report_text(text, r);
  } else if (inv.subcommand == "flow-paths") {
    auto paths = enumerate_flow_paths(q);
    o.json = Json::array();
    for (const auto& fp : paths) {
      o.json.push_back(to_json(q, fp));
      QValues qv = q_values(fp, q);
      text << path_to_string(q, fp) << "  k=" << fp.length() << " q1=" << qv.q1 << " qk=" << qv.qk << " q=" << qv.q
           << " k+q=" << qv.k_plus_q << "  P=" << module_name(q, flow_projective(q, fp))
           << " I=" << module_name(q, flow_injective(q, fp)) << "\n";
    }
  } else if (inv.subcommand == "degree") {
    long N = admissible_degree(q);
    o.json = {{"N", N}, {"shape", classify_shape(q).to_string()}};
    text << N << "\n";
  } else if (inv.subcommand == "module") {
    need_n();
    auto subs = cluster_tilting_subcategories(q, inv.n, field);
    o.code = subs.empty() ? kNo : kYes;
    o.json = Json::array();
    for (const auto& s : subs) o.json.push_back(to_json(q, s));
    if (subs.empty()) text << "not " << inv.n << "-admissible; no " << inv.n << "-cluster tilting module\n";
    for (const auto& s : subs) text << names(q, s) << "\n";
  } else if (inv.subcommand == "subcats") {
    std::vector<long> ns;
    if (inv.has_n) {
      ns.push_back(inv.n);
    } else {
      Shape shape = classify_shape(q);
      long top = shape.is_cycle() ? static_cast<long>(shape.m) : admissible_degree(q);
      for (long d = 1; d <= top; ++d)
        if (top % d == 0) ns.push_back(d);
    }
    o.json = Json::array();
    bool any = false;
    for (long n : ns) {
      auto subs = cluster_tilting_subcategories(q, n, field);
      any = any || !subs.empty();
      Json list = Json::array();
      for (const auto& s : subs) list.push_back(to_json(q, s));
      o.json.push_back({{"n", n}, {"subcategories", list}});
      text << "n=" << n << ": " << subs.size() << " subcategor" << (subs.size() == 1 ? "y" : "ies") << "\n";
      for (const auto& s : subs) text << "  add{" << names(q, s) << "}\n";
    }
    o.code = any ? kYes : kNo;
  } else if (inv.subcommand == "lattice") {
    auto lat = lattice_of_ct(q);
    o.json = to_json(q, lat);
    if (inv.format == "dot") text << to_dot(lat);
    else {
      text << "N=" << lat.N << "\n";
      for (const auto& [n, gens] : lat.subcategories) text << "C" << n << ": " << gens.size() << " indecomposables\n";
      for (auto [a, b] : lat.covers) text << "C" << b << " < C" << a << "\n";
    }
  } else if (inv.subcommand == "verify") {
    need_n();
    check_length(inv.n + 1);
    ExtOracle oracle(q, field);
    std::vector<ModuleList> candidates;
    if (!inv.gens_path.empty()) candidates.push_back(load_gens(q, inv.gens_path));
    else candidates = cluster_tilting_subcategories(q, inv.n, field);
    if (candidates.empty()) {
      o.code = kNo;
      o.json = {{"pass", false}, {"counterexamples", Json::array()}, {"functorial_finiteness", "implied"}};
      text << "no candidate subcategory: quiver is not " << inv.n << "-admissible (pass --gens to test a module list)\n";
    } else {
      Json reports = Json::array();
      bool all = true;
      for (const auto& gens : candidates) {
        auto r = oracle.verify_n_cluster_tilting(inv.n, gens);
        all = all && r.pass;
        reports.push_back(to_json(r));
        print_verify_text(text, r);
      }
      o.json = reports.size() == 1 ? reports[0] : reports;
      o.code = all ? kYes : kNo;
    }
  } else if (inv.subcommand == "nz") {
    need_n();
    bool formula = admits_nZ(q, inv.n);
    o.json = {{"admits_nZ", formula}};
    text << "admits " << inv.n << "Z-cluster tilting: " << yes_no(formula) << "\n";
    o.code = formula ? kYes : kNo;
    if (!inv.gens_path.empty()) {
      check_length(inv.n + 1);
      ExtOracle oracle(q, field);
      auto r = oracle.verify_nZ(inv.n, load_gens(q, inv.gens_path));
      o.json["verification"] = to_json(r);
      text << "omega^" << inv.n << " closure: ";
      print_verify_text(text, r);
      if (!r.pass) o.code = kNo;
    }
  } else if (inv.subcommand == "ar-quiver") {
    ExtOracle oracle(q, field);
    auto ar = oracle.ar_quiver();
    o.json = to_json(q, ar);
    if (inv.format == "text") {
      text << ar.nodes.size() << " nodes, " << ar.arrow_count() << " arrows, " << ar.tau.size() << " tau pairs\n";
      for (const auto& [a, b, k] : ar.arrows)
        text << "  " << module_name(q, ar.nodes[a]) << " -> " << module_name(q, ar.nodes[b]) << (k > 1 ? " x" + std::to_string(k) : "") << "\n";
      for (auto [x, t] : ar.tau) text << "  tau(" << module_name(q, ar.nodes[x]) << ") = " << module_name(q, ar.nodes[t]) << "\n";
    } else {
      text << to_dot(q, ar);
    }
  } else if (inv.subcommand == "generate") {
    need_n();
    Quiver out = generate_admissible(inv.n, q, inv.seed);
    text << serialize_quiver(out);
    o.json = {{"quiver", serialize_quiver(out)}, {"N", admissible_degree(out)}};
  }
  o.text = text.str();
  return o;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"qct: cluster tilting for radical square zero algebras"};
  app.require_subcommand(1);
  Invocation inv;

  struct Command {
    const char* name;
    const char* help;
  };
  const Command commands[] = {
      {"check", "n-admissibility report (--pre for pre-admissibility only)"},
      {"flow-paths", "flow paths with their q-values"},
      {"degree", "admissible degree N(Q)"},
      {"module", "the basic n-cluster tilting module(s)"},
      {"subcats", "n-cluster tilting subcategories"},
      {"lattice", "lattice of cluster tilting subcategories"},
      {"verify", "check a subcategory against the definition with the Ext oracle"},
      {"nz", "nZ-cluster tilting criterion, plus oracle check with --gens"},
      {"ar-quiver", "Auslander-Reiten quiver"},
      {"generate", "subdivide flow paths of a skeleton quiver into an n-admissible one"},
  };
  for (const auto& s : commands) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("quiver", inv.path, "quiver file")->required();
    sub->add_option("--n", inv.n, "cluster tilting degree");
    sub->add_option("--field", inv.field, "prime characteristic for the oracle")->default_val(2);
    sub->add_option("--format", inv.format, "output format")->check(CLI::IsMember({"text", "json", "dot"}));
    sub->add_flag("--per-component", inv.per_component, "analyze each connected component");
    sub->add_option("--seed", inv.seed, "generator seed");
    sub->add_option("--gens", inv.gens_path, "module list JSON");
    sub->add_option("--max-resolution", inv.max_resolution, "cap on resolution length");
    if (std::string(s.name) == "check") sub->add_flag("--pre", inv.pre_only, "pre-admissibility only");
    sub->callback([&inv, name = std::string(s.name)] { inv.subcommand = name; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kYes;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  for (const auto& sub : app.get_subcommands())
    if (sub->count("--n")) inv.has_n = true;
  if (inv.format.empty()) inv.format = inv.subcommand == "ar-quiver" ? "dot" : "text";
  if (inv.format == "dot" && inv.subcommand != "lattice" && inv.subcommand != "ar-quiver") {
    err << "error: --format dot is only available for lattice and ar-quiver\n";
    return kError;
  }

  try {
    Quiver q = parse_quiver(detail::read_file(inv.path));
    std::vector<Quiver> parts;
    if (is_connected(q)) parts.push_back(q);
    else if (inv.per_component) parts = split_components(q);
    else throw DisconnectedQuiver();

    std::vector<detail::Outcome> outcomes;
    for (const auto& part : parts) outcomes.push_back(detail::run_on(inv, part));
    int code = kYes;
    for (const auto& o : outcomes) code = std::max(code, o.code);

    if (inv.format == "json") {
      if (outcomes.size() == 1 && !inv.per_component) out << outcomes[0].json.dump(2) << "\n";
      else {
        Json arr = Json::array();
        for (std::size_t i = 0; i < outcomes.size(); ++i) {
          Json vs = Json::array();
          for (const auto& v : parts[i].vertices()) vs.push_back(v);
          arr.push_back({{"component", vs}, {"result", outcomes[i].json}});
        }
        out << arr.dump(2) << "\n";
      }
    } else {
      for (std::size_t i = 0; i < outcomes.size(); ++i) {
        if (inv.per_component) out << "component " << i + 1 << " {" << parts[i].vertices().front() << ", ...}\n";
        out << outcomes[i].text;
      }
    }
    return code;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
}

inline int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

}  // namespace qct::cli
