// plancomp: classify, compile, solve and check propositional planning
// instances. Exit codes: 0 ok, 1 usage or syntax, 2 semantic, 3 no route.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>

#include "plancomp/circuits.hpp"
#include "plancomp/error.hpp"
#include "plancomp/files.hpp"
#include "plancomp/gadgets.hpp"
#include "plancomp/planner.hpp"
#include "plancomp/routing.hpp"
#include "plancomp/schemes.hpp"
#include "plancomp/semantics.hpp"
#include "plancomp/text.hpp"

using namespace plancomp;

namespace {

constexpr int kUsage = 1;
constexpr int kSemantic = 2;
constexpr int kNoRoute = 3;

struct RouteExit {
  std::string message;
};

DomainStructure load_domain(const std::string& path) {
  Document doc = load_document(path);
  if (doc.domains.size() != 1) throw ValidationError("'" + path + "' must define exactly one domain");
  return doc.domains[0];
}

Instance load_instance(const std::string& path, const std::vector<DomainStructure>& known = {}) {
  Document doc = load_document(path, known);
  if (doc.instances.size() != 1) throw ValidationError("'" + path + "' must contain exactly one instance");
  return doc.instances[0];
}

Plan load_plan(const std::string& path) {
  Document doc = load_document(path);
  if (doc.plans.size() != 1) throw ValidationError("'" + path + "' must contain exactly one plan");
  return doc.plans[0];
}

FormalismTag tag_arg(const std::string& s) {
  auto t = parse_tag(s);
  if (!t) throw CLI::ValidationError("unknown formalism '" + s + "'");
  return *t;
}

void write_compiled(const std::string& dir, const Instance& out) {
  std::filesystem::create_directories(dir);
  write_file_atomic((std::filesystem::path(dir) / "domain.sexp").string(), print_domain(out.domain));
  write_file_atomic((std::filesystem::path(dir) / "instance.sexp").string(), print_instance(out));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compiler toolkit for propositional planning formalisms"};
  app.require_subcommand(1);

  // check
  std::vector<std::string> check_files;
  auto* check = app.add_subcommand("check", "Classify domains and instances");
  check->add_option("files", check_files)->required()->check(CLI::ExistingFile);

  // compile
  std::string route_spec, preserve = "poly", scheme_name, out_dir, dom_file, inst_file;
  auto* compile = app.add_subcommand("compile", "Compile an instance with a scheme or a routed chain");
  auto* route_opt = compile->add_option("--route", route_spec, "SRC..DST");
  compile->add_option("--preserve", preserve, "exact | linear | poly")
      ->check(CLI::IsMember({"exact", "linear", "poly"}));
  auto* scheme_opt = compile->add_option("--scheme", scheme_name)
                         ->check(CLI::IsMember({"t6", "l7", "l8", "t20", "t22b", "t22l", "t23"}));
  route_opt->excludes(scheme_opt);
  compile->add_option("-o,--output", out_dir)->required();
  compile->add_option("domain", dom_file)->required()->check(CLI::ExistingFile);
  compile->add_option("instance", inst_file)->required()->check(CLI::ExistingFile);

  // solve
  std::size_t max_steps = 0, max_atoms = 10, max_expansions = 0;
  bool stubborn = false;
  std::string solve_file;
  auto* solve = app.add_subcommand("solve", "Breadth-first plan search");
  auto* max_steps_opt = solve->add_option("--max-steps", max_steps);
  solve->add_option("--max-atoms", max_atoms);
  solve->add_option("--max-expansions", max_expansions);
  solve->add_flag("--stubborn-sets", stubborn);
  solve->add_option("instance", solve_file)->required()->check(CLI::ExistingFile);

  // validate
  std::string val_inst, val_plan;
  auto* validate_cmd = app.add_subcommand("validate", "Check that a plan solves an instance");
  validate_cmd->add_option("instance", val_inst)->required()->check(CLI::ExistingFile);
  validate_cmd->add_option("plan", val_plan)->required()->check(CLI::ExistingFile);

  // translate-plan
  std::string tp_scheme, tp_dom, tp_inst, tp_plan;
  auto* translate = app.add_subcommand("translate-plan", "Translate a source plan through a scheme");
  translate->add_option("--scheme", tp_scheme)->required();
  translate->add_option("domain", tp_dom)->required()->check(CLI::ExistingFile);
  translate->add_option("instance", tp_inst)->required()->check(CLI::ExistingFile);
  translate->add_option("plan", tp_plan)->required()->check(CLI::ExistingFile);

  // circuit
  std::string c_dom, c_inst, c_plan, c_eval, c_emit;
  auto* circuit = app.add_subcommand("circuit", "Plan-validity circuit for a fixed plan");
  circuit->add_option("domain", c_dom)->required()->check(CLI::ExistingFile);
  circuit->add_option("instance", c_inst)->required()->check(CLI::ExistingFile);
  circuit->add_option("plan", c_plan)->required()->check(CLI::ExistingFile);
  circuit->add_option("--eval", c_eval, "input bits, one per atom in sorted order");
  circuit->add_option("--emit", c_emit)->check(CLI::IsMember({"gates", "graph"}));

  // gadget
  auto* gadget = app.add_subcommand("gadget", "Print a gadget domain or instance");
  gadget->require_subcommand(1);
  std::size_t copy_n = 1;
  auto* gadget_copy = gadget->add_subcommand("copy", "Copy domain over n atoms");
  gadget_copy->add_option("n", copy_n)->required()->check(CLI::PositiveNumber);
  std::string cnf_file;
  auto* gadget_unsat = gadget->add_subcommand("unsat3cnf", "One-step reduction from 3CNF unsatisfiability");
  gadget_unsat->add_option("cnf", cnf_file)->required()->check(CLI::ExistingFile);

  // gen
  std::string gen_tag;
  GenParams gp;
  auto* gen = app.add_subcommand("gen", "Seeded random instance");
  gen->add_option("--formalism", gen_tag)->required();
  gen->add_option("--atoms", gp.atom_count)->required();
  gen->add_option("--ops", gp.operator_count)->required();
  gen->add_option("--seed", gp.seed)->required();
  gen->add_option("--max-effects", gp.max_effects);
  gen->add_option("--max-depth", gp.max_condition_depth);
  gen->add_flag("--unique-effect-literals", gp.unique_effect_literals);

  // route
  std::string r_src, r_dst, r_size = "poly";
  auto* route_cmd = app.add_subcommand("route", "Look up a compilation route");
  route_cmd->add_option("source", r_src)->required();
  route_cmd->add_option("target", r_dst)->required();
  route_cmd->add_option("--preserve", r_size)->check(CLI::IsMember({"exact", "linear", "poly"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*check) {
      int rc = 0;
      for (const auto& f : check_files) {
        try {
          Document doc = load_document(f);
          for (const auto& d : doc.domains)
            std::cout << f << ": domain " << d.name << " " << classify_domain(d).name() << " atoms "
                      << d.atoms.size() << " operators " << d.operators.size() << "\n";
          for (const auto& p : doc.instances)
            std::cout << f << ": instance of " << p.domain.name << " " << classify_instance(p).name() << "\n";
          for (const auto& p : doc.plans) std::cout << f << ": plan of " << p.size() << " steps\n";
        } catch (const ParseError& e) {
          std::cerr << f << ":" << e.what() << "\n";
          rc = std::max(rc, kUsage);
        } catch (const Error& e) {
          std::cerr << f << ": " << e.what() << "\n";
          rc = std::max(rc, kSemantic);
        }
      }
      return rc;
    }

    if (*compile) {
      DomainStructure d = load_domain(dom_file);
      Instance p = load_instance(inst_file, {d});
      CompilationScheme f;
      if (!route_spec.empty()) {
        auto dots = route_spec.find("..");
        if (dots == std::string::npos) throw CLI::ValidationError("--route expects SRC..DST");
        FormalismTag src = tag_arg(route_spec.substr(0, dots));
        FormalismTag dst = tag_arg(route_spec.substr(dots + 2));
        RouteAnswer ans = route(src, dst, *parse_size_class(preserve));
        if (ans.kind != RouteAnswer::Kind::Chain)
          throw RouteExit{ans.kind == RouteAnswer::Kind::Impossible
                              ? "impossible: " + ans.citation + (ans.caveat.empty() ? "" : " (" + ans.caveat + ")")
                              : "no known route"};
        f = chain_scheme(ans, src);
      } else if (!scheme_name.empty()) {
        f = scheme_by_name(scheme_name);
      } else {
        throw CLI::ValidationError("compile needs --route or --scheme");
      }
      Instance out = compile_instance(f, p);
      write_compiled(out_dir, out);
      std::cout << f.name << " " << f.preservation.str() << " " << classify_instance(out).name() << "\n";
      return 0;
    }

    if (*solve) {
      Instance p = load_instance(solve_file);
      PlannerOptions opts;
      if (*max_steps_opt) opts.max_steps = max_steps;
      opts.max_atoms = max_atoms;
      opts.max_expansions = max_expansions;
      opts.stubborn_sets = stubborn;
      SearchResult r = plan_exists(p, opts);
      std::cout << (r.found() ? print_plan(r.plan) : std::string("(no-plan)\n"));
      std::cerr << "verdict " << verdict_name(r.verdict) << " expanded " << r.expanded << " frontier-peak "
                << r.frontier_peak;
      if (r.verdict == Verdict::BoundExceeded) std::cerr << " depth " << r.bound_depth;
      std::cerr << "\n";
      return 0;
    }

    if (*validate_cmd) {
      Instance p = load_instance(val_inst);
      Plan plan = load_plan(val_plan);
      if (validate(p, plan)) {
        std::cout << "valid\n";
        return 0;
      }
      std::cout << "invalid\n";
      return kSemantic;
    }

    if (*translate) {
      DomainStructure d = load_domain(tp_dom);
      Instance p = load_instance(tp_inst, {d});
      Plan plan = load_plan(tp_plan);
      std::cout << print_plan(translate_plan(scheme_by_name(tp_scheme), p, plan));
      return 0;
    }

    if (*circuit) {
      DomainStructure d = load_domain(c_dom);
      Instance p = load_instance(c_inst, {d});
      Plan plan = load_plan(c_plan);
      Circuit c = build_plan_circuit(d, p.goal, plan);
      if (!c_eval.empty()) std::cout << (eval_circuit(c, c_eval) ? 1 : 0) << "\n";
      if (c_emit == "gates") std::cout << export_gates(c);
      if (c_emit == "graph") std::cout << export_dot(c);
      if (c_eval.empty() && c_emit.empty()) {
        CircuitMeasure m = measure(c);
        std::cout << "depth " << m.depth << " size " << m.size << " inputs " << c.input_count << "\n";
      }
      return 0;
    }

    if (*gadget) {
      if (*gadget_copy) {
        std::cout << print_domain(copy_domain(copy_n));
      } else {
        Instance p = unsat_gadget_instance(parse_cnf(read_file(cnf_file)));
        std::cout << print_domain(p.domain) << "\n" << print_instance(p);
      }
      return 0;
    }

    if (*gen) {
      gp.tag = tag_arg(gen_tag);
      Instance p = random_instance(gp);
      std::cout << print_domain(p.domain) << "\n" << print_instance(p);
      return 0;
    }

    if (*route_cmd) {
      RouteAnswer ans = route(tag_arg(r_src), tag_arg(r_dst), *parse_size_class(r_size));
      std::cout << ans.str() << "\n";
      if (ans.kind == RouteAnswer::Kind::Impossible) std::cerr << ans.citation << "\n";
      return ans.kind == RouteAnswer::Kind::Chain ? 0 : kNoRoute;
    }
  } catch (const RouteExit& e) {
    std::cerr << e.message << "\n";
    return kNoRoute;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "syntax: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSemantic;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSemantic;
  }
  return 0;
}
