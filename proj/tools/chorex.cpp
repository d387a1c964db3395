#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "chorex/approx.hpp"
#include "chorex/io.hpp"
#include "chorex/oracle.hpp"
#include "chorex/optimize.hpp"
#include "chorex/protocols.hpp"
#include "chorex/rw_query.hpp"
#include "chorex/simplex.hpp"

namespace {

using chorex::Json;
using chorex::Rational;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Output {
  bool quiet = false;
  void emit(const Json& doc) const {
    if (!quiet) std::cout << doc.dump(2) << "\n";
  }
  void emit_text(const std::string& text) const {
    if (!quiet) std::cout << text;
  }
};

chorex::Instance load_instance(const std::string& path, bool normalize,
                               std::vector<Rational>* scales) {
  auto policy = normalize ? chorex::Instance::Normalization::Rescale
                          : chorex::Instance::Normalization::Require;
  return chorex::parse_instance(read_input(path), policy, scales);
}

Json scales_to_json(const std::vector<Rational>& scales) {
  Json arr = Json::array();
  for (const Rational& s : scales) arr.push_back(chorex::rational_str(s));
  return arr;
}

std::set<chorex::Notion> parse_notions(const std::string& csv) {
  std::set<chorex::Notion> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    if (tok == "prop")
      out.insert(chorex::Notion::Proportional);
    else if (tok == "swapef")
      out.insert(chorex::Notion::SwapEF);
    else if (tok == "swapstable")
      out.insert(chorex::Notion::SwapStable);
    else
      throw chorex::BadParams("unknown notion \"" + tok +
                              "\" (want prop, swapef, swapstable)");
  }
  return out;
}

chorex::LpMode parse_mode(const std::string& name) {
  if (name == "unconstrained") return chorex::LpMode::Unconstrained;
  if (name == "prop") return chorex::LpMode::Proportional;
  if (name == "prop-swapef") return chorex::LpMode::ProportionalSwapEF;
  if (name == "prop-eps-swapef") return chorex::LpMode::ProportionalEpsSwapEF;
  if (name == "swap-stable") return chorex::LpMode::SwapStable;
  throw chorex::BadParams("unknown mode \"" + name + "\"");
}

Json fractions_to_json(const chorex::FractionMatrix& fr) {
  Json rows = Json::array();
  for (int i = 0; i < fr.n; ++i) {
    Json row = Json::array();
    for (int k = 0; k < fr.m; ++k) row.push_back(chorex::rational_str(fr.at(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json ledger_to_json(const chorex::QueryLedger& led) {
  Json evals = Json::array(), cuts = Json::array();
  for (int i = 0; i < led.n; ++i) {
    Json erow = Json::array(), crow = Json::array();
    for (int j = 0; j < led.n; ++j) {
      erow.push_back(led.eval_count(i, j));
      crow.push_back(led.cut_count(i, j));
    }
    evals.push_back(std::move(erow));
    cuts.push_back(std::move(crow));
  }
  Json doc;
  doc["evals"] = std::move(evals);
  doc["cuts"] = std::move(cuts);
  doc["total"] = led.total();
  return doc;
}

int run_check(const std::string& file_a, const std::string& file_b,
              const std::string& eps_text, const std::string& notions_csv,
              bool normalize, const Output& out) {
  Json doc_a = chorex::parse_doc(read_input(file_a));
  Json doc_b = chorex::parse_doc(read_input(file_b));
  // Either argument order; the documents say which is which.
  const Json* inst_doc = nullptr;
  const Json* alloc_doc = nullptr;
  for (const Json* d : {&doc_a, &doc_b}) {
    if (d->is_object() && d->contains("densities")) inst_doc = d;
    if (d->is_object() && d->contains("pieces")) alloc_doc = d;
  }
  if (!inst_doc || !alloc_doc || inst_doc == alloc_doc)
    throw chorex::SchemaError("need one instance document and one allocation document");

  std::vector<Rational> scales;
  auto policy = normalize ? chorex::Instance::Normalization::Rescale
                          : chorex::Instance::Normalization::Require;
  chorex::Instance inst = chorex::instance_from_json(*inst_doc, policy, &scales);
  chorex::Allocation alloc = chorex::allocation_from_json(*alloc_doc);
  Rational eps = chorex::parse_rational(eps_text);
  if (eps < 0) throw chorex::BadEps("eps must be >= 0");
  std::set<chorex::Notion> notions = parse_notions(notions_csv);

  chorex::ValidityReport validity = chorex::validate_allocation(inst, alloc);
  Json doc;
  doc["validity"] = chorex::validity_to_json(validity);
  if (normalize) doc["scales"] = scales_to_json(scales);
  if (!validity.dimension_ok) {
    out.emit(doc);
    return 1;
  }

  chorex::FairnessReport report = chorex::audit(inst, alloc, eps);
  doc["report"] = chorex::report_to_json(report);
  out.emit(doc);

  bool ok = validity.in_range && validity.disjoint && validity.complete;
  for (chorex::Notion x : notions) {
    if (x == chorex::Notion::Proportional) ok = ok && report.proportional.holds;
    if (x == chorex::Notion::SwapEF) ok = ok && report.swap_ef.holds;
    if (x == chorex::Notion::SwapStable) ok = ok && report.swap_stable.holds;
  }
  return ok ? 0 : 1;
}

int run_solve(const std::string& path, const std::string& mode_name,
              const std::string& eps_text, bool emit_lp, bool normalize,
              const Output& out) {
  std::vector<Rational> scales;
  chorex::Instance inst = load_instance(path, normalize, &scales);
  chorex::LpMode mode = parse_mode(mode_name);
  Rational eps = chorex::parse_rational(eps_text);

  if (emit_lp) {
    out.emit_text(chorex::lp_to_text(chorex::build_lp(inst, mode, eps)));
    return 0;
  }

  chorex::OptimalResult res = chorex::optimal_fair_allocation(inst, mode, eps);
  Json doc;
  doc["mode"] = mode_name;
  if (normalize) doc["scales"] = scales_to_json(scales);
  doc["objective"] = chorex::rational_str(res.objective);
  doc["fractions"] = fractions_to_json(res.fractions);
  doc["allocation"] = chorex::allocation_to_json(res.allocation);
  doc["report"] = chorex::report_to_json(res.report);
  out.emit(doc);
  return 0;
}

int run_protocol(const std::string& kind, const std::string& path,
                 bool normalize, const Output& out) {
  chorex::Instance inst = load_instance(path, normalize, nullptr);
  Json doc;
  doc["protocol"] = kind;
  chorex::Allocation alloc;
  if (kind == "two-agent") {
    doc["cut_point"] = chorex::rational_str(chorex::find_balance_point(inst));
    alloc = chorex::two_agent_protocol(inst);
  } else if (kind == "uniform") {
    alloc = chorex::uniform_allocation(inst);
  } else if (kind == "sandwich") {
    alloc = chorex::sandwich_allocation(inst);
  } else {
    throw chorex::BadParams("unknown protocol \"" + kind +
                            "\" (want two-agent, uniform, sandwich)");
  }
  chorex::FairnessReport report = chorex::audit(inst, alloc, 0);
  doc["allocation"] = chorex::allocation_to_json(alloc);
  doc["report"] = chorex::report_to_json(report);
  out.emit(doc);
  return report.all_hold() ? 0 : 1;
}

int run_gen_thm3(int n, const std::string& eps_text, const Output& out) {
  chorex::Instance inst =
      chorex::lower_bound_instance(n, chorex::parse_rational(eps_text));
  out.emit(chorex::instance_to_json(inst));
  return 0;
}

int run_gen_example(const std::string& id, int n, bool fixture, const Output& out) {
  chorex::PaperFixture fx = chorex::paper_example(id, n);
  if (!fixture) {
    out.emit(fx.instance_doc);
    return 0;
  }
  Json doc;
  doc["id"] = fx.id;
  doc["instance"] = fx.instance_doc;
  if (fx.allocation_doc) doc["allocation"] = *fx.allocation_doc;
  doc["expected"] = fx.expected;
  Json notes = Json::array();
  for (const std::string& s : fx.discrepancies) notes.push_back(s);
  doc["discrepancies"] = std::move(notes);
  out.emit(doc);
  return 0;
}

int run_approx(const std::string& path, const std::string& eps_text,
               const std::string& mode_name, double tolerance, const Output& out) {
  chorex::ApproxMode mode;
  if (mode_name == "prop")
    mode = chorex::ApproxMode::Prop;
  else if (mode_name == "swapef")
    mode = chorex::ApproxMode::SwapEf;
  else
    throw chorex::BadParams("unknown mode \"" + mode_name + "\" (want prop, swapef)");

  auto oracles = chorex::oracles_from_json(chorex::parse_doc(read_input(path)));
  Rational eps = chorex::parse_rational(eps_text);
  chorex::ApproxResult res = chorex::approx_optimal(oracles, eps, mode, tolerance);

  Json doc;
  doc["mode"] = mode_name;
  doc["eps"] = chorex::rational_str(eps);
  doc["cells"] = res.disc.subinterval_count;
  doc["grid_a"] = res.disc.grid.a;
  doc["band"] = chorex::rational_str(res.disc.band);
  doc["certified_gap"] = chorex::rational_str(res.disc.certified_gap);
  doc["allocation"] = chorex::allocation_to_json(res.allocation);
  doc["discrete_report"] = chorex::report_to_json(res.discrete_report);
  doc["lp_objective"] = chorex::rational_str(res.lp_objective);
  doc["bound"] = chorex::rational_str(res.bound);
  Json truth;
  truth["quadrature_cells"] = res.truth.quadrature_cells;
  truth["tolerance"] = res.truth.tolerance;
  truth["quadrature_bound"] = res.truth.quadrature_bound;
  Json vals = Json::array();
  for (double v : res.truth.values) vals.push_back(v);
  truth["values"] = std::move(vals);
  truth["social_cost"] = res.truth.social_cost;
  truth["proportional"] = res.truth.proportional;
  truth["swap_ef_checked"] = res.truth.swap_ef_checked;
  truth["swap_ef"] = res.truth.swap_ef;
  doc["truth"] = std::move(truth);
  doc["within_bound"] = res.within_bound;
  out.emit(doc);
  return res.truth.proportional && res.truth.swap_ef && res.within_bound ? 0 : 1;
}

int run_rw(const std::string& path, const std::string& trace_path,
           bool normalize, const Output& out) {
  chorex::Instance inst = load_instance(path, normalize, nullptr);
  std::string trace = read_input(trace_path);
  chorex::RwSession session(inst);

  Json answers = Json::array();
  std::istringstream lines(trace);
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string op;
    if (!(ls >> op) || op[0] == '#') continue;
    std::string si, sj, sx, slast;
    if (!(ls >> si >> sj >> sx >> slast))
      throw chorex::SchemaError("trace line " + std::to_string(lineno) +
                                ": want \"eval i j x y\" or \"cut i j x alpha\"");
    int i = 0, j = 0;
    try {
      i = std::stoi(si);
      j = std::stoi(sj);
    } catch (const std::exception&) {
      throw chorex::SchemaError("trace line " + std::to_string(lineno) +
                                ": agents must be integers");
    }
    Rational x = chorex::parse_rational(sx);
    Rational last = chorex::parse_rational(slast);
    Json entry;
    entry["line"] = lineno;
    entry["query"] = op;
    entry["i"] = i;
    entry["j"] = j;
    if (op == "eval") {
      entry["x"] = chorex::rational_str(x);
      entry["y"] = chorex::rational_str(last);
      entry["answer"] = chorex::rational_str(session.evaluate(i - 1, j - 1, x, last));
    } else if (op == "cut") {
      entry["x"] = chorex::rational_str(x);
      entry["alpha"] = chorex::rational_str(last);
      entry["answer"] = chorex::rational_str(session.cut(i - 1, j - 1, x, last));
    } else {
      throw chorex::SchemaError("trace line " + std::to_string(lineno) +
                                ": unknown query \"" + op + "\"");
    }
    answers.push_back(std::move(entry));
  }

  Json doc;
  doc["answers"] = std::move(answers);
  doc["ledger"] = ledger_to_json(session.ledger());
  out.emit(doc);
  return 0;
}

int run_search(const std::string& require_csv, const std::string& forbid_csv,
               int n, int m, int g, std::uint64_t seed, std::int64_t budget,
               const Output& out) {
  chorex::PropertySpec spec{parse_notions(require_csv), parse_notions(forbid_csv)};
  chorex::Witness w = chorex::search_counterexample(spec, n, m, g, seed, budget);
  Json doc;
  doc["seed"] = seed;
  doc["instances_sampled"] = w.instances_sampled;
  doc["examined"] = w.examined;
  doc["instance"] = chorex::instance_to_json(w.instance);
  doc["allocation"] = chorex::allocation_to_json(w.allocation);
  doc["report"] = chorex::report_to_json(chorex::audit(w.instance, w.allocation, 0));
  out.emit(doc);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fair chore division with externalities"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--quiet", out.quiet, "suppress stdout; exit code only");

  std::function<int()> action;

  // check
  {
    auto* sub = app.add_subcommand(
        "check", "audit an allocation against an instance (either file order)");
    auto file_a = std::make_shared<std::string>();
    auto file_b = std::make_shared<std::string>();
    auto eps = std::make_shared<std::string>("0");
    auto notions = std::make_shared<std::string>("prop,swapef,swapstable");
    auto normalize = std::make_shared<bool>(false);
    sub->add_option("files", *file_a, "instance or allocation document, - for stdin")
        ->required();
    sub->add_option("more", *file_b, "the other document")->required();
    sub->add_option("--eps", *eps, "slack for all checked notions (rational)");
    sub->add_option("--notions", *notions,
                    "comma-separated subset of prop,swapef,swapstable gating the exit code");
    sub->add_flag("--normalize", *normalize, "rescale rows to unit total, report scales");
    sub->callback([=, &action, &out] {
      action = [=, &out] {
        return run_check(*file_a, *file_b, *eps, *notions, *normalize, out);
      };
    });
  }

  // solve
  {
    auto* sub = app.add_subcommand("solve", "optimal fair allocation via the assignment LP");
    auto path = std::make_shared<std::string>();
    auto mode = std::make_shared<std::string>("prop-swapef");
    auto eps = std::make_shared<std::string>("0");
    auto emit_lp = std::make_shared<bool>(false);
    auto normalize = std::make_shared<bool>(false);
    sub->add_option("instance", *path, "instance document, - for stdin")->required();
    sub->add_option("--mode", *mode,
                    "unconstrained|prop|prop-swapef|prop-eps-swapef|swap-stable");
    sub->add_option("--eps", *eps, "slack for prop-eps-swapef (rational)");
    sub->add_flag("--emit-lp", *emit_lp, "print the LP rows as text instead of solving");
    sub->add_flag("--normalize", *normalize, "rescale rows to unit total");
    sub->callback([=, &action, &out] {
      action = [=, &out] {
        return run_solve(*path, *mode, *eps, *emit_lp, *normalize, out);
      };
    });
  }

  // protocol
  {
    auto* sub = app.add_subcommand("protocol", "run a constructive protocol");
    auto kind = std::make_shared<std::string>();
    auto path = std::make_shared<std::string>();
    auto normalize = std::make_shared<bool>(false);
    sub->add_option("kind", *kind, "two-agent|uniform|sandwich")->required();
    sub->add_option("instance", *path, "instance document, - for stdin")->required();
    sub->add_flag("--normalize", *normalize, "rescale rows to unit total");
    sub->callback([=, &action, &out] {
      action = [=, &out] { return run_protocol(*kind, *path, *normalize, out); };
    });
  }

  // gen
  {
    auto* sub = app.add_subcommand("gen", "generate instance documents");
    sub->require_subcommand(1);
    {
      auto* thm3 = sub->add_subcommand("thm3", "family with swap-envy gap 1/n - 1/(n(n-1))");
      auto n = std::make_shared<int>(3);
      auto eps = std::make_shared<std::string>("1/10");
      thm3->add_option("--n", *n, "agents (>= 3)");
      thm3->add_option("--eps", *eps, "off-diagonal mass in (0,1)");
      thm3->callback([=, &action, &out] {
        action = [=, &out] { return run_gen_thm3(*n, *eps, out); };
      });
    }
    {
      auto* ex = sub->add_subcommand("example", "built-in fixtures ex1..ex4, thm8");
      auto id = std::make_shared<std::string>();
      auto n = std::make_shared<int>(3);
      auto fixture = std::make_shared<bool>(false);
      ex->add_option("id", *id, "ex1|ex2|ex3|ex4|thm8")->required();
      ex->add_option("--n", *n, "agents for the ex1 family");
      ex->add_flag("--fixture", *fixture,
                   "emit the full fixture (instance, allocation, expected, notes)");
      ex->callback([=, &action, &out] {
        action = [=, &out] { return run_gen_example(*id, *n, *fixture, out); };
      });
    }
  }

  // approx
  {
    auto* sub = app.add_subcommand("approx", "discretize Lipschitz oracles and solve");
    auto path = std::make_shared<std::string>();
    auto eps = std::make_shared<std::string>();
    auto mode = std::make_shared<std::string>();
    auto tolerance = std::make_shared<double>(1e-6);
    sub->add_option("oracles", *path, "oracle-spec document, - for stdin")->required();
    sub->add_option("--eps", *eps, "target accuracy (rational)")->required();
    sub->add_option("--mode", *mode, "prop|swapef")->required();
    sub->add_option("--tolerance", *tolerance, "quadrature audit tolerance");
    sub->callback([=, &action, &out] {
      action = [=, &out] { return run_approx(*path, *eps, *mode, *tolerance, out); };
    });
  }

  // rw
  {
    auto* sub = app.add_subcommand("rw", "replay an evaluate/cut query trace");
    auto path = std::make_shared<std::string>();
    auto trace = std::make_shared<std::string>();
    auto normalize = std::make_shared<bool>(false);
    sub->add_option("instance", *path, "instance document, - for stdin")->required();
    sub->add_option("--trace", *trace,
                    "query script: one \"eval i j x y\" or \"cut i j x alpha\" per line, 1-based agents")
        ->required();
    sub->add_flag("--normalize", *normalize, "rescale rows to unit total");
    sub->callback([=, &action, &out] {
      action = [=, &out] { return run_rw(*path, *trace, *normalize, out); };
    });
  }

  // search
  {
    auto* sub = app.add_subcommand("search", "seeded counterexample search");
    auto require = std::make_shared<std::string>();
    auto forbid = std::make_shared<std::string>();
    auto n = std::make_shared<int>(2);
    auto m = std::make_shared<int>(2);
    auto g = std::make_shared<int>(1);
    auto seed = std::make_shared<std::uint64_t>(1);
    auto budget = std::make_shared<std::int64_t>(chorex::kSearchBudget);
    sub->add_option("--require", *require, "notions that must hold (comma-separated)");
    sub->add_option("--forbid", *forbid, "notions that must fail (comma-separated)");
    sub->add_option("--n", *n, "agents");
    sub->add_option("--m", *m, "intervals");
    sub->add_option("--g", *g, "cells per interval");
    sub->add_option("--seed", *seed, "generator seed");
    sub->add_option("--budget", *budget, "max allocations to examine");
    sub->callback([=, &action, &out] {
      action = [=, &out] {
        return run_search(*require, *forbid, *n, *m, *g, *seed, *budget, out);
      };
    });
  }

  for (CLI::App* s : app.get_subcommands(nullptr)) {
    s->fallthrough();
    for (CLI::App* t : s->get_subcommands(nullptr)) t->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const chorex::Error& e) {
    Json doc;
    doc["error"]["kind"] = e.kind();
    doc["error"]["message"] = e.what();
    std::cout << doc.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
