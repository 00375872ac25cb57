#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "taukit/endo.hpp"
#include "taukit/enumerate.hpp"
#include "taukit/formats.hpp"
#include "taukit/homology.hpp"
#include "taukit/presentation.hpp"
#include "taukit/report.hpp"
#include "taukit/tautilt.hpp"
#include "taukit/tilting.hpp"

using namespace taukit;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

AlgebraPtr load_algebra(const std::string& path, long field_p) {
  AlgebraPtr a = read_algebra_file(path);
  if (field_p > 0 && (a->field.is_rational() || a->field.p != field_p))
    a = reinterpret_over_field(a, Field::prime(field_p));
  return a;
}

// parse against the given instance so all modules share one algebra pointer
AModule load_module(const std::string& path, const AlgebraPtr& a) {
  return parse_module_text(slurp(path), a);
}

std::vector<int> parse_caps(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

// catalog of indecomposables: enumerate over a prime field, and when the
// algebra itself is rational carry the representatives back
std::vector<AModule> full_catalog(const AlgebraPtr& a, const std::vector<int>& caps,
                                  unsigned long budget, long field_p) {
  AlgebraPtr enum_alg = a;
  if (a->field.is_rational()) enum_alg = reinterpret_over_field(a, Field::prime(field_p > 0 ? field_p : 2));
  EnumerationBound b;
  b.caps = caps;
  if (budget > 0) b.budget = budget;
  auto cat = enumerate_indecomposables(enum_alg, b);
  if (enum_alg.get() != a.get()) cat = transfer_catalog(cat, a);
  return cat;
}

int finish_dim(const HomDim& d) {
  std::cout << d.str() << "\n";
  return d.kind == HomDim::Kind::Unknown ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for basic algebras given by quivers with relations"};
  app.require_subcommand(1);

  std::string alg_path, mod_path, out_path, dot_path, caps_str, only, out_dir;
  std::vector<std::string> mod_list;
  long field_p = 0;
  int cutoff = -1, threads = 1;
  unsigned long budget = 0;

  auto add_common = [&](CLI::App* c, bool need_alg) {
    auto* a = c->add_option("-A,--algebra", alg_path, "algebra file");
    if (need_alg) a->required();
    c->add_option("--field", field_p, "reinterpret over the prime field F_p");
  };

  auto* check = app.add_subcommand("check", "test a module property");
  std::string kind;
  check->add_option("kind", kind, "tau-rigid | tau-tilting | tilting | cotilting")->required();
  add_common(check, true);
  check->add_option("-M,--module", mod_path, "module file")->required();

  auto* tau_cmd = app.add_subcommand("tau", "Auslander-Reiten translate");
  add_common(tau_cmd, true);
  tau_cmd->add_option("-M,--module", mod_path, "module file")->required();
  tau_cmd->add_option("--out", out_path, "write the result as a module file");

  auto* taui_cmd = app.add_subcommand("tau-inv", "inverse Auslander-Reiten translate");
  add_common(taui_cmd, true);
  taui_cmd->add_option("-M,--module", mod_path, "module file")->required();
  taui_cmd->add_option("--out", out_path, "write the result as a module file");

  auto* stt = app.add_subcommand("stt-quiver", "support tau-tilting Hasse quiver");
  add_common(stt, true);
  stt->add_option("--dot", dot_path, "write the quiver in DOT format");
  stt->add_option("--caps", caps_str, "per-vertex dimension caps, comma separated");
  stt->add_option("--budget", budget, "enumeration budget");

  auto* gor = app.add_subcommand("gorenstein", "self-injective dimensions");
  add_common(gor, true);
  gor->add_option("--cutoff", cutoff, "resolution cutoff");

  auto* endo = app.add_subcommand("endo", "endomorphism algebra of a direct sum");
  add_common(endo, true);
  endo->add_option("-T,--summands", mod_list, "module files of the summands")->required();
  endo->add_option("--out", out_path, "write a recovered presentation as an algebra file");

  auto* pd = app.add_subcommand("pd", "projective dimension");
  add_common(pd, true);
  pd->add_option("-M,--module", mod_path, "module file")->required();
  pd->add_option("--cutoff", cutoff, "resolution cutoff");

  auto* idc = app.add_subcommand("id", "injective dimension");
  add_common(idc, true);
  idc->add_option("-M,--module", mod_path, "module file")->required();
  idc->add_option("--cutoff", cutoff, "resolution cutoff");

  auto* gld = app.add_subcommand("gldim", "global dimension");
  add_common(gld, true);
  gld->add_option("--cutoff", cutoff, "resolution cutoff");

  auto* en = app.add_subcommand("enumerate", "complete catalog of indecomposables");
  add_common(en, true);
  en->add_option("--caps", caps_str, "per-vertex dimension caps, comma separated");
  en->add_option("--budget", budget, "candidate budget");
  en->add_option("--out-dir", out_dir, "write one module file per member plus an index");

  auto* verify = app.add_subcommand("verify", "run the scenario batteries");
  std::string what;
  verify->add_option("what", what, "battery name: paper")->required();
  verify->add_option("--only", only, "run a single scenario");
  verify->add_option("--threads", threads, "worker threads");
  verify->add_option("--dot", dot_path, "file for graph output of scenarios that draw one");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) {
      auto a = load_algebra(alg_path, field_p);
      auto m = load_module(mod_path, a);
      bool ok;
      if (kind == "tau-rigid")
        ok = is_tau_rigid(m);
      else if (kind == "tau-tilting")
        ok = is_tau_tilting(m);
      else if (kind == "tilting")
        ok = is_classical_tilting(m);
      else if (kind == "cotilting")
        ok = is_classical_cotilting(m);
      else
        throw std::runtime_error("unknown property: " + kind);
      std::cout << (ok ? "true" : "false") << "\n";
      return ok ? 0 : 1;
    }

    if (tau_cmd->parsed() || taui_cmd->parsed()) {
      auto a = load_algebra(alg_path, field_p);
      auto m = load_module(mod_path, a);
      AModule t = tau_cmd->parsed() ? tau(m) : tau_inv(m);
      std::string text = print_module_text(t, alg_path);
      if (!out_path.empty())
        spill(out_path, text);
      else
        std::cout << text;
      return 0;
    }

    if (stt->parsed()) {
      auto a = load_algebra(alg_path, field_p);
      std::vector<int> caps = caps_str.empty() ? std::vector<int>{} : parse_caps(caps_str);
      auto cat = full_catalog(a, caps, budget, field_p);
      auto rigid = indec_tau_rigid_catalog(a, cat);
      auto pairs = stt_pairs(a, rigid);
      auto q = stt_hasse_quiver(a, pairs);
      std::cout << "indecomposables " << cat.size() << "\n";
      std::cout << "tau-rigid " << rigid.size() << "\n";
      std::cout << "pairs " << q.pairs.size() << "\n";
      std::cout << "edges " << q.edges.size() << "\n";
      if (!dot_path.empty()) spill(dot_path, stt_dot(q));
      return 0;
    }

    if (gor->parsed()) {
      auto a = load_algebra(alg_path, field_p);
      auto r = selfinjective_dims(a, cutoff);
      std::cout << "right id " << r.right_id.str() << "\n";
      std::cout << "left id " << r.left_id.str() << "\n";
      std::cout << "gorenstein " << (r.gorenstein ? "true" : "false") << "\n";
      if (r.right_id.kind == HomDim::Kind::Unknown || r.left_id.kind == HomDim::Kind::Unknown)
        return 2;
      return 0;
    }

    if (endo->parsed()) {
      auto a = load_algebra(alg_path, field_p);
      std::vector<AModule> parts;
      for (const auto& p : mod_list)
        for (auto& s : decompose(load_module(p, a))) parts.push_back(std::move(s));
      auto e = endomorphism_algebra(parts);
      std::cout << "dim " << e.algebra->dim << "\n";
      auto qp = recover_presentation(e.algebra);
      if (qp)
        std::cout << print_algebra_text(*qp);
      else
        std::cout << "presentation not recovered\n";
      if (!out_path.empty()) {
        if (!qp) throw std::runtime_error("no presentation to write");
        spill(out_path, print_algebra_text(*qp));
      }
      return 0;
    }

    if (pd->parsed() || idc->parsed()) {
      auto a = load_algebra(alg_path, field_p);
      auto m = load_module(mod_path, a);
      return finish_dim(pd->parsed() ? pd_module(m, cutoff) : id_module(m, cutoff));
    }
    if (gld->parsed()) return finish_dim(gl_dim(load_algebra(alg_path, field_p), cutoff));

    if (en->parsed()) {
      auto a = load_algebra(alg_path, field_p);
      if (a->field.is_rational()) a = reinterpret_over_field(a, Field::prime(field_p > 0 ? field_p : 2));
      EnumerationBound b;
      if (!caps_str.empty()) b.caps = parse_caps(caps_str);
      if (budget > 0) b.budget = budget;
      auto cat = enumerate_indecomposables(a, b);
      std::cout << "count " << cat.size() << "\n";
      std::string index;
      for (size_t i = 0; i < cat.size(); ++i) {
        std::string dims;
        for (size_t v = 0; v < cat[i].dims.size(); ++v)
          dims += (v ? "," : "") + std::to_string(cat[i].dims[v]);
        std::cout << "dims " << dims << "\n";
        if (!out_dir.empty()) {
          char name[32];
          std::snprintf(name, sizeof name, "m%04zu.mod", i + 1);
          spill(out_dir + "/" + name, print_module_text(cat[i], alg_path));
          index += std::string(name) + "\t" + dims + "\n";
        }
      }
      if (!out_dir.empty()) spill(out_dir + "/index.txt", index);
      return 0;
    }

    if (verify->parsed()) {
      if (what != "paper") throw std::runtime_error("unknown battery: " + what);
      std::vector<Report> reports;
      if (only.empty()) {
        reports = run_all_scenarios(threads);
      } else {
        reports.push_back(run_scenario(only));
      }
      std::cout << serialize_reports(reports);
      for (const auto& r : reports) {
        std::string dot = scenario_dot(r.scenario);
        if (dot.empty()) continue;
        std::string path = dot_path.empty() ? r.scenario + ".dot" : dot_path;
        spill(path, dot);
      }
      bool fail = false, unknown = false;
      for (const auto& r : reports)
        for (const auto& l : r.lines) {
          if (l.verdict == Verdict::Fail) fail = true;
          if (l.verdict == Verdict::Unknown) unknown = true;
        }
      if (fail) return 1;
      if (unknown) return 2;
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
