// Command-line surface for the oblivious Max-DiCut toolkit: exact graph
// oracles, ratio LPs, discretization sweeps, hard-instance synthesis, and
// the bound verifiers. Reports are JSON on stdout; exact rationals are
// rendered as strings next to 17-digit decimals.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dicut/hard_instance.hpp"
#include "dicut/io.hpp"
#include "dicut/lb_suite.hpp"
#include "dicut/ratio_lp.hpp"
#include "dicut/search.hpp"

using nlohmann::ordered_json;
using namespace dicut;

namespace {

ordered_json rat_json(const Rat& q) {
  return ordered_json{{"exact", rat_to_string(q)}, {"decimal", decimal17(rat_to_double(q))}};
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

LPMode parse_mode(const std::string& mode) {
  if (mode == "exact") return LPMode::ExactRational;
  if (mode == "float") return LPMode::Float;
  throw CLI::ValidationError("--mode", "must be 'exact' or 'float'");
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw CLI::ValidationError("--ells", "empty list");
  return out;
}

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(rat_from_string(item));
  }
  return out;
}

ordered_json report_json(const BoundReport& r) {
  ordered_json j;
  j["id"] = r.id;
  if (r.exact) j["value"] = rat_to_string(r.value);
  j["value_decimal"] = decimal17(r.value_decimal);
  j["target"] = r.target;
  j["direction"] = r.direction;
  if (r.direction == "~=") j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  if (!r.notes.empty()) j["notes"] = r.notes;
  ordered_json det = ordered_json::object();
  for (const auto& [k, v] : r.details) det[k] = v;
  if (!det.empty()) j["details"] = det;
  return j;
}

ordered_json audit_json(const FloatAudit& a) {
  return ordered_json{{"max_primal_residual", decimal17(a.max_primal_residual)},
                      {"dual_violation", decimal17(a.dual_violation)},
                      {"duality_gap", decimal17(a.duality_gap)},
                      {"dual_objective", decimal17(a.dual_objective)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"oblivious Max-DiCut approximation-ratio toolkit"};
  app.require_subcommand(1);

  // value <graph>
  std::string value_graph, value_method = "bruteforce", value_ordering;
  auto* cmd_value = app.add_subcommand("value", "exact Max-DiCut value of a graph file");
  cmd_value->add_option("graph", value_graph)->required();
  cmd_value->add_option("--method", value_method, "bruteforce or frontier_dp");
  cmd_value->add_option("--ordering", value_ordering,
                        "comma-separated vertex ordering (frontier_dp)");

  // eval <graph> <selection>
  std::string eval_graph, eval_selection;
  auto* cmd_eval = app.add_subcommand("eval", "expected oblivious cut value on a graph");
  cmd_eval->add_option("graph", eval_graph)->required();
  cmd_eval->add_option("selection", eval_selection)->required();

  // ratio <selection>
  std::string ratio_selection, ratio_mode = "float";
  auto* cmd_ratio = app.add_subcommand("ratio", "approximation ratio of a selection function");
  cmd_ratio->add_option("selection", ratio_selection)->required();
  cmd_ratio->add_option("--mode", ratio_mode, "exact or float");

  // sweep
  std::string sweep_b, sweep_ells, sweep_csv, sweep_mode = "float";
  auto* cmd_sweep = app.add_subcommand("sweep", "discretization-fineness sweep");
  cmd_sweep->add_option("--b", sweep_b, "sigmoid intercept (rational)")->required();
  cmd_sweep->add_option("--ells", sweep_ells, "comma-separated positive class counts")->required();
  cmd_sweep->add_option("--csv", sweep_csv, "write x,b,ratio rows to this file");
  cmd_sweep->add_option("--mode", sweep_mode);

  // search-intercept
  int si_ell = 51, si_iters = 20;
  std::string si_lo, si_hi, si_mode = "float";
  auto* cmd_si = app.add_subcommand("search-intercept", "ternary search over the intercept");
  cmd_si->add_option("--ell", si_ell)->required();
  cmd_si->add_option("--lo", si_lo)->required();
  cmd_si->add_option("--hi", si_hi)->required();
  cmd_si->add_option("--iters", si_iters)->required();
  cmd_si->add_option("--mode", si_mode);

  // find-hard
  std::string fh_biases, fh_family, fh_grid, fh_mode = "float", fh_out;
  auto* cmd_fh = app.add_subcommand("find-hard", "worst-case graph for a family of algorithms");
  cmd_fh->add_option("--biases", fh_biases, "comma-separated bias classes")->required();
  cmd_fh->add_option("--family", fh_family, "JSON file: array of probability vectors");
  cmd_fh->add_option("--grid", fh_grid, "antisymmetric grid step (e.g. 1/100)");
  cmd_fh->add_option("--mode", fh_mode);
  cmd_fh->add_option("--out", fh_out, "write the graph as TSV here");

  // verify
  std::string verify_id;
  auto* cmd_verify = app.add_subcommand("verify", "re-derive a bound (or 'all')");
  cmd_verify->add_option("bound", verify_id)->required();

  // instance
  std::string inst_name, inst_c, inst_out, inst_format = "tsv";
  auto* cmd_inst = app.add_subcommand("instance", "emit a named instance");
  cmd_inst->add_option("name", inst_name)->required();
  cmd_inst->add_option("--c", inst_c, "parameter c (rational)");
  cmd_inst->add_option("--out", inst_out, "write the graph to this path");
  cmd_inst->add_option("--format", inst_format, "tsv or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (*cmd_value) {
      WeightedDigraph g = load_graph(value_graph);
      OptMethod method;
      if (value_method == "bruteforce")
        method = OptMethod::Bruteforce;
      else if (value_method == "frontier_dp")
        method = OptMethod::FrontierDP;
      else
        throw std::invalid_argument("--method must be bruteforce or frontier_dp");
      std::vector<std::string> ordering;
      if (!value_ordering.empty()) {
        std::stringstream ss(value_ordering);
        std::string item;
        while (std::getline(ss, item, ',')) ordering.push_back(item);
      }
      OptResult opt = opt_value(g, method, ordering);
      ordered_json j;
      j["value"] = rat_json(opt.normalized);
      j["satisfied_weight"] = rat_json(Rat(opt.normalized * g.total_weight()));
      ordered_json bits = ordered_json::object();
      for (const auto& [v, bit] : opt.argmax.bits) bits[v] = bit;
      j["argmax"] = bits;
      emit(j);
    } else if (*cmd_eval) {
      WeightedDigraph g = load_graph(eval_graph);
      Selection s = load_selection(eval_selection);
      ExpectedValue ev = expected_value(g, s);
      ordered_json j;
      j["normalized"] = rat_json(ev.normalized);
      j["satisfied_weight"] = rat_json(ev.satisfied);
      emit(j);
    } else if (*cmd_ratio) {
      Selection s = load_selection(ratio_selection);
      AntisymPiecewise ap;
      if (const auto* pl = std::get_if<PLSigmoid>(&s))
        throw std::invalid_argument(
            "ratio needs a piecewise-constant selection; discretize the sigmoid first "
            "(b = " + rat_to_string(pl->b) + ")");
      ap = std::get<AntisymPiecewise>(s);
      RatioValue rv = compute_ratio(ap, parse_mode(ratio_mode));
      ordered_json j;
      j["value"] = rat_json(rv.value);
      if (rv.solution.audit) j["audit"] = audit_json(*rv.solution.audit);
      emit(j);
    } else if (*cmd_sweep) {
      auto rows =
          sweep_discretization(rat_from_string(sweep_b), parse_int_list(sweep_ells),
                               parse_mode(sweep_mode));
      ordered_json j = ordered_json::array();
      for (const auto& row : rows) {
        ordered_json rj;
        rj["x"] = row.x;
        rj["ell"] = row.ell;
        rj["b"] = rat_to_string(row.b);
        if (row.ok)
          rj["ratio"] = decimal17(row.ratio);
        else
          rj["error"] = row.error;
        j.push_back(rj);
      }
      if (!sweep_csv.empty()) {
        std::ofstream csv(sweep_csv, std::ios::binary);
        if (!csv) throw std::invalid_argument("cannot write '" + sweep_csv + "'");
        csv << "x,b,ratio\n";
        for (const auto& row : rows)
          if (row.ok)
            csv << row.x << "," << rat_to_string(row.b) << "," << decimal17(row.ratio) << "\n";
      }
      emit(j);
    } else if (*cmd_si) {
      auto res = search_intercept(si_ell, rat_from_string(si_lo), rat_from_string(si_hi),
                                  si_iters, parse_mode(si_mode));
      ordered_json j;
      j["best_b"] = rat_json(res.best_b);
      j["best_ratio"] = decimal17(res.best_ratio);
      ordered_json trace = ordered_json::array();
      for (const auto& [b, ratio] : res.trace)
        trace.push_back({{"b", rat_to_string(b)}, {"ratio", decimal17(ratio)}});
      j["trace"] = trace;
      emit(j);
    } else if (*cmd_fh) {
      HardInstanceSpec spec;
      spec.biases = parse_rat_list(fh_biases);
      if (!fh_family.empty()) {
        std::ifstream in(fh_family);
        if (!in) throw std::invalid_argument("cannot open '" + fh_family + "'");
        ordered_json fam = ordered_json::parse(in);
        for (const auto& vec : fam) {
          std::vector<Rat> p;
          for (const auto& v : vec)
            p.push_back(v.is_string() ? rat_from_string(v.get<std::string>())
                                      : rat_from_string(v.dump()));
          spec.family.push_back(std::move(p));
        }
      } else {
        Rat step = fh_grid.empty() ? Rat(1, 100) : rat_from_string(fh_grid);
        spec.family = antisym_family_grid(spec.biases, step);
      }
      HardGraphResult res = find_hard_graph(spec, parse_mode(fh_mode));
      ordered_json j;
      j["z_normalized"] = rat_json(res.minmax_normalized);
      j["lp_objective"] = rat_json(res.lp_objective);
      j["family_size"] = spec.family.size();
      j["argmax_p_index"] = res.argmax_p;
      j["weights_exact"] = res.weights_exact;
      j["graph"] = ordered_json::parse(format_graph(res.g, GraphFormat::Json));
      if (!fh_out.empty()) save_graph(res.g, fh_out, GraphFormat::Tsv);
      emit(j);
    } else if (*cmd_verify) {
      std::vector<BoundReport> reports;
      if (verify_id == "all")
        reports = verify_all_bounds();
      else
        reports.push_back(verify_bound(parse_bound_id(verify_id)));
      ordered_json j = reports.size() == 1 ? report_json(reports[0]) : ordered_json::array();
      if (reports.size() > 1)
        for (const auto& r : reports) j.push_back(report_json(r));
      emit(j);
      for (const auto& r : reports)
        if (!r.pass) return 1;
    } else if (*cmd_inst) {
      Rat c;
      const Rat* cp = nullptr;
      if (!inst_c.empty()) {
        c = rat_from_string(inst_c);
        cp = &c;
      }
      NamedInstance inst = named_instance(inst_name, cp);
      ordered_json j;
      j["name"] = inst_name;
      j["vertices"] = inst.g.num_vertices();
      j["total_weight"] = rat_json(inst.g.total_weight());
      j["reference_cut_weight"] = rat_json(cut_value(inst.g, inst.reference).satisfied);
      ordered_json bits = ordered_json::object();
      for (const auto& [v, bit] : inst.reference.bits) bits[v] = bit;
      j["reference"] = bits;
      if (!inst_out.empty()) {
        GraphFormat fmt = inst_format == "json" ? GraphFormat::Json : GraphFormat::Tsv;
        save_graph(inst.g, inst_out, fmt);
        j["out"] = inst_out;
      } else {
        j["graph"] = ordered_json::parse(format_graph(inst.g, GraphFormat::Json));
      }
      emit(j);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
