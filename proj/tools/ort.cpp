// Command-line front end: one subcommand per module, seeded and
// deterministic. Exit codes: 0 success, 1 falsified property, 2 usage error.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ort/constructions.hpp"
#include "ort/core.hpp"
#include "ort/density.hpp"
#include "ort/io.hpp"
#include "ort/lll.hpp"
#include "ort/ramsey.hpp"
#include "ort/scan.hpp"
#include "ort/shift.hpp"

using nlohmann::json;

namespace {

struct RunState {
  std::string out_path;
  std::string report;
  int exit_code = 0;
};

void emit(RunState& st) {
  if (st.out_path.empty()) {
    std::cout << st.report;
    return;
  }
  std::ofstream out(st.out_path, std::ios::binary);
  if (!out) throw ort::ParseError("cannot open output file: " + st.out_path);
  out << st.report;
}

json graph_json(const ort::OrderedGraph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.num_vertices()}, {"edges", edges}};
}

json interval_json(std::pair<int, int> r) { return {r.first, r.second}; }

json layout_json(const ort::BipartiteGridLayout& lay) {
  json i = json::array(), j = json::array();
  for (int k = 1; k <= lay.t; ++k) {
    i.push_back(interval_json(lay.I(k)));
    j.push_back(interval_json(lay.J(k)));
  }
  return {{"t", lay.t}, {"I", i}, {"J", j}};
}

json layout_json(const ort::BlockLayout& lay) {
  json classes = json::array(), blocks = json::array(), superblocks = json::array();
  for (int i = 1; i <= lay.k; ++i) {
    classes.push_back(interval_json(lay.class_range(i)));
    json row = json::array();
    for (int l = 1; l <= lay.blocks_per_class(); ++l)
      row.push_back(interval_json(lay.block_range(i, l)));
    blocks.push_back(row);
    for (int j = 1; j <= lay.k; ++j) {
      if (j == i) continue;
      json ranges = json::array();
      for (auto r : lay.superblock(i, j)) ranges.push_back(interval_json(r));
      superblocks.push_back({{"i", i}, {"j", j}, {"blocks", ranges}});
    }
  }
  return {{"k", lay.k},
          {"t", lay.t},
          {"classes", classes},
          {"blocks", blocks},
          {"superblocks", superblocks}};
}

json witness_json(const ort::IntervalWitness& w) {
  return {{"first", interval_json(w.first_interval)},
          {"second", interval_json(w.second_interval)},
          {"count", w.count}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void add_bound(CLI::App& app, RunState& st) {
  auto* cmd = app.add_subcommand("bound", "Trichotomy threshold ceil(4n(sqrt(n*ell)+1))");
  auto n = std::make_shared<long long>(0);
  auto ell = std::make_shared<long long>(0);
  auto format = std::make_shared<std::string>("text");
  cmd->add_option("--n", *n, "matching half-size")->required();
  cmd->add_option("--ell", *ell, "shift statistic bound")->required();
  cmd->add_option("--format", *format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->callback([&st, n, ell, format] {
    const long long b = ort::theorem5_bound(*n, *ell);
    if (*format == "json")
      st.report = dump({{"schema", 1}, {"n", *n}, {"ell", *ell}, {"bound", b}});
    else
      st.report = std::to_string(b) + "\n";
  });
}

void add_construct(CLI::App& app, RunState& st) {
  auto* cmd = app.add_subcommand("construct", "Emit the explicit matchings");
  cmd->require_subcommand(1);

  auto t = std::make_shared<int>(2);
  auto k = std::make_shared<int>(3);
  auto format = std::make_shared<std::string>("og");

  auto* mt = cmd->add_subcommand("m-t", "Bipartite grid matching on 2t^2 vertices");
  mt->add_option("--t", *t, "interval length")->required();
  mt->add_option("--format", *format, "og|json")->check(CLI::IsMember({"og", "json"}));
  mt->callback([&st, t, format] {
    const ort::MtResult r = ort::build_M_t(*t);
    if (*format == "json")
      st.report = dump({{"schema", 1},
                        {"matching", graph_json(r.matching.graph())},
                        {"layout", layout_json(r.layout)}});
    else
      st.report = ort::format_ordered_graph(r.matching.graph());
  });

  auto* mkt = cmd->add_subcommand("m-kt", "k-class block matching on k(k-1)t^2 vertices");
  mkt->add_option("--k", *k, "interval chromatic number target")->required();
  mkt->add_option("--t", *t, "block length")->required();
  mkt->add_option("--format", *format, "og|json")->check(CLI::IsMember({"og", "json"}));
  mkt->callback([&st, k, t, format] {
    const ort::MktResult r = ort::build_M_kt(*k, *t);
    if (*format == "json")
      st.report = dump({{"schema", 1},
                        {"matching", graph_json(r.matching.graph())},
                        {"layout", layout_json(r.layout)}});
    else
      st.report = ort::format_ordered_graph(r.matching.graph());
  });
}

void add_verify(CLI::App& app, RunState& st) {
  auto* cmd = app.add_subcommand("verify", "Checkers for constructions and certificates");
  cmd->require_subcommand(1);

  auto t = std::make_shared<int>(2);
  auto k = std::make_shared<int>(3);
  auto threshold = std::make_shared<int>(0);

  auto* mtd = cmd->add_subcommand("mt-density", "Interval density of the grid matching");
  mtd->add_option("--t", *t, "grid parameter")->required();
  mtd->add_option("--threshold", *threshold, "interval length floor (default 2t)");
  mtd->callback([&st, t, threshold] {
    const auto r = ort::verify_M_t_density(
        *t, *threshold > 0 ? std::optional<int>(*threshold) : std::nullopt);
    json rep{{"schema", 1}, {"t", *t}, {"threshold", r.threshold}, {"ok", r.ok}};
    if (r.witness)
      rep["witness"] = {interval_json(r.witness->first), interval_json(r.witness->second)};
    st.report = dump(rep);
    if (!r.ok) st.exit_code = 1;
  });

  auto* blk = cmd->add_subcommand("blocks", "Cross-class density of the block matching");
  blk->add_option("--k", *k)->required();
  blk->add_option("--t", *t)->required();
  blk->callback([&st, k, t] {
    const auto r = ort::verify_lemma6(*k, *t);
    st.report = dump({{"schema", 1},
                      {"k", *k},
                      {"t", *t},
                      {"part_a", r.part_a},
                      {"part_a_vacuous", r.part_a_vacuous},
                      {"part_b", r.part_b},
                      {"max_small_pair_edges", r.max_small_pair_edges},
                      {"part_b_cap", r.part_b_cap}});
    if (!r.part_a || !r.part_b) st.exit_code = 1;
  });

  auto file = std::make_shared<std::string>();
  auto* match = cmd->add_subcommand("matching", "Perfect-bipartite check + permutation");
  match->add_option("--file", *file, "ordered-graph file")->required();
  match->callback([&st, file] {
    const ort::OrderedMatching m{ort::load_ordered_graph(*file)};
    json rep{{"schema", 1},
             {"n_vertices", m.num_vertices()},
             {"perfect_bipartite", m.is_perfect_bipartite()}};
    if (m.is_perfect_bipartite())
      rep["permutation"] = ort::permutation_from_matching(m).images();
    st.report = dump(rep);
    if (!m.is_perfect_bipartite()) st.exit_code = 1;
  });

  auto* chi = cmd->add_subcommand("chi", "Interval chromatic number with witness");
  chi->add_option("--file", *file, "ordered-graph file")->required();
  chi->callback([&st, file] {
    const auto r = ort::interval_chromatic_number(ort::load_ordered_graph(*file));
    st.report = dump({{"schema", 1}, {"chi", r.chi}, {"interval_ends", r.partition.ends}});
  });

  auto cert = std::make_shared<std::string>();
  auto red = std::make_shared<std::string>();
  auto blue = std::make_shared<std::string>();
  auto* col = cmd->add_subcommand("coloring", "Good-coloring certificate recheck");
  col->add_option("--file", *cert, "edge-coloring certificate")->required();
  col->add_option("--red", *red, "red pattern (.og)")->required();
  col->add_option("--blue", *blue, "blue pattern (.og)")->required();
  col->callback([&st, cert, red, blue] {
    const auto chi = ort::EdgeColoring::from_text(ort::load_file(*cert));
    const bool good = ort::certificate_is_good(chi, ort::load_ordered_graph(*red),
                                               ort::load_ordered_graph(*blue));
    st.report = dump({{"schema", 1}, {"n", chi.num_vertices()}, {"good", good}});
    if (!good) st.exit_code = 1;
  });

  auto ell = std::make_shared<long long>(0);
  auto* sc = cmd->add_subcommand("scan-cert", "Trichotomy check of one coloring");
  sc->add_option("--coloring", *cert, "edge-coloring file")->required();
  sc->add_option("--matching", *file, "perfect-bipartite matching (.og)")->required();
  sc->add_option("--ell", *ell, "shift statistic bound")->required();
  sc->callback([&st, cert, file, ell] {
    const auto chi = ort::EdgeColoring::from_text(ort::load_file(*cert));
    const ort::OrderedMatching m{ort::load_ordered_graph(*file)};
    const auto r = ort::scan_certificate_check(chi, m, *ell);
    static const char* names[] = {"blue-triangle", "red-clique", "red-matching-copy",
                                  "counterexample"};
    st.report = dump({{"schema", 1},
                      {"verdict", names[static_cast<int>(r.verdict)]},
                      {"precondition_ok", r.precondition_ok},
                      {"witness", r.witness}});
    if (r.verdict == ort::ScanVerdict::BoundViolatedCounterexample) st.exit_code = 1;
  });
}

void add_lstat(CLI::App& app, RunState& st) {
  auto* cmd = app.add_subcommand("lstat", "Shift statistic L and its distribution");
  auto pi_file = std::make_shared<std::string>();
  auto n = std::make_shared<int>(0);
  auto samples = std::make_shared<long long>(1000);
  auto seed = std::make_shared<std::uint64_t>(0);
  auto enumerate = std::make_shared<bool>(false);
  auto format = std::make_shared<std::string>("json");
  cmd->add_option("--pi", *pi_file, "permutation file: report L and a witness");
  cmd->add_option("--n", *n, "distribution mode: permutation length");
  cmd->add_option("--samples", *samples, "trials for the sampled distribution");
  cmd->add_option("--seed", *seed, "rng seed (default 0)");
  cmd->add_flag("--enumerate", *enumerate, "exact distribution over all of S_n");
  cmd->add_option("--format", *format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  cmd->callback([&st, pi_file, n, samples, seed, enumerate, format] {
    if (!pi_file->empty()) {
      const ort::Permutation pi = ort::load_permutation(*pi_file);
      const ort::ShiftResult r = ort::shift_statistic(pi);
      st.report = dump({{"schema", 1},
                        {"n", pi.size()},
                        {"l", r.l},
                        {"witness",
                         {{"delta", r.witness.delta},
                          {"c", r.witness.c_indices},
                          {"d", r.witness.d_indices}}}});
      return;
    }
    if (*n <= 0) throw CLI::ValidationError("lstat", "need --pi or --n");
    const ort::LDistribution d = *enumerate ? ort::enumerate_L_distribution(*n)
                                            : ort::sample_L_distribution(*n, *samples, *seed);
    if (*format == "csv") {
      std::ostringstream csv;
      csv << "value,count\n";
      for (const auto& [v, c] : d.histogram) csv << v << "," << c << "\n";
      st.report = csv.str();
      return;
    }
    json hist = json::object();
    for (const auto& [v, c] : d.histogram) hist[std::to_string(v)] = c;
    st.report = dump({{"schema", 1},
                      {"n", d.n},
                      {"samples", d.samples},
                      {"seed", d.seed},
                      {"exhaustive", d.exhaustive},
                      {"histogram", hist},
                      {"threshold", d.threshold},
                      {"exceedance_rate", d.exceedance_rate},
                      {"mean", d.mean},
                      {"max", d.max}});
  });
}

void add_scan(CLI::App& app, RunState& st) {
  auto* cmd = app.add_subcommand("scan", "Multi-thread scan of a red/blue matrix");
  auto matrix = std::make_shared<std::string>();
  auto pi_file = std::make_shared<std::string>();
  auto threads = std::make_shared<int>(0);
  cmd->add_option("--matrix", *matrix, "R/B grid file")->required();
  cmd->add_option("--pi", *pi_file, "permutation file")->required();
  cmd->add_option("--threads", *threads, "thread count (default ceil(sqrt(n/L)))");
  cmd->callback([&st, matrix, pi_file, threads] {
    const ort::ColorMatrix a = ort::ColorMatrix::from_text(ort::load_file(*matrix));
    const ort::Permutation pi = ort::load_permutation(*pi_file);
    int t = *threads;
    if (t <= 0) {
      const long long ell = std::max(1, ort::shift_statistic(pi).l);
      t = ort::default_thread_count(pi.size(), ell);
      t = std::min(t, a.size() - pi.size() + 1);
      t = std::max(t, 1);
    }
    const ort::ScanTrace trace = ort::multi_thread_scan(a, pi, t);
    json threads_json = json::array();
    for (const auto& out : trace.threads) {
      json o{{"thread", out.thread},
             {"success", out.success},
             {"revealed_blue", out.revealed_blue}};
      if (out.success) {
        json emb = json::array();
        for (auto [r, c] : out.embedding) emb.push_back({r, c});
        o["embedding"] = emb;
      } else {
        json segs = json::array();
        for (const auto& s : out.segments)
          segs.push_back({{"row", s.row}, {"cols", {s.col_begin, s.col_end}}});
        o["segments"] = segs;
      }
      threads_json.push_back(o);
    }
    st.report =
        dump({{"schema", 1}, {"n", trace.n}, {"threads", threads_json}});
  });
}

void add_exact(CLI::App& app, RunState& st) {
  auto* cmd = app.add_subcommand("exact", "Smallest N with the arrowing property");
  auto red = std::make_shared<std::string>();
  auto blue = std::make_shared<std::string>();
  auto nmax = std::make_shared<int>(0);
  auto budget = std::make_shared<std::uint64_t>(ort::kDefaultNodeBudget);
  auto specialize = std::make_shared<bool>(false);
  auto cert_out = std::make_shared<std::string>();
  auto format = std::make_shared<std::string>("text");
  cmd->add_option("--red", *red, "red pattern (.og)")->required();
  cmd->add_option("--blue", *blue, "blue pattern (.og)")->required();
  cmd->add_option("--nmax", *nmax, "search ceiling")->required();
  cmd->add_option("--budget", *budget, "search node budget");
  cmd->add_flag("--specialize-triangle", *specialize,
                "use the triangle-free blue search (blue pattern must be K_3)");
  cmd->add_option("--cert-out", *cert_out, "write the last good coloring here");
  cmd->add_option("--format", *format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->callback([&st, red, blue, nmax, budget, specialize, cert_out, format] {
    const ort::OrderedGraph g = ort::load_ordered_graph(*red);
    const ort::OrderedGraph h = ort::load_ordered_graph(*blue);
    const ort::RamseyResult r = ort::ordered_ramsey(g, h, *nmax, *budget, *specialize);
    if (!cert_out->empty() && r.certificate) {
      std::ofstream out(*cert_out, std::ios::binary);
      out << r.certificate->to_text();
    }
    if (*format == "json") {
      json rep{{"schema", 1},
               {"known", r.known},
               {"budget_hit", r.budget_hit},
               {"n_max", r.n_max},
               {"nodes_explored", r.nodes_explored}};
      if (r.known) rep["value"] = r.value;
      st.report = dump(rep);
    } else {
      st.report = r.known ? std::to_string(r.value) + "\n"
                          : std::string(r.budget_hit ? "budget-exceeded\n" : "unknown\n");
    }
  });
}

ort::LLLParams parse_params(const std::string& a, const std::string& b, const std::string& g,
                            const std::string& d) {
  return {ort::Rational::parse(a), ort::Rational::parse(b), ort::Rational::parse(g),
          ort::Rational::parse(d)};
}

void add_lll(CLI::App& app, RunState& st) {
  auto* cmd = app.add_subcommand("lll", "Local-lemma parameter audit and sampling");
  cmd->require_subcommand(1);
  auto alpha = std::make_shared<std::string>("3/4");
  auto beta = std::make_shared<std::string>("1/2");
  auto gamma = std::make_shared<std::string>("1/4");
  auto delta = std::make_shared<std::string>("0");

  const auto add_params = [&](CLI::App* sub) {
    sub->add_option("--alpha", *alpha, "rational, e.g. 3/4");
    sub->add_option("--beta", *beta);
    sub->add_option("--gamma", *gamma);
    sub->add_option("--delta", *delta);
  };

  auto* check = cmd->add_subcommand("check", "Exact parameter inequalities");
  add_params(check);
  check->callback([&st, alpha, beta, gamma, delta] {
    const auto p = parse_params(*alpha, *beta, *gamma, *delta);
    const auto r = ort::check_param_inequalities(p);
    st.report = dump({{"schema", 1},
                      {"params",
                       {{"alpha", p.alpha.str()},
                        {"beta", p.beta.str()},
                        {"gamma", p.gamma.str()},
                        {"delta", p.delta.str()}}},
                      {"ok", r.ok},
                      {"violated", r.violated}});
  });

  auto n = std::make_shared<double>(1e6);
  auto* audit = cmd->add_subcommand("audit", "Signed margins of the three conditions");
  add_params(audit);
  audit->add_option("--n", *n, "evaluation scale");
  audit->callback([&st, alpha, beta, gamma, delta, n] {
    const auto p = parse_params(*alpha, *beta, *gamma, *delta);
    const auto rep = ort::audit_lll_conditions(p, *n);
    const auto w = ort::lll_weights(p, *n);
    const auto cross = ort::crossover_scan(p);
    json out{{"schema", 1},
             {"params",
              {{"alpha", p.alpha.str()},
               {"beta", p.beta.str()},
               {"gamma", p.gamma.str()},
               {"delta", p.delta.str()}}},
             {"n", *n},
             {"margins", {{"P", rep.margin_p}, {"Q", rep.margin_q}, {"R", rep.margin_r}}},
             {"o1", rep.o1},
             {"weights_log", {{"x", w.log_x}, {"y", w.log_y}, {"z", w.log_z}}}};
    if (cross.found) {
      out["crossover_n"] = cross.crossover_n;
      out["monotone_after_crossover"] = cross.monotone_after_crossover;
    }
    st.report = dump(out);
  });

  auto v = std::make_shared<int>(50);
  auto gamma_scale = std::make_shared<double>(std::pow(50.0, 0.25));
  auto seed = std::make_shared<std::uint64_t>(0);
  auto s = std::make_shared<int>(2);
  auto* sample = cmd->add_subcommand("sample", "Random coloring + bad-event census");
  sample->add_option("--v", *v, "vertex count");
  sample->add_option("--gamma-scale", *gamma_scale, "n^gamma; blue probability 1/(2 scale)");
  sample->add_option("--seed", *seed);
  sample->add_option("--s", *s, "red K_{s,s} census size");
  sample->callback([&st, v, gamma_scale, seed, s] {
    const ort::LLLSample smp = ort::sample_lll_coloring(*v, *gamma_scale, *seed, *s);
    const auto& c = smp.census;
    st.report = dump({{"schema", 1},
                      {"v", c.v},
                      {"seed", *seed},
                      {"blue_prob", c.blue_prob},
                      {"blue_edges", c.blue_edges},
                      {"blue_triangles", c.blue_triangles},
                      {"s", c.s},
                      {"red_kss_exact", c.red_kss_exact},
                      {"red_kss", c.red_kss},
                      {"red_kss_stderr", c.red_kss_stderr}});
  });
}

void add_density(CLI::App& app, RunState& st) {
  auto* cmd = app.add_subcommand("density", "Interval density of random matchings");
  auto n = std::make_shared<int>(0);
  auto samples = std::make_shared<long long>(200);
  auto seed = std::make_shared<std::uint64_t>(0);
  auto enumerate = std::make_shared<bool>(false);
  auto natural_log = std::make_shared<bool>(false);
  auto format = std::make_shared<std::string>("json");
  cmd->add_option("--n", *n, "matching half-size")->required();
  cmd->add_option("--samples", *samples);
  cmd->add_option("--seed", *seed);
  cmd->add_flag("--enumerate", *enumerate, "all of S_n instead of sampling (n <= 8)");
  cmd->add_flag("--natural-log", *natural_log, "natural-log thresholds (default base 2)");
  cmd->add_option("--format", *format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  cmd->callback([&st, n, samples, seed, enumerate, natural_log, format] {
    const ort::DensityReport rep = *enumerate
                                       ? ort::enumerate_density_experiment(*n, *natural_log)
                                       : ort::run_density_experiment(*n, *samples, *seed,
                                                                     *natural_log);
    if (*format == "csv") {
      std::ostringstream csv;
      csv << "sample_id,prop1_ok,prop2_ok,worst_min_cross,worst_excess\n";
      for (const auto& row : rep.rows)
        csv << row.sample_id << "," << row.prop1_ok << "," << row.prop2_ok << ","
            << row.worst_min_cross << "," << row.worst_excess << "\n";
      st.report = csv.str();
      return;
    }
    json out{{"schema", 1},
             {"n", rep.n},
             {"samples", rep.samples},
             {"seed", rep.seed},
             {"exhaustive", rep.exhaustive},
             {"natural_log", rep.natural_log},
             {"min_len", rep.min_len},
             {"max_first_len", rep.max_first_len},
             {"cap_per_unit", rep.cap_per_unit},
             {"prop1_fail_rate", rep.prop1_fail_rate},
             {"prop2_fail_rate", rep.prop2_fail_rate}};
    if (rep.worst_prop1) out["worst_prop1"] = witness_json(*rep.worst_prop1);
    if (rep.worst_prop2) out["worst_prop2"] = witness_json(*rep.worst_prop2);
    st.report = dump(out);
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ordered Ramsey toolkit: matchings versus triangles"};
  app.require_subcommand(1);
  RunState st;
  app.add_option("--out", st.out_path, "write the report to this file instead of stdout");

  add_bound(app, st);
  add_construct(app, st);
  add_verify(app, st);
  add_lstat(app, st);
  add_scan(app, st);
  add_exact(app, st);
  add_lll(app, st);
  add_density(app, st);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    emit(st);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return st.exit_code;
}
