#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "signmotif/brute_force.hpp"
#include "signmotif/eval.hpp"
#include "signmotif/io.hpp"
#include "signmotif/report.hpp"

namespace fs = std::filesystem;
using namespace signmotif;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDataError = 1;
constexpr int kExitConfigError = 2;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

SignedGraph load_canonical(const std::string& path) {
  return load_graph_file(path, InputFormat::CanonicalTsv);
}

nlohmann::json stats_json(const GraphStats& stats) {
  nlohmann::json j;
  j["nodes"] = stats.node_count;
  j["links"] = stats.link_count;
  if (stats.f_plus) {
    j["f_plus"] = *stats.f_plus;
    j["f_minus"] = *stats.f_minus;
  } else {
    j["f_plus"] = nullptr;
    j["f_minus"] = nullptr;
  }
  return j;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << content;
}

std::vector<Predictor> parse_predictor_selection(const std::string& selection) {
  std::vector<Predictor> out;
  if (selection == "all") {
    for (Predictor p : catalog()) out.push_back(p);
    return out;
  }
  std::istringstream iss(selection);
  std::string tok;
  while (std::getline(iss, tok, ',')) {
    auto p = predictor_from_label(tok);
    if (!p)
      throw ConfigError("unknown predictor '" + tok +
                        "' (valid: all, T++, T+-, T--, Q+++, Q++-, Q+-+, Q+--, "
                        "Q-+-, Q---, S1..S9)");
    out.push_back(*p);
  }
  if (out.empty()) throw ConfigError("empty predictor selection");
  return out;
}

std::vector<MethodSpec> build_methods(const std::string& methods_csv,
                                      const std::vector<Predictor>& predictors) {
  std::vector<MethodSpec> methods;
  std::istringstream iss(methods_csv);
  std::string tok;
  while (std::getline(iss, tok, ',')) {
    if (tok == "smnb" || tok == "gsmnb-cl" || tok == "gsmnb-cn") {
      for (Predictor p : predictors) {
        MethodSpec m;
        m.kind = MethodSpec::Kind::SingleMotif;
        m.variant = *score_variant_from_name(tok);
        m.predictor = p;
        methods.push_back(m);
      }
    } else if (tok == "gmmnb") {
      MethodSpec m;
      m.kind = MethodSpec::Kind::Gmmnb;
      methods.push_back(m);
    } else if (tok == "fgmnb") {
      MethodSpec m;
      m.kind = MethodSpec::Kind::Fgmnb;
      methods.push_back(m);
    } else {
      throw ConfigError("unknown method '" + tok +
                        "' (valid: smnb, gsmnb-cl, gsmnb-cn, gmmnb, fgmnb)");
    }
  }
  if (methods.empty()) throw ConfigError("no methods selected");
  return methods;
}

struct EvaluateConfig {
  std::string graph_path;
  std::string methods = "fgmnb";
  std::string predictors = "all";
  SplitSpec split;
  TrainConfig train;
  int threads = int(std::thread::hardware_concurrency());
  bool induced = false;
  std::uint64_t auc_samples = 0;
  std::string output_dir = "signmotif-out";
};

void apply_config_file(EvaluateConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto eq = line.find('=');
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": expected key=value");
    auto strip = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = strip(line.substr(0, eq));
    const std::string value = strip(line.substr(eq + 1));
    try {
      if (key == "graph") cfg.graph_path = value;
      else if (key == "methods") cfg.methods = value;
      else if (key == "predictors") cfg.predictors = value;
      else if (key == "train_fraction") cfg.split.train_fraction = std::stod(value);
      else if (key == "realizations") cfg.split.realizations = std::stoi(value);
      else if (key == "master_seed") cfg.split.master_seed = std::stoull(value);
      else if (key == "rounds") cfg.train.rounds = std::stoi(value);
      else if (key == "max_depth") cfg.train.max_depth = std::stoi(value);
      else if (key == "learning_rate") cfg.train.learning_rate = std::stod(value);
      else if (key == "min_child_weight") cfg.train.min_child_weight = std::stod(value);
      else if (key == "l2_reg") cfg.train.l2_reg = std::stod(value);
      else if (key == "threads") cfg.threads = std::stoi(value);
      else if (key == "induced") cfg.induced = value == "true" || value == "1";
      else if (key == "auc_samples") cfg.auc_samples = std::stoull(value);
      else if (key == "output_dir") cfg.output_dir = value;
      else throw ConfigError("config line " + std::to_string(lineno) +
                             ": unknown key '" + key + "'");
    } catch (const std::invalid_argument&) {
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": bad value for '" + key + "'");
    }
  }
}

int cmd_ingest(const std::string& input, const std::string& format_name,
               const std::string& output, const std::string& stats_path) {
  auto format = input_format_from_name(format_name);
  if (!format) throw ConfigError("unknown format '" + format_name + "'");
  ParseDiagnostics diag;
  const SignedGraph graph = load_graph_file(input, *format, &diag);
  write_canonical_tsv_file(graph, output);

  nlohmann::json j = stats_json(graph.stats());
  j["source"] = input;
  j["format"] = std::string(input_format_name(*format));
  j["zero_ratings_dropped"] = diag.zero_ratings_dropped;
  j["neutral_votes_dropped"] = diag.neutral_votes_dropped;
  const std::string text = j.dump(2) + "\n";
  if (stats_path.empty())
    std::cout << text;
  else
    write_file(stats_path, text);
  return kExitOk;
}

int cmd_evaluate(EvaluateConfig cfg) {
  if (cfg.graph_path.empty()) throw ConfigError("no graph given (key 'graph' or --graph)");
  if (const char* env = std::getenv("SIGNMOTIF_OUTPUT_DIR")) cfg.output_dir = env;

  const auto predictors = parse_predictor_selection(cfg.predictors);
  const auto methods = build_methods(cfg.methods, predictors);

  const SignedGraph graph = load_canonical(cfg.graph_path);

  EvalOptions options;
  options.threads = std::max(1, cfg.threads);
  options.match.induced = cfg.induced;
  options.auc_samples = cfg.auc_samples;

  const auto results = run_sweep(graph, methods, cfg.split, cfg.train, options);

  ReportMetadata meta;
  meta.dataset = cfg.graph_path;
  meta.stats = graph.stats();
  meta.split = cfg.split;
  meta.train = cfg.train;
  meta.threads = options.threads;
  meta.induced = cfg.induced;
  meta.auc_samples = cfg.auc_samples;

  fs::create_directories(cfg.output_dir);
  const fs::path dir(cfg.output_dir);
  write_file(dir / "results.json", report_json(meta, results));
  write_file(dir / "manifest.json", manifest_json(meta));
  {
    std::ofstream out(dir / "table_predictors_auc.csv");
    write_predictor_table_csv(out, results, /*accuracy=*/false);
  }
  {
    std::ofstream out(dir / "table_predictors_acc.csv");
    write_predictor_table_csv(out, results, /*accuracy=*/true);
  }
  {
    std::ofstream out(dir / "table_methods.csv");
    write_method_table_csv(out, results);
  }

  for (const auto& res : results) {
    std::cout << res.method.label() << ": AUC " << res.mean_auc << " +- "
              << res.std_auc << ", Accuracy " << res.mean_acc << " +- "
              << res.std_acc << "\n";
  }
  std::cout << "report written to " << dir.string() << "\n";
  return kExitOk;
}

int cmd_score(const std::string& graph_path, const std::string& method,
              const std::string& variant_name, const std::string& predictors_sel,
              const std::string& output, bool induced) {
  const SignedGraph graph = load_canonical(graph_path);
  const MaskedGraph view(graph);
  const Prior prior = Prior::compute(view);
  MatchOptions match{induced};

  std::ostringstream out;
  out.precision(12);
  out << "u,v,predictor,variant,value\n";
  if (method == "single") {
    auto variant = score_variant_from_name(variant_name);
    if (!variant) throw ConfigError("unknown variant '" + variant_name + "'");
    const auto predictors = parse_predictor_selection(predictors_sel);
    for (const auto& link : graph.links()) {
      const auto profile = target_profile(view, link.u, link.v, true, true, match);
      for (Predictor p : predictors) {
        out << graph.node_name(link.u) << ',' << graph.node_name(link.v) << ','
            << predictor_label(p) << ',' << score_variant_name(*variant) << ','
            << score_from_profile(profile, p, *variant, prior).value << '\n';
      }
    }
  } else if (method == "gmmnb") {
    for (const auto& link : graph.links()) {
      const auto profile = target_profile(view, link.u, link.v, true, true, match);
      out << graph.node_name(link.u) << ',' << graph.node_name(link.v)
          << ",GMMNB,GSMNB-CL,"
          << gmmnb_from_profile(profile, ScoreVariant::GsmnbCl, prior).value << '\n';
    }
  } else if (method == "fgmnb") {
    for (const auto& link : graph.links()) {
      const auto profile = target_profile(view, link.u, link.v, true, true, match);
      const auto fv = feature_vector_from_profile(profile, prior);
      for (std::size_t i = 0; i < fv.size(); ++i) {
        out << graph.node_name(link.u) << ',' << graph.node_name(link.v)
            << ",FGMNB-" << i + 1 << ",GSMNB-CL," << fv[i] << '\n';
      }
    }
  } else {
    throw ConfigError("unknown score method '" + method +
                      "' (valid: single, gmmnb, fgmnb)");
  }
  if (output.empty())
    std::cout << out.str();
  else
    write_file(output, out.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Motif-based sign prediction toolkit for undirected signed networks"};
  app.require_subcommand(1);

  // ingest
  auto* ingest = app.add_subcommand("ingest", "Convert a raw dataset to canonical TSV");
  std::string in_input, in_format, in_output, in_stats;
  ingest->add_option("--input", in_input, "raw dataset file")->required();
  ingest->add_option("--format", in_format,
                     "bitcoin-csv | snap-signed-tsv | wiki-rfa | canonical-tsv")
      ->required();
  ingest->add_option("--output", in_output, "canonical TSV path")->required();
  ingest->add_option("--stats", in_stats, "stats JSON path (default: stdout)");

  // stats
  auto* stats_cmd = app.add_subcommand("stats", "Report graph statistics");
  std::string st_graph, st_output;
  stats_cmd->add_option("--graph", st_graph, "canonical TSV")->required();
  stats_cmd->add_option("--output", st_output, "stats JSON path (default: stdout)");

  // coverage
  auto* coverage_cmd = app.add_subcommand("coverage", "Per-predictor motif coverage");
  std::string cv_graph, cv_output;
  bool cv_induced = false;
  coverage_cmd->add_option("--graph", cv_graph, "canonical TSV")->required();
  coverage_cmd->add_option("--output", cv_output, "CSV path (default: stdout)");
  coverage_cmd->add_flag("--induced", cv_induced, "induced subgraph matching");

  // score
  auto* score_cmd = app.add_subcommand("score", "Dump per-link likelihood scores");
  std::string sc_graph, sc_method = "single", sc_variant = "gsmnb-cl",
              sc_predictors = "all", sc_output;
  bool sc_induced = false;
  score_cmd->add_option("--graph", sc_graph, "canonical TSV")->required();
  score_cmd->add_option("--method", sc_method, "single | gmmnb | fgmnb");
  score_cmd->add_option("--variant", sc_variant, "smnb | gsmnb-cl | gsmnb-cn");
  score_cmd->add_option("--predictor", sc_predictors, "label list or 'all'");
  score_cmd->add_option("--output", sc_output, "CSV path (default: stdout)");
  score_cmd->add_flag("--induced", sc_induced, "induced subgraph matching");

  // evaluate
  auto* eval_cmd = app.add_subcommand("evaluate", "Run the split/train/test protocol");
  EvaluateConfig cfg;
  std::string ev_config;
  eval_cmd->add_option("--config", ev_config, "key=value config file");
  auto* o_graph = eval_cmd->add_option("--graph", cfg.graph_path, "canonical TSV");
  auto* o_methods = eval_cmd->add_option("--methods", cfg.methods,
                                         "comma list: smnb,gsmnb-cl,gsmnb-cn,gmmnb,fgmnb");
  auto* o_preds = eval_cmd->add_option("--predictors", cfg.predictors,
                                       "label list or 'all'");
  auto* o_frac = eval_cmd->add_option("--train-fraction", cfg.split.train_fraction);
  auto* o_real = eval_cmd->add_option("--realizations", cfg.split.realizations);
  auto* o_seed = eval_cmd->add_option("--master-seed", cfg.split.master_seed);
  auto* o_rounds = eval_cmd->add_option("--rounds", cfg.train.rounds);
  auto* o_depth = eval_cmd->add_option("--max-depth", cfg.train.max_depth);
  auto* o_lr = eval_cmd->add_option("--learning-rate", cfg.train.learning_rate);
  auto* o_mcw = eval_cmd->add_option("--min-child-weight", cfg.train.min_child_weight);
  auto* o_l2 = eval_cmd->add_option("--l2-reg", cfg.train.l2_reg);
  auto* o_threads = eval_cmd->add_option("--threads", cfg.threads);
  auto* o_induced = eval_cmd->add_flag("--induced", cfg.induced);
  auto* o_samples = eval_cmd->add_option("--auc-samples", cfg.auc_samples,
                                         "0 = exact rank-based AUC");
  auto* o_outdir = eval_cmd->add_option("--output-dir", cfg.output_dir);

  // report
  auto* report_cmd = app.add_subcommand("report", "Re-derive CSV tables from results.json");
  std::string rp_input, rp_outdir = "signmotif-out";
  report_cmd->add_option("--input", rp_input, "results.json")->required();
  report_cmd->add_option("--output-dir", rp_outdir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitConfigError;
  }

  try {
    if (*ingest) return cmd_ingest(in_input, in_format, in_output, in_stats);

    if (*stats_cmd) {
      const SignedGraph graph = load_canonical(st_graph);
      const std::string text = stats_json(graph.stats()).dump(2) + "\n";
      if (st_output.empty())
        std::cout << text;
      else
        write_file(st_output, text);
      return kExitOk;
    }

    if (*coverage_cmd) {
      const SignedGraph graph = load_canonical(cv_graph);
      std::ostringstream out;
      write_coverage_csv(out, graph, MatchOptions{cv_induced});
      if (cv_output.empty())
        std::cout << out.str();
      else
        write_file(cv_output, out.str());
      return kExitOk;
    }

    if (*score_cmd)
      return cmd_score(sc_graph, sc_method, sc_variant, sc_predictors, sc_output,
                       sc_induced);

    if (*eval_cmd) {
      if (!ev_config.empty()) {
        // Flags win over the config file: reparse flag values on top.
        EvaluateConfig flag_values = cfg;
        apply_config_file(cfg, ev_config);
        if (o_graph->count()) cfg.graph_path = flag_values.graph_path;
        if (o_methods->count()) cfg.methods = flag_values.methods;
        if (o_preds->count()) cfg.predictors = flag_values.predictors;
        if (o_frac->count()) cfg.split.train_fraction = flag_values.split.train_fraction;
        if (o_real->count()) cfg.split.realizations = flag_values.split.realizations;
        if (o_seed->count()) cfg.split.master_seed = flag_values.split.master_seed;
        if (o_rounds->count()) cfg.train.rounds = flag_values.train.rounds;
        if (o_depth->count()) cfg.train.max_depth = flag_values.train.max_depth;
        if (o_lr->count()) cfg.train.learning_rate = flag_values.train.learning_rate;
        if (o_mcw->count()) cfg.train.min_child_weight = flag_values.train.min_child_weight;
        if (o_l2->count()) cfg.train.l2_reg = flag_values.train.l2_reg;
        if (o_threads->count()) cfg.threads = flag_values.threads;
        if (o_induced->count()) cfg.induced = flag_values.induced;
        if (o_samples->count()) cfg.auc_samples = flag_values.auc_samples;
        if (o_outdir->count()) cfg.output_dir = flag_values.output_dir;
      }
      return cmd_evaluate(cfg);
    }

    if (*report_cmd) {
      std::ifstream in(rp_input);
      if (!in) throw std::runtime_error("cannot open " + rp_input);
      std::stringstream buf;
      buf << in.rdbuf();
      const LoadedReport loaded = load_report_json(buf.str());
      fs::create_directories(rp_outdir);
      const fs::path dir(rp_outdir);
      write_file(dir / "manifest.json", manifest_json(loaded.meta));
      {
        std::ofstream out(dir / "table_predictors_auc.csv");
        write_predictor_table_csv(out, loaded.results, false);
      }
      {
        std::ofstream out(dir / "table_predictors_acc.csv");
        write_predictor_table_csv(out, loaded.results, true);
      }
      {
        std::ofstream out(dir / "table_methods.csv");
        write_method_table_csv(out, loaded.results);
      }
      return kExitOk;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDataError;
  }
  return kExitOk;
}
