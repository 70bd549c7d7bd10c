#include "signmotif/report.hpp"

#include <array>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace signmotif {

using nlohmann::json;

namespace {

std::string canonical_config_string(const ReportMetadata& meta) {
  std::ostringstream os;
  os.precision(17);
  os << meta.dataset << '|' << meta.split.train_fraction << '|'
     << meta.split.realizations << '|' << meta.split.master_seed << '|'
     << meta.train.rounds << '|' << meta.train.max_depth << '|'
     << meta.train.learning_rate << '|' << meta.train.min_child_weight << '|'
     << meta.train.l2_reg << '|' << meta.train.seed << '|' << meta.induced << '|'
     << meta.auc_samples;
  return os.str();
}

json meta_to_json(const ReportMetadata& meta) {
  json j;
  j["version"] = std::string(kVersion);
  j["config_hash"] = config_hash(meta);
  j["dataset"] = meta.dataset;
  j["stats"] = {{"nodes", meta.stats.node_count},
                {"links", meta.stats.link_count}};
  if (meta.stats.f_plus) {
    j["stats"]["f_plus"] = *meta.stats.f_plus;
    j["stats"]["f_minus"] = *meta.stats.f_minus;
  }
  j["split"] = {{"train_fraction", meta.split.train_fraction},
                {"realizations", meta.split.realizations},
                {"master_seed", meta.split.master_seed}};
  j["train"] = {{"rounds", meta.train.rounds},
                {"max_depth", meta.train.max_depth},
                {"learning_rate", meta.train.learning_rate},
                {"min_child_weight", meta.train.min_child_weight},
                {"l2_reg", meta.train.l2_reg},
                {"seed", meta.train.seed}};
  j["threads"] = meta.threads;
  j["induced"] = meta.induced;
  j["auc_samples"] = meta.auc_samples;
  return j;
}

ReportMetadata meta_from_json(const json& j) {
  ReportMetadata meta;
  meta.dataset = j.at("dataset").get<std::string>();
  meta.stats.node_count = j.at("stats").at("nodes").get<std::size_t>();
  meta.stats.link_count = j.at("stats").at("links").get<std::size_t>();
  if (j.at("stats").contains("f_plus")) {
    meta.stats.f_plus = j["stats"]["f_plus"].get<double>();
    meta.stats.f_minus = j["stats"]["f_minus"].get<double>();
  }
  meta.split.train_fraction = j.at("split").at("train_fraction").get<double>();
  meta.split.realizations = j.at("split").at("realizations").get<int>();
  meta.split.master_seed = j.at("split").at("master_seed").get<std::uint64_t>();
  meta.train.rounds = j.at("train").at("rounds").get<int>();
  meta.train.max_depth = j.at("train").at("max_depth").get<int>();
  meta.train.learning_rate = j.at("train").at("learning_rate").get<double>();
  meta.train.min_child_weight = j.at("train").at("min_child_weight").get<double>();
  meta.train.l2_reg = j.at("train").at("l2_reg").get<double>();
  meta.train.seed = j.at("train").at("seed").get<std::uint64_t>();
  meta.threads = j.value("threads", 1);
  meta.induced = j.value("induced", false);
  meta.auc_samples = j.value("auc_samples", std::uint64_t(0));
  return meta;
}

const char* kind_name(MethodSpec::Kind kind) {
  switch (kind) {
    case MethodSpec::Kind::SingleMotif: return "single-motif";
    case MethodSpec::Kind::Gmmnb: return "gmmnb";
    case MethodSpec::Kind::Fgmnb: return "fgmnb";
  }
  return "?";
}

}  // namespace

std::string config_hash(const ReportMetadata& meta) {
  const std::string s = canonical_config_string(meta);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

std::string report_json(const ReportMetadata& meta,
                        const std::vector<MethodResult>& results) {
  json j = meta_to_json(meta);
  j["results"] = json::array();
  for (const auto& res : results) {
    json r;
    r["method"] = res.method.label();
    r["kind"] = kind_name(res.method.kind);
    r["variant"] = std::string(score_variant_name(res.method.variant));
    if (res.method.kind == MethodSpec::Kind::SingleMotif) {
      r["predictor"] = std::string(predictor_label(res.method.predictor));
      r["s_index"] = default_s_index(res.method.predictor);
    }
    r["mean_auc"] = res.mean_auc;
    r["std_auc"] = res.std_auc;
    r["mean_acc"] = res.mean_acc;
    r["std_acc"] = res.std_acc;
    r["auc"] = res.auc_per_realization;
    r["acc"] = res.acc_per_realization;
    j["results"].push_back(std::move(r));
  }
  return j.dump(2) + "\n";
}

std::string manifest_json(const ReportMetadata& meta) {
  return meta_to_json(meta).dump(2) + "\n";
}

LoadedReport load_report_json(const std::string& text) {
  const json j = json::parse(text);
  LoadedReport report;
  report.meta = meta_from_json(j);
  for (const auto& r : j.at("results")) {
    MethodResult res;
    const std::string kind = r.at("kind").get<std::string>();
    if (kind == "single-motif") {
      res.method.kind = MethodSpec::Kind::SingleMotif;
      res.method.predictor =
          *predictor_from_label(r.at("predictor").get<std::string>());
    } else if (kind == "gmmnb") {
      res.method.kind = MethodSpec::Kind::Gmmnb;
    } else {
      res.method.kind = MethodSpec::Kind::Fgmnb;
    }
    res.method.variant = *score_variant_from_name(r.at("variant").get<std::string>());
    res.mean_auc = r.at("mean_auc").get<double>();
    res.std_auc = r.at("std_auc").get<double>();
    res.mean_acc = r.at("mean_acc").get<double>();
    res.std_acc = r.at("std_acc").get<double>();
    res.auc_per_realization = r.at("auc").get<std::vector<double>>();
    res.acc_per_realization = r.at("acc").get<std::vector<double>>();
    report.results.push_back(std::move(res));
  }
  return report;
}

void write_predictor_table_csv(std::ostream& out,
                               const std::vector<MethodResult>& results,
                               bool accuracy) {
  // predictor rows, variant columns; only single-motif results contribute.
  const std::array<ScoreVariant, 3> variant_order = {
      ScoreVariant::Smnb, ScoreVariant::GsmnbCn, ScoreVariant::GsmnbCl};
  std::map<int, Predictor> row_order;  // by S-index
  for (const auto& res : results)
    if (res.method.kind == MethodSpec::Kind::SingleMotif)
      row_order.emplace(default_s_index(res.method.predictor), res.method.predictor);

  out << "predictor,s_index";
  for (ScoreVariant v : variant_order)
    out << ',' << score_variant_name(v) << "_mean," << score_variant_name(v)
        << "_std";
  out << '\n';
  out.precision(6);
  out << std::fixed;
  for (const auto& [s_index, predictor] : row_order) {
    out << predictor_label(predictor) << ',' << s_index;
    for (ScoreVariant v : variant_order) {
      const MethodResult* found = nullptr;
      for (const auto& res : results)
        if (res.method.kind == MethodSpec::Kind::SingleMotif &&
            res.method.predictor == predictor && res.method.variant == v)
          found = &res;
      if (found)
        out << ',' << (accuracy ? found->mean_acc : found->mean_auc) << ','
            << (accuracy ? found->std_acc : found->std_auc);
      else
        out << ",,";
    }
    out << '\n';
  }
}

void write_method_table_csv(std::ostream& out,
                            const std::vector<MethodResult>& results) {
  out << "method,mean_auc,std_auc,mean_acc,std_acc\n";
  out.precision(6);
  out << std::fixed;
  for (const auto& res : results) {
    if (res.method.kind == MethodSpec::Kind::SingleMotif) continue;
    out << res.method.label() << ',' << res.mean_auc << ',' << res.std_auc << ','
        << res.mean_acc << ',' << res.std_acc << '\n';
  }
}

void write_coverage_csv(std::ostream& out, const SignedGraph& graph,
                        MatchOptions options) {
  out << "predictor,s_index,coverage\n";
  out.precision(6);
  out << std::fixed;
  for (Predictor p : catalog())
    out << predictor_label(p) << ',' << default_s_index(p) << ','
        << motif_coverage(graph, p, options) << '\n';
}

}  // namespace signmotif
