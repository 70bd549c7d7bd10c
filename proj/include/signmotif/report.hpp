#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "signmotif/eval.hpp"
#include "signmotif/graph.hpp"

namespace signmotif {

inline constexpr std::string_view kVersion = "0.1.0";

struct ReportMetadata {
  std::string dataset;  // path or name of the graph file
  GraphStats stats;
  SplitSpec split;
  TrainConfig train;
  int threads = 1;
  bool induced = false;
  std::uint64_t auc_samples = 0;
};

/// FNV-1a hash of the canonical configuration string; embedded in every
/// artifact so a report can be matched to the run that produced it.
std::string config_hash(const ReportMetadata& meta);

std::string report_json(const ReportMetadata& meta,
                        const std::vector<MethodResult>& results);
std::string manifest_json(const ReportMetadata& meta);

/// predictor rows x variant columns, the single-predictor table layout.
void write_predictor_table_csv(std::ostream& out,
                               const std::vector<MethodResult>& results,
                               bool accuracy);
/// GMMNB/FGMNB-style method rows with AUC and Accuracy columns.
void write_method_table_csv(std::ostream& out,
                            const std::vector<MethodResult>& results);

/// Re-derives the CSV tables from a previously written JSON report.
struct LoadedReport {
  ReportMetadata meta;
  std::vector<MethodResult> results;
};
LoadedReport load_report_json(const std::string& text);

void write_coverage_csv(std::ostream& out, const SignedGraph& graph,
                        MatchOptions options = {});

}  // namespace signmotif
