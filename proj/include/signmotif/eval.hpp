#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "signmotif/booster.hpp"
#include "signmotif/graph.hpp"
#include "signmotif/scoring.hpp"

namespace signmotif {

struct SplitSpec {
  double train_fraction = 0.9;
  int realizations = 100;
  std::uint64_t master_seed = 0;
};

/// One train/test split: the negatives partitioned train_fraction/rest, and
/// positives sampled without replacement to the same sizes. The four sets
/// are pairwise disjoint; test_pos + test_neg is the masked set.
struct Realization {
  std::vector<LinkId> train_pos;
  std::vector<LinkId> train_neg;
  std::vector<LinkId> test_pos;
  std::vector<LinkId> test_neg;
};

Realization make_realization(const SignedGraph& graph, const SplitSpec& spec,
                             int index);

/// Exact rank-based AUC with ties contributing 0.5. Throws on empty input.
double auc(std::span<const double> pos_scores, std::span<const double> neg_scores);

/// The Monte Carlo estimator: n random positive/negative comparisons.
double sampled_auc(std::span<const double> pos_scores,
                   std::span<const double> neg_scores, std::size_t n_samples,
                   std::uint64_t seed);

double accuracy(std::span<const int> predictions, std::span<const int> labels);

struct MethodSpec {
  enum class Kind { SingleMotif, Gmmnb, Fgmnb };
  Kind kind = Kind::SingleMotif;
  ScoreVariant variant = ScoreVariant::GsmnbCl;  // ignored by Fgmnb (always CL)
  Predictor predictor = Predictor::T_pp;         // SingleMotif only

  std::string label() const;
};

struct MethodResult {
  MethodSpec method;
  std::vector<double> auc_per_realization;
  std::vector<double> acc_per_realization;
  double mean_auc = 0.0, std_auc = 0.0;
  double mean_acc = 0.0, std_acc = 0.0;
};

struct EvalOptions {
  int threads = 1;
  MatchOptions match;
  std::uint64_t auc_samples = 0;  // 0 = exact rank-based AUC
  bool shuffle_train_labels = false;  // diagnostic: destroys the label signal
};

/// Runs the full protocol for several methods over shared realizations:
/// per realization, mask the test signs, compute the prior and per-target
/// profiles on the masked view, train one classifier per method on the
/// balanced training rows, and score the test rows. Deterministic for a
/// fixed (graph, methods, spec, config) regardless of thread count.
std::vector<MethodResult> run_sweep(const SignedGraph& graph,
                                    std::span<const MethodSpec> methods,
                                    const SplitSpec& spec,
                                    const TrainConfig& train_config,
                                    const EvalOptions& options = {});

MethodResult run_experiment(const SignedGraph& graph, const MethodSpec& method,
                            const SplitSpec& spec, const TrainConfig& train_config,
                            const EvalOptions& options = {});

}  // namespace signmotif
