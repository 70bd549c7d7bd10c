#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace signmotif {

/// Row-major feature matrix with +-1 labels.
struct Dataset {
  std::size_t n_features = 0;
  std::vector<double> features;  // rows * n_features
  std::vector<int> labels;       // +1 / -1

  std::size_t size() const { return labels.size(); }
  std::span<const double> row(std::size_t i) const {
    return {features.data() + i * n_features, n_features};
  }
  void add_row(std::span<const double> values, int label);
};

struct TrainConfig {
  int rounds = 100;
  int max_depth = 3;
  double learning_rate = 0.1;
  double min_child_weight = 1.0;
  double l2_reg = 1.0;
  std::uint64_t seed = 0;  // reserved; exact greedy training is deterministic
};

/// Regression tree with axis-aligned threshold splits. Values equal to the
/// threshold go to the left child.
struct RegressionTree {
  struct Node {
    bool is_leaf = true;
    int feature = -1;
    double threshold = 0.0;
    std::int32_t left = -1;
    std::int32_t right = -1;
    double value = 0.0;
  };
  std::vector<Node> nodes;

  double predict(std::span<const double> features) const;
};

/// Second-order gradient boosting with logistic loss.
class BoostedModel {
 public:
  double predict_margin(std::span<const double> features) const;
  /// Sigmoid of the margin; throws std::invalid_argument on a feature
  /// dimension mismatch.
  double predict_proba(std::span<const double> features) const;

  double base_score() const { return base_score_; }
  std::size_t n_trees() const { return trees_.size(); }
  std::size_t n_features() const { return n_features_; }

  void save(std::ostream& out) const;
  static BoostedModel load(std::istream& in);

  static BoostedModel train(const Dataset& data, const TrainConfig& config);

  /// Mean logistic loss of the model on a dataset.
  double mean_log_loss(const Dataset& data) const;

 private:
  double base_score_ = 0.0;
  double learning_rate_ = 0.1;
  std::size_t n_features_ = 0;
  std::vector<RegressionTree> trees_;
};

}  // namespace signmotif
