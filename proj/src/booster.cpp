#include "signmotif/booster.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace signmotif {
namespace {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

struct GradPair {
  double g = 0.0;
  double h = 0.0;
};

struct SplitChoice {
  bool valid = false;
  int feature = -1;
  double threshold = 0.0;
  double gain = 0.0;
};

class TreeBuilder {
 public:
  TreeBuilder(const Dataset& data, const std::vector<GradPair>& grads,
              const TrainConfig& config)
      : data_(data), grads_(grads), config_(config) {}

  RegressionTree build() {
    RegressionTree tree;
    std::vector<std::uint32_t> rows(data_.size());
    std::iota(rows.begin(), rows.end(), 0u);
    grow(tree, rows, 0);
    return tree;
  }

 private:
  std::int32_t grow(RegressionTree& tree, std::vector<std::uint32_t>& rows,
                    int depth) {
    double sum_g = 0.0, sum_h = 0.0;
    for (auto r : rows) {
      sum_g += grads_[r].g;
      sum_h += grads_[r].h;
    }
    const std::int32_t id = std::int32_t(tree.nodes.size());
    tree.nodes.emplace_back();
    if (depth < config_.max_depth) {
      SplitChoice split = best_split(rows, sum_g, sum_h);
      if (split.valid) {
        std::vector<std::uint32_t> left, right;
        for (auto r : rows) {
          (feature_value(r, split.feature) <= split.threshold ? left : right)
              .push_back(r);
        }
        rows.clear();
        rows.shrink_to_fit();
        const std::int32_t l = grow(tree, left, depth + 1);
        const std::int32_t r = grow(tree, right, depth + 1);
        auto& node = tree.nodes[id];
        node.is_leaf = false;
        node.feature = split.feature;
        node.threshold = split.threshold;
        node.left = l;
        node.right = r;
        return id;
      }
    }
    auto& node = tree.nodes[id];
    node.is_leaf = true;
    node.value = -sum_g / (sum_h + config_.l2_reg);
    return id;
  }

  double feature_value(std::uint32_t row, int feature) const {
    return data_.features[row * data_.n_features + std::size_t(feature)];
  }

  SplitChoice best_split(const std::vector<std::uint32_t>& rows, double sum_g,
                         double sum_h) const {
    SplitChoice best;
    const double parent_score = sum_g * sum_g / (sum_h + config_.l2_reg);
    std::vector<std::uint32_t> order(rows);
    for (int f = 0; f < int(data_.n_features); ++f) {
      std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        const double va = feature_value(a, f), vb = feature_value(b, f);
        return va != vb ? va < vb : a < b;
      });
      double left_g = 0.0, left_h = 0.0;
      for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        left_g += grads_[order[i]].g;
        left_h += grads_[order[i]].h;
        const double v = feature_value(order[i], f);
        const double next = feature_value(order[i + 1], f);
        if (v == next) continue;
        const double right_g = sum_g - left_g;
        const double right_h = sum_h - left_h;
        if (left_h < config_.min_child_weight || right_h < config_.min_child_weight)
          continue;
        const double gain = left_g * left_g / (left_h + config_.l2_reg) +
                            right_g * right_g / (right_h + config_.l2_reg) -
                            parent_score;
        if (gain > best.gain + 1e-12) {
          best.valid = true;
          best.feature = f;
          best.threshold = v + 0.5 * (next - v);
          best.gain = gain;
        }
      }
    }
    return best;
  }

  const Dataset& data_;
  const std::vector<GradPair>& grads_;
  const TrainConfig& config_;
};

}  // namespace

void Dataset::add_row(std::span<const double> values, int label) {
  if (n_features == 0) n_features = values.size();
  if (values.size() != n_features)
    throw std::invalid_argument("Dataset: inconsistent feature dimension");
  if (label != 1 && label != -1)
    throw std::invalid_argument("Dataset: label must be +1 or -1");
  features.insert(features.end(), values.begin(), values.end());
  labels.push_back(label);
}

double RegressionTree::predict(std::span<const double> features) const {
  std::size_t i = 0;
  while (!nodes[i].is_leaf) {
    i = features[std::size_t(nodes[i].feature)] <= nodes[i].threshold
            ? std::size_t(nodes[i].left)
            : std::size_t(nodes[i].right);
  }
  return nodes[i].value;
}

double BoostedModel::predict_margin(std::span<const double> features) const {
  if (features.size() != n_features_)
    throw std::invalid_argument("predict: feature dimension mismatch");
  double margin = base_score_;
  for (const auto& tree : trees_) margin += learning_rate_ * tree.predict(features);
  return margin;
}

double BoostedModel::predict_proba(std::span<const double> features) const {
  return sigmoid(predict_margin(features));
}

BoostedModel BoostedModel::train(const Dataset& data, const TrainConfig& config) {
  if (data.size() == 0) throw std::invalid_argument("train: empty dataset");
  std::size_t pos = std::size_t(
      std::count(data.labels.begin(), data.labels.end(), 1));
  if (pos == 0 || pos == data.size())
    throw std::invalid_argument("train: both classes must be present");
  if (config.rounds <= 0 || config.max_depth <= 0 ||
      config.learning_rate <= 0.0 || config.learning_rate > 1.0)
    throw std::invalid_argument("train: invalid config");

  BoostedModel model;
  model.n_features_ = data.n_features;
  model.learning_rate_ = config.learning_rate;
  const double p0 = double(pos) / double(data.size());
  model.base_score_ = std::log(p0 / (1.0 - p0));

  std::vector<double> margins(data.size(), model.base_score_);
  std::vector<GradPair> grads(data.size());
  for (int round = 0; round < config.rounds; ++round) {
    for (std::size_t i = 0; i < data.size(); ++i) {
      const double p = sigmoid(margins[i]);
      const double y = data.labels[i] == 1 ? 1.0 : 0.0;
      grads[i].g = p - y;
      grads[i].h = std::max(p * (1.0 - p), 1e-16);
    }
    RegressionTree tree = TreeBuilder(data, grads, config).build();
    for (std::size_t i = 0; i < data.size(); ++i)
      margins[i] += config.learning_rate * tree.predict(data.row(i));
    model.trees_.push_back(std::move(tree));
  }
  return model;
}

double BoostedModel::mean_log_loss(const Dataset& data) const {
  double loss = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const double m = predict_margin(data.row(i));
    const double y = data.labels[i] == 1 ? 1.0 : 0.0;
    // log(1 + exp(-m)) + (1-y) * m, computed stably
    loss += (m > 0 ? std::log1p(std::exp(-m)) : -m + std::log1p(std::exp(m))) +
            (1.0 - y) * m;
  }
  return loss / double(data.size());
}

void BoostedModel::save(std::ostream& out) const {
  out.precision(17);
  out << "signmotif-gbt 1\n";
  out << "features " << n_features_ << "\n";
  out << "base_score " << base_score_ << "\n";
  out << "learning_rate " << learning_rate_ << "\n";
  out << "trees " << trees_.size() << "\n";
  for (const auto& tree : trees_) {
    out << "tree " << tree.nodes.size() << "\n";
    for (const auto& n : tree.nodes) {
      if (n.is_leaf)
        out << "leaf " << n.value << "\n";
      else
        out << "split " << n.feature << " " << n.threshold << " " << n.left << " "
            << n.right << "\n";
    }
  }
}

BoostedModel BoostedModel::load(std::istream& in) {
  auto fail = [](const std::string& what) -> BoostedModel {
    throw std::runtime_error("model load: " + what);
  };
  std::string tag;
  int version = 0;
  in >> tag >> version;
  if (tag != "signmotif-gbt" || version != 1) return fail("bad header");
  BoostedModel model;
  std::size_t n_trees = 0;
  in >> tag >> model.n_features_;
  in >> tag >> model.base_score_;
  in >> tag >> model.learning_rate_;
  in >> tag >> n_trees;
  if (!in) return fail("truncated header");
  model.trees_.resize(n_trees);
  for (auto& tree : model.trees_) {
    std::size_t n_nodes = 0;
    in >> tag >> n_nodes;
    if (!in || tag != "tree") return fail("bad tree header");
    tree.nodes.resize(n_nodes);
    for (auto& node : tree.nodes) {
      in >> tag;
      if (tag == "leaf") {
        node.is_leaf = true;
        in >> node.value;
      } else if (tag == "split") {
        node.is_leaf = false;
        in >> node.feature >> node.threshold >> node.left >> node.right;
      } else {
        return fail("bad node tag");
      }
    }
  }
  if (!in) return fail("truncated model");
  return model;
}

}  // namespace signmotif
