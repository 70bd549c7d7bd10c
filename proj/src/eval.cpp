#include "signmotif/eval.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace signmotif {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Small deterministic generator, identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x853c49e6748fea9bULL) {}

  std::uint64_t next() { return state_ = splitmix64(state_); }

  // Uniform in [0, n) by rejection.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~0ULL - ~0ULL % n;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::uint64_t state_;
};

double mean_of(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / double(v.size());
}

double std_of(const std::vector<double>& v, double mean) {
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / double(v.size()));
}

}  // namespace

Realization make_realization(const SignedGraph& graph, const SplitSpec& spec,
                             int index) {
  if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0))
    throw std::invalid_argument("train_fraction must be in (0,1)");
  if (index < 0 || index >= spec.realizations)
    throw std::invalid_argument("realization index out of range");

  std::vector<LinkId> pos, neg;
  for (LinkId li = 0; li < graph.link_count(); ++li)
    (graph.sign(li) == Sign::Positive ? pos : neg).push_back(li);

  const std::size_t n_train = std::size_t(spec.train_fraction * double(neg.size()));
  const std::size_t n_test = neg.size() - n_train;
  if (n_train == 0 || n_test == 0)
    throw std::invalid_argument("split leaves an empty train or test negative set");
  if (pos.size() < neg.size())
    throw std::invalid_argument("not enough positive links to balance the negatives");

  Rng rng(splitmix64(spec.master_seed) ^ splitmix64(std::uint64_t(index) + 1));
  rng.shuffle(neg);
  rng.shuffle(pos);

  Realization r;
  r.train_neg.assign(neg.begin(), neg.begin() + n_train);
  r.test_neg.assign(neg.begin() + n_train, neg.end());
  r.train_pos.assign(pos.begin(), pos.begin() + n_train);
  r.test_pos.assign(pos.begin() + n_train, pos.begin() + n_train + n_test);
  for (auto* set : {&r.train_neg, &r.test_neg, &r.train_pos, &r.test_pos})
    std::sort(set->begin(), set->end());
  return r;
}

double auc(std::span<const double> pos_scores, std::span<const double> neg_scores) {
  if (pos_scores.empty() || neg_scores.empty())
    throw std::invalid_argument("auc: empty score list");
  struct Entry {
    double score;
    bool positive;
  };
  std::vector<Entry> all;
  all.reserve(pos_scores.size() + neg_scores.size());
  for (double s : pos_scores) all.push_back({s, true});
  for (double s : neg_scores) all.push_back({s, false});
  std::sort(all.begin(), all.end(),
            [](const Entry& a, const Entry& b) { return a.score < b.score; });

  // Rank-sum with midranks for ties.
  double pos_rank_sum = 0.0;
  std::size_t i = 0;
  while (i < all.size()) {
    std::size_t j = i;
    while (j < all.size() && all[j].score == all[i].score) ++j;
    const double midrank = 0.5 * double(i + 1 + j);  // average of ranks i+1..j
    for (std::size_t k = i; k < j; ++k)
      if (all[k].positive) pos_rank_sum += midrank;
    i = j;
  }
  const double np = double(pos_scores.size());
  const double nn = double(neg_scores.size());
  return (pos_rank_sum - np * (np + 1.0) / 2.0) / (np * nn);
}

double sampled_auc(std::span<const double> pos_scores,
                   std::span<const double> neg_scores, std::size_t n_samples,
                   std::uint64_t seed) {
  if (pos_scores.empty() || neg_scores.empty())
    throw std::invalid_argument("auc: empty score list");
  if (n_samples == 0) throw std::invalid_argument("auc: zero samples");
  Rng rng(seed);
  std::size_t higher = 0, ties = 0;
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double p = pos_scores[rng.below(pos_scores.size())];
    const double n = neg_scores[rng.below(neg_scores.size())];
    if (p > n)
      ++higher;
    else if (p == n)
      ++ties;
  }
  return (double(higher) + 0.5 * double(ties)) / double(n_samples);
}

double accuracy(std::span<const int> predictions, std::span<const int> labels) {
  if (predictions.size() != labels.size())
    throw std::invalid_argument("accuracy: length mismatch");
  if (predictions.empty()) throw std::invalid_argument("accuracy: empty input");
  std::size_t correct = 0;
  for (std::size_t i = 0; i < predictions.size(); ++i)
    if (predictions[i] == labels[i]) ++correct;
  return double(correct) / double(predictions.size());
}

std::string MethodSpec::label() const {
  switch (kind) {
    case Kind::SingleMotif:
      return std::string(score_variant_name(variant)) + "[" +
             std::string(predictor_label(predictor)) + "]";
    case Kind::Gmmnb:
      return variant == ScoreVariant::GsmnbCl
                 ? "GMMNB"
                 : "GMMNB[" + std::string(score_variant_name(variant)) + "]";
    case Kind::Fgmnb:
      return "FGMNB";
  }
  return "?";
}

namespace {

struct RealizationOutcome {
  std::vector<double> auc;  // per method
  std::vector<double> acc;
};

RealizationOutcome evaluate_realization(const SignedGraph& graph,
                                        std::span<const MethodSpec> methods,
                                        const SplitSpec& spec,
                                        const TrainConfig& train_config,
                                        const EvalOptions& options, int index) {
  const Realization rel = make_realization(graph, spec, index);
  std::vector<LinkId> hidden;
  hidden.reserve(rel.test_pos.size() + rel.test_neg.size());
  hidden.insert(hidden.end(), rel.test_pos.begin(), rel.test_pos.end());
  hidden.insert(hidden.end(), rel.test_neg.begin(), rel.test_neg.end());
  const MaskedGraph view(graph, hidden);
  const Prior prior = Prior::compute(view);

  bool need_triads = false, need_quads = false;
  for (const auto& m : methods) {
    if (m.kind != MethodSpec::Kind::SingleMotif) {
      need_triads = need_quads = true;
    } else if (predictor_kind(m.predictor) == MotifKind::Triad) {
      need_triads = true;
    } else {
      need_quads = true;
    }
  }

  std::vector<LinkId> targets;
  targets.insert(targets.end(), rel.train_pos.begin(), rel.train_pos.end());
  targets.insert(targets.end(), rel.train_neg.begin(), rel.train_neg.end());
  targets.insert(targets.end(), rel.test_pos.begin(), rel.test_pos.end());
  targets.insert(targets.end(), rel.test_neg.begin(), rel.test_neg.end());
  const std::size_t n_train = rel.train_pos.size() + rel.train_neg.size();

  std::vector<TargetProfile> profiles;
  profiles.reserve(targets.size());
  for (LinkId li : targets) {
    const auto& link = graph.link(li);
    profiles.push_back(target_profile(view, link.u, link.v, need_triads,
                                      need_quads, options.match));
  }

  std::vector<int> train_labels;
  for (std::size_t i = 0; i < n_train; ++i)
    train_labels.push_back(i < rel.train_pos.size() ? 1 : -1);
  if (options.shuffle_train_labels) {
    Rng rng(splitmix64(spec.master_seed ^ 0x5ca1ab1eULL) ^
            splitmix64(std::uint64_t(index) + 1));
    rng.shuffle(train_labels);
  }

  RealizationOutcome outcome;
  for (const auto& method : methods) {
    auto features_of = [&](std::size_t t) -> std::vector<double> {
      switch (method.kind) {
        case MethodSpec::Kind::SingleMotif:
          return {score_from_profile(profiles[t], method.predictor, method.variant,
                                     prior)
                      .value};
        case MethodSpec::Kind::Gmmnb:
          return {gmmnb_from_profile(profiles[t], method.variant, prior).value};
        case MethodSpec::Kind::Fgmnb: {
          auto fv = feature_vector_from_profile(profiles[t], prior);
          return {fv.begin(), fv.end()};
        }
      }
      return {};
    };

    Dataset train;
    for (std::size_t t = 0; t < n_train; ++t) {
      auto f = features_of(t);
      train.add_row(f, train_labels[t]);
    }
    const BoostedModel model = BoostedModel::train(train, train_config);

    std::vector<double> pos_probs, neg_probs;
    std::vector<int> preds, labels;
    for (std::size_t t = n_train; t < targets.size(); ++t) {
      const bool is_pos = t - n_train < rel.test_pos.size();
      auto f = features_of(t);
      const double prob = model.predict_proba(f);
      (is_pos ? pos_probs : neg_probs).push_back(prob);
      preds.push_back(prob >= 0.5 ? 1 : -1);
      labels.push_back(is_pos ? 1 : -1);
    }
    const double method_auc =
        options.auc_samples == 0
            ? auc(pos_probs, neg_probs)
            : sampled_auc(pos_probs, neg_probs, options.auc_samples,
                          splitmix64(spec.master_seed ^ 0xa0cULL) ^
                              splitmix64(std::uint64_t(index) + 1));
    outcome.auc.push_back(method_auc);
    outcome.acc.push_back(accuracy(preds, labels));
  }
  return outcome;
}

}  // namespace

std::vector<MethodResult> run_sweep(const SignedGraph& graph,
                                    std::span<const MethodSpec> methods,
                                    const SplitSpec& spec,
                                    const TrainConfig& train_config,
                                    const EvalOptions& options) {
  if (methods.empty()) throw std::invalid_argument("run_sweep: no methods");
  if (spec.realizations <= 0)
    throw std::invalid_argument("run_sweep: realizations must be positive");

  std::vector<RealizationOutcome> outcomes(std::size_t(spec.realizations));
  const int threads =
      std::max(1, std::min(options.threads, spec.realizations));

  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&]() {
    while (!failed.load()) {
      const int index = next.fetch_add(1);
      if (index >= spec.realizations) break;
      try {
        outcomes[std::size_t(index)] = evaluate_realization(
            graph, methods, spec, train_config, options, index);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true);
      }
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  std::vector<MethodResult> results(methods.size());
  for (std::size_t m = 0; m < methods.size(); ++m) {
    auto& res = results[m];
    res.method = methods[m];
    for (const auto& outcome : outcomes) {
      res.auc_per_realization.push_back(outcome.auc[m]);
      res.acc_per_realization.push_back(outcome.acc[m]);
    }
    res.mean_auc = mean_of(res.auc_per_realization);
    res.std_auc = std_of(res.auc_per_realization, res.mean_auc);
    res.mean_acc = mean_of(res.acc_per_realization);
    res.std_acc = std_of(res.acc_per_realization, res.mean_acc);
  }
  return results;
}

MethodResult run_experiment(const SignedGraph& graph, const MethodSpec& method,
                            const SplitSpec& spec, const TrainConfig& train_config,
                            const EvalOptions& options) {
  return run_sweep(graph, {&method, 1}, spec, train_config, options)[0];
}

}  // namespace signmotif
