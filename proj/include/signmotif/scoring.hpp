#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "signmotif/counting.hpp"

namespace signmotif {

/// Network-level sign prior over known-sign links.
struct Prior {
  double f_plus = 0.0;
  double f_minus = 0.0;
  double ratio = 0.0;      // f_minus / f_plus
  double log_ratio = 0.0;  // ln(ratio)

  /// Throws std::invalid_argument unless at least one known positive and one
  /// known negative link are present.
  static Prior compute(const MaskedGraph& view);
};

enum class ScoreVariant { Smnb, GsmnbCl, GsmnbCn };

std::string_view score_variant_name(ScoreVariant v);
std::optional<ScoreVariant> score_variant_from_name(std::string_view name);

struct LinkScore {
  double value = 0.0;
  std::int64_t entity_count = 0;
};

/// Laplace-smoothed positive/negative ratio (pos+1)/(neg+1).
inline double smoothed_ratio(const EntityCounts& counts) {
  return double(counts.pos + 1) / double(counts.neg + 1);
}

/// Log-likelihood score for one predictor:
///   |S| * ln(a) + sum over entities of ln((pos+1)/(neg+1))
/// with the counts taken per variant (plain with the target excluded for
/// SMNB, common-link, or common-node). Zero when the entity set is empty.
LinkScore single_motif_score(const MaskedGraph& view, NodeId a, NodeId b,
                             Predictor predictor, ScoreVariant variant,
                             const Prior& prior, MatchOptions options = {});

/// Multi-motif score: the sum of the nine single-motif scores.
LinkScore gmmnb_score(const MaskedGraph& view, NodeId a, NodeId b,
                      ScoreVariant variant, const Prior& prior,
                      MatchOptions options = {});

/// The 9 per-predictor common-link scores in catalog() order.
std::array<double, kNumPredictors> feature_vector(const MaskedGraph& view, NodeId a,
                                                  NodeId b, const Prior& prior,
                                                  MatchOptions options = {});

// Profile-based forms, for callers that batch the counting pass.
LinkScore score_from_profile(const TargetProfile& profile, Predictor predictor,
                             ScoreVariant variant, const Prior& prior);
LinkScore gmmnb_from_profile(const TargetProfile& profile, ScoreVariant variant,
                             const Prior& prior);
std::array<double, kNumPredictors> feature_vector_from_profile(
    const TargetProfile& profile, const Prior& prior);

}  // namespace signmotif
