#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "signmotif/graph.hpp"
#include "signmotif/predictor.hpp"

namespace signmotif {

/// The structural unit whose influence on a target link is scored: the
/// common-neighbor node for triad predictors, the opposite (neighboring)
/// link for quad predictors.
struct NeighborEntity {
  MotifKind kind = MotifKind::Triad;
  NodeId first = kInvalidNode;   // triad: the node M; quad: one endpoint
  NodeId second = kInvalidNode;  // triad: == first; quad: other endpoint

  static NeighborEntity node(NodeId m) { return {MotifKind::Triad, m, m}; }
  static NeighborEntity link(NodeId c, NodeId d) {
    return {MotifKind::Quad, c < d ? c : d, c < d ? d : c};
  }
  bool operator==(const NeighborEntity&) const = default;
};

struct EntityCounts {
  std::int64_t pos = 0;
  std::int64_t neg = 0;
  bool operator==(const EntityCounts&) const = default;
};

struct MatchOptions {
  // When set, quad instances with a chord between the path's outer nodes
  // and the far entity endpoint are disqualified (induced matching).
  // Triangles are complete, so the flag does not affect triad predictors.
  bool induced = false;
};

/// All entities that form the given predictor with target pair (a, b) using
/// known-sign context links only. The pair (a, b) itself need not be a link.
/// Quad entities are reported once even when both path orientations match.
std::vector<NeighborEntity> enumerate_entities(const MaskedGraph& view, NodeId a,
                                               NodeId b, Predictor predictor,
                                               MatchOptions options = {});

/// Counts the predictor's instances that contain the entity, split by the
/// known sign of the instance's target-role link. Instances whose
/// target-role link equals `exclude` or has a hidden sign are skipped.
EntityCounts count_plain(const MaskedGraph& view, Predictor predictor,
                         const NeighborEntity& entity,
                         std::optional<LinkId> exclude = std::nullopt,
                         MatchOptions options = {});

/// Like count_plain with the target pair excluded, restricted to instances
/// sharing at least one of the target instance's context links (triads: the
/// links joining a/b to the entity; quads: the connector links of matching
/// orientations — the shared entity link does not by itself qualify).
/// Throws std::invalid_argument if the entity does not form the predictor
/// with (a, b).
EntityCounts count_cl(const MaskedGraph& view, Predictor predictor,
                      const NeighborEntity& entity, NodeId a, NodeId b,
                      MatchOptions options = {});

/// The complement restriction: instances containing the entity but none of
/// the target instance's context links.
EntityCounts count_cn(const MaskedGraph& view, Predictor predictor,
                      const NeighborEntity& entity, NodeId a, NodeId b,
                      MatchOptions options = {});

/// Fraction of links occupying the target role in at least one instance of
/// the predictor. Throws std::invalid_argument on an empty graph.
double motif_coverage(const SignedGraph& graph, Predictor predictor,
                      MatchOptions options = {});

/// Per-predictor aggregate for one target pair: entity-set size and the
/// summed log smoothed ratios for each counting mode. One pass over the
/// target's neighborhood serves all nine predictors; scoring reads from it.
struct PredictorProfile {
  std::int64_t entity_count = 0;
  double sum_log_plain = 0.0;  // plain counts with the target excluded
  double sum_log_cl = 0.0;
  double sum_log_cn = 0.0;
};

using TargetProfile = std::array<PredictorProfile, kNumPredictors>;

TargetProfile target_profile(const MaskedGraph& view, NodeId a, NodeId b,
                             bool triads = true, bool quads = true,
                             MatchOptions options = {});

}  // namespace signmotif
