#pragma once

#include <vector>

#include "signmotif/counting.hpp"

namespace signmotif {

enum class CountMode { Plain, CommonLink, CommonNode };

/// Exhaustive reference implementations of the motif counters. They iterate
/// every node triple/quadruple literally and apply the mode's filter as
/// written, with no shared code with the optimized counters. Guarded to
/// graphs of at most 2000 links (throws std::invalid_argument beyond).

EntityCounts brute_force_counts(const MaskedGraph& view, Predictor predictor,
                                const NeighborEntity& entity, NodeId a, NodeId b,
                                CountMode mode, MatchOptions options = {});

std::vector<NeighborEntity> brute_force_entities(const MaskedGraph& view, NodeId a,
                                                 NodeId b, Predictor predictor,
                                                 MatchOptions options = {});

double brute_force_coverage(const SignedGraph& graph, Predictor predictor,
                            MatchOptions options = {});

}  // namespace signmotif
