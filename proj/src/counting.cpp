#include "signmotif/counting.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace signmotif {
namespace {

struct ClSplit {
  EntityCounts cl;
  EntityCounts cn;
  EntityCounts total() const { return {cl.pos + cn.pos, cl.neg + cn.neg}; }
};

void tally(EntityCounts& c, Sign s) {
  if (s == Sign::Positive)
    ++c.pos;
  else
    ++c.neg;
}

// Instances of predictor `p` around the common-neighbor entity `m`: links
// (x, y) with both endpoints adjacent to m, context signs (x,m),(y,m)
// matching the pattern, and a known target-role sign. The CL side collects
// instances whose context touches `a` or `b`.
ClSplit triad_instances(const MaskedGraph& view, NodeId m, Predictor p,
                        std::optional<LinkId> exclude, NodeId a, NodeId b) {
  ClSplit split;
  const SignedGraph& g = view.graph();
  for (const auto& [x, li_xm] : g.neighbors(m)) {
    auto s_xm = view.known_sign(li_xm);
    if (!s_xm) continue;
    for (const auto& [y, li_xy] : g.neighbors(x)) {
      if (y <= x || y == m) continue;  // each unordered pair once
      auto li_ym = g.find_link(y, m);
      if (!li_ym) continue;
      auto s_ym = view.known_sign(*li_ym);
      if (!s_ym) continue;
      if (triad_predictor(*s_xm, *s_ym) != p) continue;
      if (exclude && li_xy == *exclude) continue;
      auto s_xy = view.known_sign(li_xy);
      if (!s_xy) continue;
      const bool shares_context = x == a || x == b || y == a || y == b;
      tally(shares_context ? split.cl : split.cn, *s_xy);
    }
  }
  return split;
}

// Connector links of the target instance(s) for a quad entity; at most two
// per matching orientation.
struct ConnSet {
  std::array<LinkId, 4> links{kInvalidLink, kInvalidLink, kInvalidLink, kInvalidLink};
  int size = 0;
  void add(LinkId li) { links[size++] = li; }
  bool contains(LinkId li) const {
    for (int i = 0; i < size; ++i)
      if (links[i] == li) return true;
    return false;
  }
};

// Instances of predictor `p` around the entity link (c, d): paths x-c-d-y
// (either assignment of path ends to entity endpoints) whose context signs
// match the pattern and whose target-role link (x, y) has a known sign.
// The CL side collects instances with a connector in `conn`.
ClSplit quad_instances(const MaskedGraph& view, NodeId c, NodeId d, Predictor p,
                       std::optional<LinkId> exclude, const ConnSet& conn,
                       MatchOptions options) {
  ClSplit split;
  const SignedGraph& g = view.graph();
  auto li_cd = g.find_link(c, d);
  if (!li_cd) return split;
  auto s_cd = view.known_sign(*li_cd);
  if (!s_cd) return split;

  for (const auto& [x, li_xc] : g.neighbors(c)) {
    if (x == d) continue;
    auto s_xc = view.known_sign(li_xc);
    if (!s_xc) continue;
    for (const auto& [y, li_xy] : g.neighbors(x)) {
      if (y == c || y == d) continue;
      auto li_yd = g.find_link(y, d);
      if (!li_yd) continue;
      auto s_yd = view.known_sign(*li_yd);
      if (!s_yd) continue;
      if (quad_predictor(*s_xc, *s_cd, *s_yd) != p) continue;
      if (exclude && li_xy == *exclude) continue;
      auto s_xy = view.known_sign(li_xy);
      if (!s_xy) continue;
      if (options.induced && (g.has_link(x, d) || g.has_link(y, c))) continue;
      const bool shares_context = conn.contains(li_xc) || conn.contains(*li_yd);
      tally(shares_context ? split.cl : split.cn, *s_xy);
    }
  }
  return split;
}

// Whether node m forms the triad predictor with the target pair (a, b).
bool triad_entity_matches(const MaskedGraph& view, NodeId a, NodeId b, NodeId m,
                          Predictor p) {
  if (m == a || m == b) return false;
  auto s_am = view.known_sign(a, m);
  if (!s_am) return false;
  auto s_bm = view.known_sign(b, m);
  if (!s_bm) return false;
  return triad_predictor(*s_am, *s_bm) == p;
}

// Connector links of the orientations of entity (c, d) matching predictor
// `p` for target (a, b); empty set means the entity does not form p.
ConnSet quad_target_conn(const MaskedGraph& view, NodeId a, NodeId b, NodeId c,
                         NodeId d, Predictor p, MatchOptions options) {
  ConnSet conn;
  const SignedGraph& g = view.graph();
  if (c == a || c == b || d == a || d == b) return conn;
  auto s_cd = view.known_sign(c, d);
  if (!s_cd) return conn;
  auto try_orientation = [&](NodeId near, NodeId far) {
    auto li_an = g.find_link(a, near);
    if (!li_an) return;
    auto s_an = view.known_sign(*li_an);
    if (!s_an) return;
    auto li_fb = g.find_link(far, b);
    if (!li_fb) return;
    auto s_fb = view.known_sign(*li_fb);
    if (!s_fb) return;
    if (quad_predictor(*s_an, *s_cd, *s_fb) != p) return;
    if (options.induced && (g.has_link(a, far) || g.has_link(near, b))) return;
    conn.add(*li_an);
    conn.add(*li_fb);
  };
  try_orientation(c, d);
  try_orientation(d, c);
  return conn;
}

void require_target(const SignedGraph& g, NodeId a, NodeId b) {
  if (a >= g.node_count() || b >= g.node_count() || a == b)
    throw std::invalid_argument("invalid target pair");
}

void require_entity_kind(Predictor p, const NeighborEntity& e) {
  if (predictor_kind(p) != e.kind)
    throw std::invalid_argument("entity variant does not match predictor kind");
}

double log_smoothed(const EntityCounts& c) {
  return std::log(double(c.pos + 1) / double(c.neg + 1));
}

}  // namespace

std::vector<NeighborEntity> enumerate_entities(const MaskedGraph& view, NodeId a,
                                               NodeId b, Predictor predictor,
                                               MatchOptions options) {
  const SignedGraph& g = view.graph();
  require_target(g, a, b);
  std::vector<NeighborEntity> entities;
  if (predictor_kind(predictor) == MotifKind::Triad) {
    for (const auto& [m, li_am] : g.neighbors(a)) {
      if (m == b) continue;
      if (triad_entity_matches(view, a, b, m, predictor))
        entities.push_back(NeighborEntity::node(m));
    }
  } else {
    std::unordered_map<std::uint64_t, bool> seen;
    for (const auto& [c, li_ac] : g.neighbors(a)) {
      if (c == b) continue;
      if (!view.known_sign(li_ac)) continue;
      for (const auto& [d, li_cd] : g.neighbors(c)) {
        if (d == a || d == b) continue;
        const std::uint64_t key =
            (std::uint64_t(std::min(c, d)) << 32) | std::max(c, d);
        if (seen.count(key)) continue;
        ConnSet conn = quad_target_conn(view, a, b, c, d, predictor, options);
        if (conn.size > 0) {
          seen.emplace(key, true);
          entities.push_back(NeighborEntity::link(c, d));
        }
      }
    }
  }
  return entities;
}

EntityCounts count_plain(const MaskedGraph& view, Predictor predictor,
                         const NeighborEntity& entity,
                         std::optional<LinkId> exclude, MatchOptions options) {
  require_entity_kind(predictor, entity);
  if (entity.kind == MotifKind::Triad) {
    return triad_instances(view, entity.first, predictor, exclude, kInvalidNode,
                           kInvalidNode)
        .total();
  }
  return quad_instances(view, entity.first, entity.second, predictor, exclude,
                        ConnSet{}, options)
      .total();
}

namespace {

ClSplit target_split(const MaskedGraph& view, Predictor predictor,
                     const NeighborEntity& entity, NodeId a, NodeId b,
                     MatchOptions options) {
  require_entity_kind(predictor, entity);
  require_target(view.graph(), a, b);
  const auto exclude = view.graph().find_link(a, b);
  if (entity.kind == MotifKind::Triad) {
    if (!triad_entity_matches(view, a, b, entity.first, predictor))
      throw std::invalid_argument("entity does not form the predictor with the target");
    return triad_instances(view, entity.first, predictor, exclude, a, b);
  }
  ConnSet conn = quad_target_conn(view, a, b, entity.first, entity.second,
                                  predictor, options);
  if (conn.size == 0)
    throw std::invalid_argument("entity does not form the predictor with the target");
  return quad_instances(view, entity.first, entity.second, predictor, exclude,
                        conn, options);
}

}  // namespace

EntityCounts count_cl(const MaskedGraph& view, Predictor predictor,
                      const NeighborEntity& entity, NodeId a, NodeId b,
                      MatchOptions options) {
  return target_split(view, predictor, entity, a, b, options).cl;
}

EntityCounts count_cn(const MaskedGraph& view, Predictor predictor,
                      const NeighborEntity& entity, NodeId a, NodeId b,
                      MatchOptions options) {
  return target_split(view, predictor, entity, a, b, options).cn;
}

double motif_coverage(const SignedGraph& graph, Predictor predictor,
                      MatchOptions options) {
  if (graph.link_count() == 0)
    throw std::invalid_argument("motif_coverage: graph has no links");
  const MaskedGraph view(graph);
  std::size_t covered = 0;
  for (const auto& link : graph.links()) {
    const NodeId a = link.u, b = link.v;
    bool found = false;
    if (predictor_kind(predictor) == MotifKind::Triad) {
      for (const auto& [m, li] : graph.neighbors(a)) {
        if (m == b) continue;
        if (triad_entity_matches(view, a, b, m, predictor)) {
          found = true;
          break;
        }
      }
    } else {
      for (const auto& [c, li_ac] : graph.neighbors(a)) {
        if (found) break;
        if (c == b) continue;
        for (const auto& [d, li_cd] : graph.neighbors(c)) {
          if (d == a || d == b) continue;
          if (quad_target_conn(view, a, b, c, d, predictor, options).size > 0) {
            found = true;
            break;
          }
        }
      }
    }
    if (found) ++covered;
  }
  return double(covered) / double(graph.link_count());
}

TargetProfile target_profile(const MaskedGraph& view, NodeId a, NodeId b,
                             bool triads, bool quads, MatchOptions options) {
  const SignedGraph& g = view.graph();
  require_target(g, a, b);
  TargetProfile profile{};
  const auto target_li = g.find_link(a, b);

  auto accumulate = [](PredictorProfile& pp, const ClSplit& split) {
    ++pp.entity_count;
    pp.sum_log_plain += log_smoothed(split.total());
    pp.sum_log_cl += log_smoothed(split.cl);
    pp.sum_log_cn += log_smoothed(split.cn);
  };

  if (triads) {
    for (const auto& [m, li_am] : g.neighbors(a)) {
      if (m == b) continue;
      auto s_am = view.known_sign(li_am);
      if (!s_am) continue;
      auto li_mb = g.find_link(m, b);
      if (!li_mb) continue;
      auto s_mb = view.known_sign(*li_mb);
      if (!s_mb) continue;
      const Predictor p = triad_predictor(*s_am, *s_mb);
      accumulate(profile[predictor_index(p)],
                 triad_instances(view, m, p, target_li, a, b));
    }
  }

  if (quads) {
    // Per entity link, the matching orientations grouped by pattern with
    // their connector links (an entity can serve two quad predictors).
    struct Entry {
      Predictor p;
      ConnSet conn;
    };
    struct QuadEntity {
      NodeId c, d;
      std::array<Entry, 2> entries;
      int n_entries = 0;
    };
    std::unordered_map<std::uint64_t, QuadEntity> entities;

    for (const auto& [c, li_ac] : g.neighbors(a)) {
      if (c == b) continue;
      auto s_ac = view.known_sign(li_ac);
      if (!s_ac) continue;
      for (const auto& [d, li_cd] : g.neighbors(c)) {
        if (d == a || d == b) continue;
        auto s_cd = view.known_sign(li_cd);
        if (!s_cd) continue;
        auto li_db = g.find_link(d, b);
        if (!li_db) continue;
        auto s_db = view.known_sign(*li_db);
        if (!s_db) continue;
        if (options.induced && (g.has_link(a, d) || g.has_link(c, b))) continue;
        const Predictor p = quad_predictor(*s_ac, *s_cd, *s_db);
        const std::uint64_t key =
            (std::uint64_t(std::min(c, d)) << 32) | std::max(c, d);
        auto& ent = entities[key];
        ent.c = std::min(c, d);
        ent.d = std::max(c, d);
        Entry* entry = nullptr;
        for (int i = 0; i < ent.n_entries; ++i)
          if (ent.entries[i].p == p) entry = &ent.entries[i];
        if (!entry) {
          entry = &ent.entries[ent.n_entries++];
          entry->p = p;
        }
        entry->conn.add(li_ac);
        entry->conn.add(*li_db);
      }
    }

    for (const auto& [key, ent] : entities) {
      for (int i = 0; i < ent.n_entries; ++i) {
        const Entry& entry = ent.entries[i];
        accumulate(profile[predictor_index(entry.p)],
                   quad_instances(view, ent.c, ent.d, entry.p, target_li,
                                  entry.conn, options));
      }
    }
  }
  return profile;
}

}  // namespace signmotif
