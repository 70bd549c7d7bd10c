#include "signmotif/brute_force.hpp"

#include <algorithm>
#include <stdexcept>

namespace signmotif {
namespace {

constexpr std::size_t kMaxLinks = 2000;

void check_guard(const SignedGraph& g) {
  if (g.link_count() > kMaxLinks)
    throw std::invalid_argument("brute force guard: graph exceeds 2000 links");
}

struct LinkSet {
  std::vector<LinkId> ids;
  void add(LinkId li) { ids.push_back(li); }
  bool intersects(const LinkSet& other) const {
    for (LinkId a : ids)
      for (LinkId b : other.ids)
        if (a == b) return true;
    return false;
  }
};

// Context links of the target instance(s) formed by the entity with (a, b):
// triads: the two entity links; quads: the connector links of matching
// orientations, the entity link itself excluded. Empty -> entity invalid.
LinkSet target_context_links(const MaskedGraph& view, Predictor p,
                             const NeighborEntity& entity, NodeId a, NodeId b,
                             MatchOptions options) {
  LinkSet out;
  const SignedGraph& g = view.graph();
  if (entity.kind == MotifKind::Triad) {
    const NodeId m = entity.first;
    if (m == a || m == b) return out;
    auto li_am = g.find_link(a, m);
    auto li_bm = g.find_link(b, m);
    if (!li_am || !li_bm) return out;
    auto s_am = view.known_sign(*li_am);
    auto s_bm = view.known_sign(*li_bm);
    if (!s_am || !s_bm) return out;
    if (triad_predictor(*s_am, *s_bm) != p) return out;
    out.add(*li_am);
    out.add(*li_bm);
    return out;
  }
  for (int flip = 0; flip < 2; ++flip) {
    const NodeId near = flip ? entity.second : entity.first;
    const NodeId far = flip ? entity.first : entity.second;
    if (near == a || near == b || far == a || far == b) continue;
    auto li_an = g.find_link(a, near);
    auto li_nf = g.find_link(near, far);
    auto li_fb = g.find_link(far, b);
    if (!li_an || !li_nf || !li_fb) continue;
    auto s_an = view.known_sign(*li_an);
    auto s_nf = view.known_sign(*li_nf);
    auto s_fb = view.known_sign(*li_fb);
    if (!s_an || !s_nf || !s_fb) continue;
    if (quad_predictor(*s_an, *s_nf, *s_fb) != p) continue;
    if (options.induced && (g.has_link(a, far) || g.has_link(near, b))) continue;
    out.add(*li_an);
    out.add(*li_fb);
  }
  return out;
}

// Every instance of predictor `p` containing the entity, as the full link
// set plus the target-role link's known sign.
template <typename Visitor>
void for_each_instance(const MaskedGraph& view, Predictor p,
                       const NeighborEntity& entity, MatchOptions options,
                       Visitor&& visit) {
  const SignedGraph& g = view.graph();
  const NodeId n = NodeId(g.node_count());
  if (entity.kind == MotifKind::Triad) {
    const NodeId m = entity.first;
    for (NodeId x = 0; x < n; ++x) {
      if (x == m) continue;
      for (NodeId y = x + 1; y < n; ++y) {
        if (y == m) continue;
        auto li_xm = g.find_link(x, m);
        auto li_ym = g.find_link(y, m);
        auto li_xy = g.find_link(x, y);
        if (!li_xm || !li_ym || !li_xy) continue;
        auto s_xm = view.known_sign(*li_xm);
        auto s_ym = view.known_sign(*li_ym);
        if (!s_xm || !s_ym) continue;
        if (triad_predictor(*s_xm, *s_ym) != p) continue;
        auto s_xy = view.known_sign(*li_xy);
        if (!s_xy) continue;
        LinkSet links;
        links.add(*li_xm);
        links.add(*li_ym);
        links.add(*li_xy);
        visit(links, *li_xy, *s_xy);
      }
    }
    return;
  }
  const NodeId c = entity.first, d = entity.second;
  auto li_cd = g.find_link(c, d);
  if (!li_cd) return;
  auto s_cd = view.known_sign(*li_cd);
  if (!s_cd) return;
  for (NodeId x = 0; x < n; ++x) {
    if (x == c || x == d) continue;
    for (NodeId y = x + 1; y < n; ++y) {
      if (y == c || y == d) continue;
      auto li_xy = g.find_link(x, y);
      if (!li_xy) continue;
      auto s_xy = view.known_sign(*li_xy);
      // Two side assignments of the path ends to the entity endpoints.
      for (int flip = 0; flip < 2; ++flip) {
        const NodeId near = flip ? d : c;
        const NodeId far = flip ? c : d;
        auto li_xn = g.find_link(x, near);
        auto li_fy = g.find_link(far, y);
        if (!li_xn || !li_fy) continue;
        auto s_xn = view.known_sign(*li_xn);
        auto s_fy = view.known_sign(*li_fy);
        if (!s_xn || !s_fy) continue;
        if (quad_predictor(*s_xn, *s_cd, *s_fy) != p) continue;
        if (options.induced && (g.has_link(x, far) || g.has_link(y, near))) continue;
        if (!s_xy) continue;
        LinkSet links;
        links.add(*li_xn);
        links.add(*li_cd);
        links.add(*li_fy);
        links.add(*li_xy);
        visit(links, *li_xy, *s_xy);
      }
    }
  }
}

}  // namespace

EntityCounts brute_force_counts(const MaskedGraph& view, Predictor predictor,
                                const NeighborEntity& entity, NodeId a, NodeId b,
                                CountMode mode, MatchOptions options) {
  check_guard(view.graph());
  if (predictor_kind(predictor) != entity.kind)
    throw std::invalid_argument("entity variant does not match predictor kind");

  LinkSet context;
  if (mode != CountMode::Plain) {
    context = target_context_links(view, predictor, entity, a, b, options);
    if (context.ids.empty())
      throw std::invalid_argument("entity does not form the predictor with the target");
  }
  const auto target_li = view.graph().find_link(a, b);

  EntityCounts counts;
  for_each_instance(view, predictor, entity, options,
                    [&](const LinkSet& links, LinkId role_link, Sign role_sign) {
                      if (target_li && role_link == *target_li) return;
                      if (mode == CountMode::CommonLink && !links.intersects(context))
                        return;
                      if (mode == CountMode::CommonNode && links.intersects(context))
                        return;
                      if (role_sign == Sign::Positive)
                        ++counts.pos;
                      else
                        ++counts.neg;
                    });
  return counts;
}

std::vector<NeighborEntity> brute_force_entities(const MaskedGraph& view, NodeId a,
                                                 NodeId b, Predictor predictor,
                                                 MatchOptions options) {
  check_guard(view.graph());
  const SignedGraph& g = view.graph();
  const NodeId n = NodeId(g.node_count());
  std::vector<NeighborEntity> out;
  if (predictor_kind(predictor) == MotifKind::Triad) {
    for (NodeId m = 0; m < n; ++m) {
      NeighborEntity e = NeighborEntity::node(m);
      if (!target_context_links(view, predictor, e, a, b, options).ids.empty())
        out.push_back(e);
    }
  } else {
    for (NodeId c = 0; c < n; ++c) {
      for (NodeId d = c + 1; d < n; ++d) {
        if (!g.has_link(c, d)) continue;
        NeighborEntity e = NeighborEntity::link(c, d);
        if (!target_context_links(view, predictor, e, a, b, options).ids.empty())
          out.push_back(e);
      }
    }
  }
  return out;
}

double brute_force_coverage(const SignedGraph& graph, Predictor predictor,
                            MatchOptions options) {
  check_guard(graph);
  if (graph.link_count() == 0)
    throw std::invalid_argument("coverage of an empty graph");
  const MaskedGraph view(graph);
  std::size_t covered = 0;
  for (const auto& link : graph.links()) {
    bool found = false;
    if (predictor_kind(predictor) == MotifKind::Triad) {
      for (NodeId m = 0; m < graph.node_count() && !found; ++m)
        found = !target_context_links(view, predictor, NeighborEntity::node(m),
                                      link.u, link.v, options)
                     .ids.empty();
    } else {
      for (NodeId c = 0; c < graph.node_count() && !found; ++c)
        for (NodeId d = c + 1; d < graph.node_count() && !found; ++d)
          if (graph.has_link(c, d))
            found = !target_context_links(view, predictor,
                                          NeighborEntity::link(c, d), link.u,
                                          link.v, options)
                         .ids.empty();
    }
    if (found) ++covered;
  }
  return double(covered) / double(graph.link_count());
}

}  // namespace signmotif
