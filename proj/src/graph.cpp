#include "signmotif/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace signmotif {

SignedGraph SignedGraph::from_records(const std::vector<DirectedSignRecord>& records) {
  // Collect the sign evidence per unordered name pair. A pair survives only
  // if all records for it (both directions) agree on the sign.
  std::map<std::pair<std::string, std::string>, unsigned> evidence;
  for (const auto& rec : records) {
    if (rec.source == rec.target) continue;  // no self-loops
    auto key = rec.source < rec.target ? std::make_pair(rec.source, rec.target)
                                       : std::make_pair(rec.target, rec.source);
    evidence[key] |= rec.sign == Sign::Positive ? 1u : 2u;
  }

  std::set<std::string> surviving_nodes;
  for (const auto& [pair, mask] : evidence) {
    if (mask == 3u) continue;  // conflicting signs: unreliable, removed
    surviving_nodes.insert(pair.first);
    surviving_nodes.insert(pair.second);
  }

  SignedGraph g;
  g.names_.assign(surviving_nodes.begin(), surviving_nodes.end());
  for (NodeId i = 0; i < g.names_.size(); ++i) g.name_index_[g.names_[i]] = i;

  for (const auto& [pair, mask] : evidence) {
    if (mask == 3u) continue;
    Link link;
    NodeId a = g.name_index_.at(pair.first);
    NodeId b = g.name_index_.at(pair.second);
    link.u = std::min(a, b);
    link.v = std::max(a, b);
    link.sign = mask == 1u ? Sign::Positive : Sign::Negative;
    g.links_.push_back(link);
  }
  std::sort(g.links_.begin(), g.links_.end(), [](const Link& a, const Link& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });

  g.build_index();
  return g;
}

void SignedGraph::build_index() {
  const std::size_t n = names_.size();
  std::vector<std::size_t> deg(n, 0);
  for (const Link& l : links_) {
    ++deg[l.u];
    ++deg[l.v];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] = offsets_[i] + deg[i];
  adjacency_.resize(links_.size() * 2);

  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  link_by_pair_.reserve(links_.size() * 2);
  for (LinkId id = 0; id < links_.size(); ++id) {
    const Link& l = links_[id];
    adjacency_[cursor[l.u]++] = {l.v, id};
    adjacency_[cursor[l.v]++] = {l.u, id};
    link_by_pair_.emplace(pair_key(l.u, l.v), id);
  }
  for (NodeId i = 0; i < n; ++i) {
    std::sort(adjacency_.begin() + offsets_[i], adjacency_.begin() + offsets_[i + 1],
              [](const AdjEntry& a, const AdjEntry& b) { return a.to < b.to; });
  }
}

std::optional<NodeId> SignedGraph::find_node(std::string_view name) const {
  auto it = name_index_.find(std::string(name));
  if (it == name_index_.end()) return std::nullopt;
  return it->second;
}

GraphStats SignedGraph::stats() const {
  GraphStats s;
  s.node_count = node_count();
  s.link_count = link_count();
  if (s.link_count > 0) {
    std::size_t pos = 0;
    for (const Link& l : links_)
      if (l.sign == Sign::Positive) ++pos;
    s.f_plus = double(pos) / double(s.link_count);
    s.f_minus = double(s.link_count - pos) / double(s.link_count);
  }
  return s;
}

bool SignedGraph::operator==(const SignedGraph& other) const {
  if (names_ != other.names_) return false;
  if (links_.size() != other.links_.size()) return false;
  for (std::size_t i = 0; i < links_.size(); ++i) {
    if (links_[i].u != other.links_[i].u || links_[i].v != other.links_[i].v ||
        links_[i].sign != other.links_[i].sign)
      return false;
  }
  return true;
}

}  // namespace signmotif
