#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "signmotif/predictor.hpp"

namespace signmotif {

using NodeId = std::uint32_t;
using LinkId = std::uint32_t;

inline constexpr NodeId kInvalidNode = std::numeric_limits<NodeId>::max();
inline constexpr LinkId kInvalidLink = std::numeric_limits<LinkId>::max();

/// One raw directed vote/rating, before undirected conversion.
struct DirectedSignRecord {
  std::string source;
  std::string target;
  Sign sign = Sign::Positive;
};

struct GraphStats {
  std::size_t node_count = 0;
  std::size_t link_count = 0;
  // Unset when the graph has no links.
  std::optional<double> f_plus;
  std::optional<double> f_minus;
};

/// Immutable undirected simple signed graph. Node identifiers are opaque
/// strings mapped to dense indices in lexicographic name order; links are
/// stored once per unordered pair with endpoints u < v.
class SignedGraph {
 public:
  struct Link {
    NodeId u = kInvalidNode;
    NodeId v = kInvalidNode;
    Sign sign = Sign::Positive;
  };

  struct AdjEntry {
    NodeId to = kInvalidNode;
    LinkId link = kInvalidLink;
  };

  SignedGraph() = default;

  /// Converts directed records to the undirected graph: self-loops dropped,
  /// duplicate same-sign records collapsed, pairs with conflicting signs in
  /// any direction removed, nodes without surviving links dropped.
  static SignedGraph from_records(const std::vector<DirectedSignRecord>& records);

  std::size_t node_count() const { return names_.size(); }
  std::size_t link_count() const { return links_.size(); }

  const std::string& node_name(NodeId n) const { return names_.at(n); }
  std::optional<NodeId> find_node(std::string_view name) const;

  const Link& link(LinkId id) const { return links_.at(id); }
  std::span<const Link> links() const { return links_; }

  std::optional<LinkId> find_link(NodeId u, NodeId v) const {
    auto it = link_by_pair_.find(pair_key(u, v));
    if (it == link_by_pair_.end()) return std::nullopt;
    return it->second;
  }
  bool has_link(NodeId u, NodeId v) const { return find_link(u, v).has_value(); }
  Sign sign(LinkId id) const { return links_.at(id).sign; }

  std::span<const AdjEntry> neighbors(NodeId n) const {
    return {adjacency_.data() + offsets_[n], offsets_[n + 1] - offsets_[n]};
  }
  std::size_t degree(NodeId n) const { return offsets_[n + 1] - offsets_[n]; }

  GraphStats stats() const;

  bool operator==(const SignedGraph& other) const;

 private:
  static std::uint64_t pair_key(NodeId u, NodeId v) {
    const NodeId lo = u < v ? u : v;
    const NodeId hi = u < v ? v : u;
    return (std::uint64_t(lo) << 32) | hi;
  }
  void build_index();

  std::vector<std::string> names_;                       // sorted lexicographically
  std::unordered_map<std::string, NodeId> name_index_;
  std::vector<Link> links_;                              // u < v, sorted by (u,v)
  std::vector<AdjEntry> adjacency_;                      // CSR, sorted by `to`
  std::vector<std::size_t> offsets_;
  std::unordered_map<std::uint64_t, LinkId> link_by_pair_;
};

/// Read-only view of a SignedGraph in which a subset of link signs is
/// hidden. Topology is unaffected: hidden links are still present.
class MaskedGraph {
 public:
  explicit MaskedGraph(const SignedGraph& graph)
      : graph_(&graph), hidden_(graph.link_count(), 0) {}

  /// Throws std::out_of_range if any id is not a link of the graph.
  MaskedGraph(const SignedGraph& graph, std::span<const LinkId> hidden)
      : MaskedGraph(graph) {
    for (LinkId id : hidden) {
      if (id >= graph.link_count())
        throw std::out_of_range("MaskedGraph: hidden id is not a link");
      hidden_[id] = 1;
    }
  }

  const SignedGraph& graph() const { return *graph_; }

  bool is_hidden(LinkId id) const { return hidden_[id] != 0; }

  std::optional<Sign> known_sign(LinkId id) const {
    if (hidden_[id]) return std::nullopt;
    return graph_->sign(id);
  }

  std::optional<Sign> known_sign(NodeId u, NodeId v) const {
    auto id = graph_->find_link(u, v);
    if (!id) return std::nullopt;
    return known_sign(*id);
  }

 private:
  const SignedGraph* graph_;
  std::vector<std::uint8_t> hidden_;
};

}  // namespace signmotif
