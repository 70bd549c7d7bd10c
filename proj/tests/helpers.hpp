#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "signmotif/graph.hpp"
#include "signmotif/io.hpp"

namespace signmotif::testing {

struct LinkSpec {
  std::string u, v;
  int sign;
};

inline SignedGraph make_graph(const std::vector<LinkSpec>& links) {
  std::vector<DirectedSignRecord> records;
  for (const auto& l : links)
    records.push_back({l.u, l.v, l.sign > 0 ? Sign::Positive : Sign::Negative});
  return SignedGraph::from_records(records);
}

inline std::string fixture_path(const std::string& name) {
  return std::string(SIGNMOTIF_TEST_FIXTURE_DIR) + "/" + name;
}

inline SignedGraph load_fig2() {
  return load_graph_file(fixture_path("fig2.tsv"), InputFormat::CanonicalTsv);
}

// Small xorshift-style generator so fuzz cases are identical on every
// platform regardless of the standard library.
class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : state_(seed * 2654435761u + 1) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  double uniform() { return double(next() >> 11) / 9007199254740992.0; }

 private:
  std::uint64_t state_;
};

/// Erdos-Renyi style signed graph over node names "n00".."nNN".
inline SignedGraph random_graph(TestRng& rng, std::size_t n_nodes,
                                double link_prob, double neg_prob) {
  std::vector<DirectedSignRecord> records;
  for (std::size_t i = 0; i < n_nodes; ++i) {
    for (std::size_t j = i + 1; j < n_nodes; ++j) {
      if (rng.uniform() >= link_prob) continue;
      const Sign s = rng.uniform() < neg_prob ? Sign::Negative : Sign::Positive;
      auto name = [](std::size_t k) {
        std::string s = "n00";
        s[1] = char('0' + k / 10);
        s[2] = char('0' + k % 10);
        return s;
      };
      records.push_back({name(i), name(j), s});
    }
  }
  return SignedGraph::from_records(records);
}

}  // namespace signmotif::testing
