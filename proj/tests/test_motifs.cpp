#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "signmotif/brute_force.hpp"
#include "signmotif/counting.hpp"

using namespace signmotif;
using signmotif::testing::make_graph;
using signmotif::testing::TestRng;

namespace {

NodeId node(const SignedGraph& g, const std::string& name) {
  return *g.find_node(name);
}

std::vector<NeighborEntity> sorted(std::vector<NeighborEntity> v) {
  std::sort(v.begin(), v.end(), [](const NeighborEntity& a, const NeighborEntity& b) {
    return std::tie(a.kind, a.first, a.second) < std::tie(b.kind, b.first, b.second);
  });
  return v;
}

}  // namespace

TEST_SUITE("predictor-catalog") {
  TEST_CASE("nine predictors, three triads, six quads") {
    auto all = catalog();
    CHECK(all.size() == 9);
    int triads = 0, quads = 0;
    for (Predictor p : all)
      (predictor_kind(p) == MotifKind::Triad ? triads : quads)++;
    CHECK(triads == 3);
    CHECK(quads == 6);
  }

  TEST_CASE("labels round-trip") {
    for (Predictor p : catalog())
      CHECK(predictor_from_label(predictor_label(p)) == p);
    CHECK_FALSE(predictor_from_label("T+*").has_value());
    CHECK_FALSE(predictor_from_label("S10").has_value());
  }

  TEST_CASE("s-index labels map through the default assignment") {
    CHECK(predictor_from_label("S1") == Predictor::T_pp);
    CHECK(predictor_from_label("S4") == Predictor::T_pm);
    CHECK(predictor_from_label("S7") == Predictor::T_mm);
    CHECK(predictor_from_label("S2") == Predictor::Q_ppp);
    CHECK(predictor_from_label("S9") == Predictor::Q_mmm);
  }

  TEST_CASE("triad pattern is order-insensitive") {
    CHECK(triad_predictor(Sign::Positive, Sign::Positive) == Predictor::T_pp);
    CHECK(triad_predictor(Sign::Positive, Sign::Negative) == Predictor::T_pm);
    CHECK(triad_predictor(Sign::Negative, Sign::Positive) == Predictor::T_pm);
    CHECK(triad_predictor(Sign::Negative, Sign::Negative) == Predictor::T_mm);
  }

  TEST_CASE("quad pattern is canonical up to path reversal") {
    const Sign P = Sign::Positive, N = Sign::Negative;
    CHECK(quad_predictor(P, P, P) == Predictor::Q_ppp);
    CHECK(quad_predictor(P, P, N) == Predictor::Q_ppm);
    CHECK(quad_predictor(N, P, P) == Predictor::Q_ppm);
    CHECK(quad_predictor(P, N, P) == Predictor::Q_pmp);
    CHECK(quad_predictor(P, N, N) == Predictor::Q_pmm);
    CHECK(quad_predictor(N, N, P) == Predictor::Q_pmm);
    CHECK(quad_predictor(N, P, N) == Predictor::Q_mpm);
    CHECK(quad_predictor(N, N, N) == Predictor::Q_mmm);
    // every reversal pair agrees
    for (Sign a : {P, N})
      for (Sign b : {P, N})
        for (Sign c : {P, N})
          CHECK(quad_predictor(a, b, c) == quad_predictor(c, b, a));
  }
}

TEST_SUITE("counting") {
  TEST_CASE("worked example: hub counts for two masked targets") {
    auto g = signmotif::testing::load_fig2();
    const NodeId A = node(g, "A"), B = node(g, "B"), E = node(g, "E"),
                 F = node(g, "F"), M = node(g, "M");
    const LinkId ab = *g.find_link(A, B);
    const LinkId ef = *g.find_link(E, F);
    MaskedGraph view(g, std::vector<LinkId>{ab, ef});

    const auto entity = NeighborEntity::node(M);
    CHECK(count_plain(view, Predictor::T_pp, entity, ab) == EntityCounts{3, 1});
    CHECK(count_plain(view, Predictor::T_pp, entity, ef) == EntityCounts{3, 1});
    CHECK(count_cl(view, Predictor::T_pp, entity, A, B) == EntityCounts{1, 1});
    CHECK(count_cn(view, Predictor::T_pp, entity, A, B) == EntityCounts{2, 0});
    CHECK(count_cl(view, Predictor::T_pp, entity, E, F) == EntityCounts{2, 0});
    CHECK(count_cn(view, Predictor::T_pp, entity, E, F) == EntityCounts{1, 1});
  }

  TEST_CASE("worked example: entity sets for the masked target") {
    auto g = signmotif::testing::load_fig2();
    const NodeId A = node(g, "A"), B = node(g, "B"), C = node(g, "C"),
                 D = node(g, "D"), M = node(g, "M");
    const LinkId ab = *g.find_link(A, B);
    const LinkId ef = *g.find_link(*g.find_node("E"), *g.find_node("F"));
    MaskedGraph view(g, std::vector<LinkId>{ab, ef});

    CHECK(enumerate_entities(view, A, B, Predictor::T_pp) ==
          std::vector<NeighborEntity>{NeighborEntity::node(M)});
    CHECK(enumerate_entities(view, A, B, Predictor::T_pm).empty());
    CHECK(enumerate_entities(view, A, B, Predictor::Q_ppp) ==
          std::vector<NeighborEntity>{NeighborEntity::link(D, M)});
    CHECK(enumerate_entities(view, A, B, Predictor::Q_ppm) ==
          std::vector<NeighborEntity>{NeighborEntity::link(C, M)});
    CHECK(enumerate_entities(view, A, B, Predictor::Q_mmm).empty());
  }

  TEST_CASE("all-positive 4-path yields one Q+++ entity") {
    auto g = make_graph({{"a", "b", +1}, {"b", "c", +1}, {"c", "d", +1}});
    MaskedGraph view(g);
    auto entities = enumerate_entities(view, node(g, "a"), node(g, "d"),
                                       Predictor::Q_ppp);
    REQUIRE(entities.size() == 1);
    CHECK(entities[0] == NeighborEntity::link(node(g, "b"), node(g, "c")));
  }

  TEST_CASE("symmetry in the target pair") {
    TestRng rng(11);
    for (int trial = 0; trial < 10; ++trial) {
      auto g = signmotif::testing::random_graph(rng, 10, 0.4, 0.4);
      if (g.node_count() < 4) continue;
      MaskedGraph view(g);
      const NodeId a = NodeId(rng.below(g.node_count()));
      NodeId b = NodeId(rng.below(g.node_count()));
      if (a == b) continue;
      for (Predictor p : catalog()) {
        auto fwd = sorted(enumerate_entities(view, a, b, p));
        auto rev = sorted(enumerate_entities(view, b, a, p));
        CHECK(fwd == rev);
        for (const auto& entity : fwd) {
          CHECK(count_cl(view, p, entity, a, b) == count_cl(view, p, entity, b, a));
          CHECK(count_cn(view, p, entity, a, b) == count_cn(view, p, entity, b, a));
        }
      }
    }
  }

  TEST_CASE("partition: cl + cn equals plain with the target excluded") {
    TestRng rng(23);
    int checked = 0;
    for (int trial = 0; trial < 30; ++trial) {
      auto g = signmotif::testing::random_graph(rng, 9, 0.45, 0.35);
      if (g.link_count() == 0) continue;
      const LinkId target = LinkId(rng.below(g.link_count()));
      const NodeId a = g.link(target).u, b = g.link(target).v;
      MaskedGraph view(g, std::vector<LinkId>{target});
      for (Predictor p : catalog()) {
        for (const auto& entity : enumerate_entities(view, a, b, p)) {
          const auto cl = count_cl(view, p, entity, a, b);
          const auto cn = count_cn(view, p, entity, a, b);
          const auto plain = count_plain(view, p, entity, target);
          CHECK(cl.pos + cn.pos == plain.pos);
          CHECK(cl.neg + cn.neg == plain.neg);
          ++checked;
        }
      }
    }
    CHECK(checked > 100);
  }

  TEST_CASE("relabeling nodes does not change counts") {
    TestRng rng(31);
    auto g = signmotif::testing::random_graph(rng, 9, 0.5, 0.4);
    REQUIRE(g.link_count() > 3);

    // Same topology under reversed names; node k becomes node n-1-k.
    std::vector<signmotif::testing::LinkSpec> renamed;
    auto flip = [&](NodeId n) {
      std::size_t k = g.node_count() - 1 - n;
      std::string s = "m00";
      s[1] = char('0' + k / 10);
      s[2] = char('0' + k % 10);
      return s;
    };
    for (const auto& link : g.links())
      renamed.push_back({flip(link.u), flip(link.v), sign_value(link.sign)});
    auto h = make_graph(renamed);
    REQUIRE(h.link_count() == g.link_count());

    MaskedGraph gv(g), hv(h);
    for (Predictor p : catalog()) {
      CHECK(motif_coverage(g, p) == doctest::Approx(motif_coverage(h, p)));
      for (const auto& link : g.links()) {
        const NodeId ha = *h.find_node(flip(link.u));
        const NodeId hb = *h.find_node(flip(link.v));
        CHECK(enumerate_entities(gv, link.u, link.v, p).size() ==
              enumerate_entities(hv, ha, hb, p).size());
      }
    }
  }

  TEST_CASE("hiding more signs never increases an entity's counts") {
    TestRng rng(43);
    for (int trial = 0; trial < 15; ++trial) {
      auto g = signmotif::testing::random_graph(rng, 9, 0.5, 0.35);
      if (g.link_count() < 4) continue;
      std::vector<LinkId> small_mask, big_mask;
      for (LinkId id = 0; id < g.link_count(); ++id) {
        const double r = rng.uniform();
        if (r < 0.15) small_mask.push_back(id);
        if (r < 0.40) big_mask.push_back(id);
      }
      // small_mask is a subset of big_mask by construction
      MaskedGraph small(g, small_mask), big(g, big_mask);
      const NodeId a = NodeId(rng.below(g.node_count()));
      const NodeId b = NodeId((a + 1 + rng.below(g.node_count() - 1)) % g.node_count());
      for (Predictor p : catalog()) {
        for (const auto& entity : enumerate_entities(big, a, b, p)) {
          const auto more = count_plain(big, p, entity);
          const auto fewer = count_plain(small, p, entity);
          CHECK(more.pos <= fewer.pos);
          CHECK(more.neg <= fewer.neg);
        }
      }
    }
  }
}

TEST_SUITE("coverage") {
  TEST_CASE("all-positive triangle covers T++ fully and quads not at all") {
    auto g = make_graph({{"a", "b", +1}, {"b", "c", +1}, {"a", "c", +1}});
    CHECK(motif_coverage(g, Predictor::T_pp) == doctest::Approx(1.0));
    CHECK(motif_coverage(g, Predictor::T_pm) == doctest::Approx(0.0));
    for (Predictor p : catalog())
      if (predictor_kind(p) == MotifKind::Quad)
        CHECK(motif_coverage(g, p) == doctest::Approx(0.0));
  }

  TEST_CASE("triangle-free star has no triad coverage") {
    auto g = make_graph({{"hub", "a", +1}, {"hub", "b", +1}, {"hub", "c", -1}});
    for (Predictor p : {Predictor::T_pp, Predictor::T_pm, Predictor::T_mm})
      CHECK(motif_coverage(g, p) == doctest::Approx(0.0));
  }

  TEST_CASE("all-positive 4-cycle covers Q+++ fully") {
    auto g = make_graph(
        {{"a", "b", +1}, {"b", "c", +1}, {"c", "d", +1}, {"a", "d", +1}});
    CHECK(motif_coverage(g, Predictor::Q_ppp) == doctest::Approx(1.0));
    CHECK(motif_coverage(g, Predictor::T_pp) == doctest::Approx(0.0));
  }

  TEST_CASE("empty graph is rejected") {
    SignedGraph g;
    CHECK_THROWS_AS(motif_coverage(g, Predictor::T_pp), std::invalid_argument);
  }
}

TEST_SUITE("induced") {
  TEST_CASE("a chord disqualifies the quad only in induced mode") {
    // 4-cycle a-b-c-d plus the chord (b, d); target (a, c) is not a link,
    // so Q+++ entities for (a, c) go through paths a-b/d-...-c.
    auto g = make_graph({{"a", "b", +1}, {"b", "c", +1}, {"c", "d", +1},
                         {"a", "d", +1}, {"b", "d", +1}});
    MaskedGraph view(g);
    const NodeId a = node(g, "a"), c = node(g, "c");
    auto plain = enumerate_entities(view, a, c, Predictor::Q_ppp);
    auto induced = enumerate_entities(view, a, c, Predictor::Q_ppp, {true});
    CHECK(plain.size() == 1);  // path a-b? no: a-b-d? entity must be a link
    CHECK(induced.empty());
  }

  TEST_CASE("triads are unaffected by the induced flag") {
    TestRng rng(5);
    auto g = signmotif::testing::random_graph(rng, 8, 0.5, 0.3);
    MaskedGraph view(g);
    for (const auto& link : g.links())
      for (Predictor p : {Predictor::T_pp, Predictor::T_pm, Predictor::T_mm})
        CHECK(enumerate_entities(view, link.u, link.v, p) ==
              enumerate_entities(view, link.u, link.v, p, {true}));
  }
}

TEST_SUITE("oracle") {
  TEST_CASE("optimized counters agree with the exhaustive reference") {
    TestRng rng(97);
    int entities_checked = 0;
    for (int trial = 0; trial < 120; ++trial) {
      auto g = signmotif::testing::random_graph(rng, 8, 0.55, 0.25 + 0.05 * (trial % 8));
      if (g.link_count() == 0) continue;
      std::vector<LinkId> mask;
      for (LinkId id = 0; id < g.link_count(); ++id)
        if (rng.uniform() < 0.2) mask.push_back(id);
      MaskedGraph view(g, mask);
      const bool induced = trial % 2 == 1;
      MatchOptions opts{induced};
      const NodeId a = NodeId(rng.below(g.node_count()));
      const NodeId b = NodeId((a + 1 + rng.below(g.node_count() - 1)) % g.node_count());
      for (Predictor p : catalog()) {
        auto fast = sorted(enumerate_entities(view, a, b, p, opts));
        auto slow = sorted(brute_force_entities(view, a, b, p, opts));
        CHECK(fast == slow);
        for (const auto& entity : fast) {
          CHECK(count_cl(view, p, entity, a, b, opts) ==
                brute_force_counts(view, p, entity, a, b, CountMode::CommonLink, opts));
          CHECK(count_cn(view, p, entity, a, b, opts) ==
                brute_force_counts(view, p, entity, a, b, CountMode::CommonNode, opts));
          auto target = g.find_link(a, b);
          CHECK(count_plain(view, p, entity, target, opts) ==
                brute_force_counts(view, p, entity, a, b, CountMode::Plain, opts));
          ++entities_checked;
        }
      }
    }
    CHECK(entities_checked > 200);
  }

  TEST_CASE("coverage agrees with the exhaustive indicator") {
    TestRng rng(101);
    for (int trial = 0; trial < 10; ++trial) {
      auto g = signmotif::testing::random_graph(rng, 9, 0.4, 0.4);
      if (g.link_count() == 0) continue;
      for (Predictor p : catalog()) {
        CHECK(motif_coverage(g, p) == doctest::Approx(brute_force_coverage(g, p)));
        CHECK(motif_coverage(g, p, {true}) ==
              doctest::Approx(brute_force_coverage(g, p, {true})));
      }
    }
  }

  TEST_CASE("the reference is guarded against large graphs") {
    TestRng rng(3);
    auto g = signmotif::testing::random_graph(rng, 70, 0.95, 0.3);
    REQUIRE(g.link_count() > 2000);
    MaskedGraph view(g);
    CHECK_THROWS_AS(
        brute_force_entities(view, 0, 1, Predictor::T_pp),
        std::invalid_argument);
  }
}

TEST_SUITE("profile") {
  TEST_CASE("target profile matches per-entity counting") {
    TestRng rng(53);
    for (int trial = 0; trial < 10; ++trial) {
      auto g = signmotif::testing::random_graph(rng, 10, 0.45, 0.35);
      if (g.link_count() < 2) continue;
      const LinkId target = LinkId(rng.below(g.link_count()));
      const NodeId a = g.link(target).u, b = g.link(target).v;
      MaskedGraph view(g, std::vector<LinkId>{target});
      const auto profile = target_profile(view, a, b);
      for (Predictor p : catalog()) {
        const auto entities = enumerate_entities(view, a, b, p);
        double plain = 0, cl = 0, cn = 0;
        auto log_ratio = [](EntityCounts c) {
          return std::log(double(c.pos + 1) / double(c.neg + 1));
        };
        for (const auto& entity : entities) {
          plain += log_ratio(count_plain(view, p, entity, target));
          cl += log_ratio(count_cl(view, p, entity, a, b));
          cn += log_ratio(count_cn(view, p, entity, a, b));
        }
        const auto& row = profile[predictor_index(p)];
        CHECK(row.entity_count == std::int64_t(entities.size()));
        CHECK(row.sum_log_plain == doctest::Approx(plain).epsilon(1e-12));
        CHECK(row.sum_log_cl == doctest::Approx(cl).epsilon(1e-12));
        CHECK(row.sum_log_cn == doctest::Approx(cn).epsilon(1e-12));
      }
    }
  }
}
