#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "signmotif/graph.hpp"
#include "signmotif/io.hpp"

using namespace signmotif;
using signmotif::testing::make_graph;

TEST_SUITE("io") {
  TEST_CASE("bitcoin csv rows become directed records") {
    std::istringstream in("7188,1,10,1407470400\n430,1,-2,1376539200\n");
    auto records = parse_records(in, InputFormat::BitcoinCsv);
    REQUIRE(records.size() == 2);
    CHECK(records[0].source == "7188");
    CHECK(records[0].target == "1");
    CHECK(records[0].sign == Sign::Positive);
    CHECK(records[1].sign == Sign::Negative);
  }

  TEST_CASE("bitcoin csv zero ratings are tallied and dropped") {
    std::istringstream in("1,2,0,5\n2,3,4,5\n");
    ParseDiagnostics diag;
    auto records = parse_records(in, InputFormat::BitcoinCsv, &diag);
    CHECK(records.size() == 1);
    CHECK(diag.zero_ratings_dropped == 1);
  }

  TEST_CASE("bitcoin csv malformed rows carry the line number") {
    std::istringstream in("1,2,3,4\nnot,a,row\n");
    try {
      parse_records(in, InputFormat::BitcoinCsv);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }

  TEST_CASE("snap signed tsv skips comments") {
    std::istringstream in("# Directed graph\n# FromNodeId\tToNodeId\tSign\n0\t5\t-1\n0\t6\t1\n");
    auto records = parse_records(in, InputFormat::SnapSignedTsv);
    REQUIRE(records.size() == 2);
    CHECK(records[0].source == "0");
    CHECK(records[0].target == "5");
    CHECK(records[0].sign == Sign::Negative);
  }

  TEST_CASE("snap signed tsv rejects other sign values") {
    std::istringstream in("0\t5\t2\n");
    CHECK_THROWS_AS(parse_records(in, InputFormat::SnapSignedTsv), ParseError);
  }

  TEST_CASE("wiki-rfa blocks parse by key") {
    std::istringstream in(
        "SRC:Guettarda\nTGT:Lord_Roem\nVOT:1\nRES:1\nYEA:2013\n"
        "TXT:Support as nom: a description\nspanning two lines\n"
        "\n"
        "SRC:Zz\nTGT:Aa\nVOT:-1\n"
        "\n"
        "SRC:Q\nTGT:R\nVOT:0\n");
    ParseDiagnostics diag;
    auto records = parse_records(in, InputFormat::WikiRfa, &diag);
    REQUIRE(records.size() == 2);
    CHECK(records[0].source == "Guettarda");
    CHECK(records[0].target == "Lord_Roem");
    CHECK(records[0].sign == Sign::Positive);
    CHECK(records[1].sign == Sign::Negative);
    CHECK(diag.neutral_votes_dropped == 1);
  }

  TEST_CASE("wiki-rfa incomplete record throws") {
    std::istringstream in("SRC:A\nVOT:1\n");
    CHECK_THROWS_AS(parse_records(in, InputFormat::WikiRfa), ParseError);
  }

  TEST_CASE("empty input gives an empty graph") {
    std::istringstream in("");
    auto graph = load_graph(in, InputFormat::CanonicalTsv);
    CHECK(graph.node_count() == 0);
    CHECK(graph.link_count() == 0);
    CHECK_FALSE(graph.stats().f_plus.has_value());
  }

  TEST_CASE("format names round-trip") {
    for (auto f : {InputFormat::BitcoinCsv, InputFormat::SnapSignedTsv,
                   InputFormat::WikiRfa, InputFormat::CanonicalTsv})
      CHECK(input_format_from_name(input_format_name(f)) == f);
    CHECK_FALSE(input_format_from_name("bogus").has_value());
  }
}

TEST_SUITE("graph") {
  TEST_CASE("duplicate same-sign records collapse to one link") {
    auto g = make_graph({{"a", "b", +1}, {"b", "a", +1}, {"a", "b", +1}});
    CHECK(g.link_count() == 1);
    CHECK(g.node_count() == 2);
  }

  TEST_CASE("conflicting signs remove the pair entirely") {
    auto g = make_graph({{"a", "b", +1}, {"b", "a", -1}, {"b", "c", +1}});
    CHECK(g.link_count() == 1);
    // `a` has no surviving link and is dropped.
    CHECK(g.node_count() == 2);
    CHECK_FALSE(g.find_node("a").has_value());
  }

  TEST_CASE("self-loops are dropped") {
    auto g = make_graph({{"a", "a", +1}, {"a", "b", +1}});
    CHECK(g.link_count() == 1);
    CHECK(g.node_count() == 2);
  }

  TEST_CASE("nodes are indexed in lexicographic order and links sorted") {
    auto g = make_graph({{"zeta", "beta", +1}, {"alpha", "zeta", -1}});
    REQUIRE(g.node_count() == 3);
    CHECK(g.node_name(0) == "alpha");
    CHECK(g.node_name(1) == "beta");
    CHECK(g.node_name(2) == "zeta");
    REQUIRE(g.link_count() == 2);
    CHECK(g.link(0).u == 0);  // (alpha, zeta)
    CHECK(g.link(0).v == 2);
    CHECK(g.link(1).u == 1);  // (beta, zeta)
    CHECK(g.link(1).v == 2);
    CHECK(g.sign(0) == Sign::Negative);
  }

  TEST_CASE("stats on a triangle") {
    auto g = make_graph({{"a", "b", +1}, {"b", "c", +1}, {"a", "c", -1}});
    auto s = g.stats();
    CHECK(s.node_count == 3);
    CHECK(s.link_count == 3);
    CHECK(*s.f_plus == doctest::Approx(2.0 / 3.0));
    CHECK(*s.f_minus == doctest::Approx(1.0 / 3.0));
  }

  TEST_CASE("neighbors and degree") {
    auto g = make_graph({{"a", "b", +1}, {"a", "c", -1}, {"b", "c", +1}});
    auto a = *g.find_node("a");
    CHECK(g.degree(a) == 2);
    auto nbrs = g.neighbors(a);
    REQUIRE(nbrs.size() == 2);
    CHECK(nbrs[0].to < nbrs[1].to);
  }

  TEST_CASE("masked view hides signs but not topology") {
    auto g = make_graph({{"a", "b", +1}, {"b", "c", -1}});
    auto ab = *g.find_link(*g.find_node("a"), *g.find_node("b"));
    MaskedGraph view(g, std::vector<LinkId>{ab});
    CHECK_FALSE(view.known_sign(ab).has_value());
    CHECK(view.is_hidden(ab));
    auto bc = *g.find_link(*g.find_node("b"), *g.find_node("c"));
    CHECK(view.known_sign(bc) == Sign::Negative);
    CHECK(g.has_link(g.link(ab).u, g.link(ab).v));
  }

  TEST_CASE("masking an unknown id throws") {
    auto g = make_graph({{"a", "b", +1}});
    CHECK_THROWS_AS(MaskedGraph(g, std::vector<LinkId>{5}),
                    std::out_of_range);
  }
}

TEST_SUITE("canonical-tsv") {
  TEST_CASE("write then read reproduces the graph") {
    signmotif::testing::TestRng rng(7);
    for (int i = 0; i < 20; ++i) {
      auto g = signmotif::testing::random_graph(rng, 10, 0.3, 0.3);
      std::ostringstream out;
      write_canonical_tsv(g, out);
      std::istringstream in(out.str());
      auto g2 = load_graph(in, InputFormat::CanonicalTsv);
      CHECK(g == g2);
    }
  }

  TEST_CASE("rows come out sorted with u < v") {
    auto g = make_graph({{"m", "c", +1}, {"a", "m", -1}, {"b", "a", +1}});
    std::ostringstream out;
    write_canonical_tsv(g, out);
    CHECK(out.str() == "a\tb\t+1\na\tm\t-1\nc\tm\t+1\n");
  }

  TEST_CASE("fig2 fixture round-trips byte for byte") {
    auto g = signmotif::testing::load_fig2();
    CHECK(g.node_count() == 7);
    CHECK(g.link_count() == 12);
    std::ostringstream out;
    write_canonical_tsv(g, out);
    std::ifstream in(signmotif::testing::fixture_path("fig2.tsv"));
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(out.str() == buf.str());
  }
}
