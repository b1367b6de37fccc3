#include <doctest.h>

#include <set>

#include "dpc/cover.hpp"
#include "dpc/exact.hpp"
#include "dpc/gen.hpp"
#include "dpc/sampler.hpp"
#include "oracles.hpp"

using namespace dpc;

namespace {

std::shared_ptr<const Graph> shared(Graph g) {
    return std::make_shared<Graph>(std::move(g));
}

// Fig.-1-style covers of C4: identity matchings everywhere, optionally one
// twisted edge.
Cover c4_cover(bool twist_one_edge) {
    auto g = shared(gen_cycle(4));
    auto edges = g->edges(); // (0,1) (0,3) (1,2) (2,3)
    std::vector<std::vector<std::array<int, 2>>> pairs(edges.size());
    for (size_t e = 0; e < edges.size(); ++e) {
        bool twist = twist_one_edge && edges[e] == std::make_pair(0, 3);
        pairs[e] = twist ? std::vector<std::array<int, 2>>{{0, 1}, {1, 0}}
                         : std::vector<std::array<int, 2>>{{0, 0}, {1, 1}};
    }
    return Cover(g, std::vector<int>(4, 2), pairs);
}

} // namespace

TEST_CASE("cover_from_lists: C4 with identical lists is the straight cover") {
    auto g = shared(gen_cycle(4));
    Cover c = cover_from_lists(g, {{1, 2}, {1, 2}, {1, 2}, {1, 2}});
    CHECK(validate(c).empty());
    CHECK(c.fold() == 2);
    // identity matchings: slot i of u matches slot i of v on every edge
    for (int e = 0; e < c.edge_count(); ++e) {
        auto [u, v] = c.edge(e);
        CHECK(c.partner(u, 0, v) == 0);
        CHECK(c.partner(u, 1, v) == 1);
    }
    // alternating transversal is a coloring
    PartialColoring I(4);
    I.pick = {0, 1, 0, 1};
    CHECK(is_coloring(c, I));
}

TEST_CASE("cover_from_lists: disjoint and shared singleton lists on K2") {
    auto g = shared(parse_graph("p 2 1\ne 0 1\n"));
    Cover disjoint = cover_from_lists(g, {{1}, {2}});
    CHECK(disjoint.raw_pairs(0).empty());
    PartialColoring I(2);
    I.pick = {0, 0};
    CHECK(is_coloring(disjoint, I));

    Cover same = cover_from_lists(g, {{1}, {1}});
    CHECK(same.raw_pairs(0).size() == 1);
    CHECK(!is_coloring(same, I)); // the single transversal is matched
}

TEST_CASE("cover_from_lists rejects empty lists") {
    auto g = shared(parse_graph("p 2 1\ne 0 1\n"));
    CHECK_THROWS_AS(cover_from_lists(g, {{}, {1}}), std::invalid_argument);
}

TEST_CASE("is_coloring matches the list-coloring oracle exhaustively") {
    // bijection between L-colorings and cover colorings of the canonical cover
    auto g = shared(parse_graph("p 4 4\ne 0 1\ne 1 2\ne 2 3\ne 0 2\n"));
    std::vector<std::vector<int>> lists = {{1, 2}, {2, 3}, {1, 3}, {1, 2}};
    Cover c = cover_from_lists(g, lists);
    std::vector<int> f(4);
    long long agree = 0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int d = 0; d < 2; ++d)
                for (int e = 0; e < 2; ++e) {
                    PartialColoring I(4);
                    I.pick = {a, b, d, e};
                    f = {lists[0][a], lists[1][b], lists[2][d], lists[3][e]};
                    bool proper = true;
                    for (auto [u, v] : g->edges())
                        if (f[u] == f[v])
                            proper = false;
                    CHECK(is_coloring(c, I) == proper);
                    ++agree;
                }
    CHECK(agree == 16);
}

TEST_CASE("is_coloring rejects out-of-list picks and partial domains") {
    Cover c = c4_cover(false);
    PartialColoring bad(4);
    bad.pick = {0, 1, 0, 2};
    CHECK_THROWS_AS(is_coloring(c, bad), std::invalid_argument);
    PartialColoring partial(4);
    partial.pick = {0, 1, 0, -1};
    CHECK(!is_coloring(c, partial));
}

TEST_CASE("random_cover: shape, determinism, density") {
    auto g = shared(gen_random_triangle_free(20, 4.0, 3));
    Cover c = random_cover(g, 3, 17);
    CHECK(validate(c).empty());
    CHECK(c.fold() == 3);
    for (int e = 0; e < c.edge_count(); ++e)
        CHECK(c.raw_pairs(e).size() == 3); // perfect matchings

    Cover c2 = random_cover(g, 3, 17);
    for (int e = 0; e < c.edge_count(); ++e)
        CHECK(c.raw_pairs(e) == c2.raw_pairs(e));

    Cover k1 = random_cover(g, 1, 5);
    for (int e = 0; e < k1.edge_count(); ++e)
        CHECK(k1.raw_pairs(e).size() == 1);

    Cover empty = random_cover(g, 3, 5, CoverMode::density, 0.0);
    for (int e = 0; e < empty.edge_count(); ++e)
        CHECK(empty.raw_pairs(e).empty());
    CHECK(validate(empty).empty());

    CHECK_THROWS_AS(random_cover(g, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_cover(g, 2, 1, CoverMode::density, 1.5), std::invalid_argument);
}

TEST_CASE("K2 with k=3 and no cross edges has 9 colorings") {
    auto g = shared(parse_graph("p 2 1\ne 0 1\n"));
    Cover c = random_cover(g, 3, 11, CoverMode::density, 0.0);
    CHECK(oracle::count_colorings(c) == 9);
}

TEST_CASE("2-fold perfect covers of C4 split into the two Fig.-1 classes") {
    // every edge carries the identity or the swap; colorable iff the number
    // of swaps is even (even covers are the straight class, odd the twisted)
    auto g = shared(gen_cycle(4));
    for (uint64_t seed = 0; seed < 24; ++seed) {
        Cover c = random_cover(g, 2, seed);
        int swaps = 0;
        for (int e = 0; e < c.edge_count(); ++e) {
            auto [u, v] = c.edge(e);
            if (c.partner(u, 0, v) == 1)
                ++swaps;
        }
        bool colorable = oracle::count_colorings(c) > 0;
        CHECK(colorable == (swaps % 2 == 0));
    }
}

TEST_CASE("validate: constructed covers are clean, injected faults are found") {
    auto g = shared(gen_cycle(4));
    std::string base = "c 4 2\nL 0 2\nL 1 2\nL 2 2\nL 3 2\n";

    SUBCASE("clean") {
        Cover c = parse_cover(base + "m 0 1 1 0\nm 1 1 2 0\n", g);
        CHECK(validate(c).empty());
    }
    SUBCASE("C1: slot outside the declared list") {
        Cover c = parse_cover(base + "m 0 2 1 0\n", g);
        auto v = validate(c);
        REQUIRE(v.size() == 1);
        CHECK(v[0].axiom == '1');
    }
    SUBCASE("C3: matching on a non-edge") {
        Cover c = parse_cover(base + "m 0 0 2 0\n", g); // 0-2 is a diagonal
        auto v = validate(c);
        REQUIRE(v.size() == 1);
        CHECK(v[0].axiom == '3');
    }
    SUBCASE("C4: endpoint matched twice") {
        Cover c = parse_cover(base + "m 0 0 1 0\nm 0 0 1 1\n", g);
        auto v = validate(c);
        REQUIRE(v.size() == 1);
        CHECK(v[0].axiom == '4');
    }
}

TEST_CASE("cross_degree") {
    Cover h1 = c4_cover(false);
    for (int u = 0; u < 4; ++u)
        for (int i = 0; i < 2; ++i)
            CHECK(cross_degree(h1, u, i) == 2); // each point meets two matchings

    auto iso = shared(Graph(1, {}));
    Cover isolated(iso, {2}, {});
    CHECK(cross_degree(isolated, 0, 0) == 0);

    auto k2 = shared(parse_graph("p 2 1\ne 0 1\n"));
    Cover shared_color = cover_from_lists(k2, {{1, 2}, {2, 3}});
    CHECK(cross_degree(shared_color, 0, 1) == 1); // color 2 is shared
    CHECK(cross_degree(shared_color, 0, 0) == 0);
    CHECK_THROWS_AS(cross_degree(shared_color, 0, 7), std::invalid_argument);
}

TEST_CASE("cross_degree bounded by base degree") {
    auto g = shared(gen_random_triangle_free(18, 4.0, 21));
    Cover c = random_cover(g, 3, 4);
    for (int u = 0; u < g->n(); ++u)
        for (int i = 0; i < 3; ++i)
            CHECK(cross_degree(c, u, i) <= g->degree(u));
}

TEST_CASE("residual: identity, single pick, full coloring") {
    Cover c = c4_cover(false);

    SUBCASE("empty I") {
        ResidualCover rc = residual(c, PartialColoring(4));
        CHECK(rc.cover.base().n() == 4);
        CHECK(rc.cover.list_sizes() == c.list_sizes());
        int pairs = 0, rpairs = 0;
        for (int e = 0; e < c.edge_count(); ++e)
            pairs += static_cast<int>(c.raw_pairs(e).size());
        for (int e = 0; e < rc.cover.edge_count(); ++e)
            rpairs += static_cast<int>(rc.cover.raw_pairs(e).size());
        CHECK(pairs == rpairs);
    }
    SUBCASE("one pick leaves a path with thinner neighbor lists") {
        PartialColoring I(4);
        I.pick[0] = 0;
        ResidualCover rc = residual(c, I);
        CHECK(rc.cover.base().n() == 3);
        CHECK(rc.cover.base().m() == 2); // path 1-2-3
        // neighbors of 0 lose the element matched to the pick
        for (size_t ru = 0; ru < rc.orig_vertex.size(); ++ru) {
            int u = rc.orig_vertex[ru];
            CHECK(rc.cover.list_size(static_cast<int>(ru)) == (u == 2 ? 2 : 1));
        }
        CHECK(validate(rc.cover).empty());
    }
    SUBCASE("full coloring leaves nothing") {
        PartialColoring I(4);
        I.pick = {0, 1, 0, 1};
        ResidualCover rc = residual(c, I);
        CHECK(rc.cover.base().n() == 0);
    }
    SUBCASE("dependent I is rejected") {
        PartialColoring I(4);
        I.pick = {0, 0, -1, -1}; // matched pair on edge 0-1
        CHECK_THROWS_AS(residual(c, I), std::invalid_argument);
    }
}

TEST_CASE("residual covers are valid covers; composition matches direct check") {
    // randomized + exhaustive on small instances: for independent I and any
    // transversal I' of the residual, is_coloring(c, I u I') ==
    // is_coloring(residual, I')
    for (uint64_t seed = 1; seed <= 6; ++seed) {
        auto g = shared(gen_random_triangle_free(5, 2.5, seed));
        Cover c = random_cover(g, 3, seed * 7 + 1);
        Rng rng(seed);
        std::vector<int> region(g->n());
        for (int u = 0; u < g->n(); ++u)
            region[u] = u;
        PartialColoring I = glauber_sample(c, region, 200, rng);
        REQUIRE(is_independent(c, I));
        ResidualCover rc = residual(c, I);
        CHECK(validate(rc.cover).empty());

        // exhaust all transversals of the residual
        const Graph& rg = rc.cover.base();
        bool has_empty_list = false;
        for (int u = 0; u < rg.n(); ++u)
            if (rc.cover.list_size(u) == 0)
                has_empty_list = true;
        if (has_empty_list)
            continue; // no transversal to enumerate
        std::vector<int> st(rg.n(), 0);
        bool done = rg.n() == 0;
        long long checked = 0;
        while (!done && checked < 5000) {
            PartialColoring Ip(rg.n());
            for (int u = 0; u < rg.n(); ++u)
                Ip.pick[u] = st[u];
            bool lhs;
            try {
                PartialColoring merged = merge_residual(c, I, rc, Ip);
                lhs = is_coloring(c, merged);
            } catch (const std::invalid_argument&) {
                lhs = false;
            }
            CHECK(lhs == is_coloring(rc.cover, Ip));
            ++checked;
            int pos = 0;
            while (pos < rg.n()) {
                if (++st[pos] < rc.cover.list_size(pos))
                    break;
                st[pos] = 0;
                ++pos;
            }
            done = pos == rg.n();
        }
    }
}

TEST_CASE("cover text format round trip") {
    auto g = shared(gen_random_triangle_free(12, 3.0, 2));
    Cover c = random_cover(g, 2, 9, CoverMode::density, 0.6);
    Cover back = parse_cover(format_cover(c), g);
    CHECK(back.list_sizes() == c.list_sizes());
    for (int e = 0; e < c.edge_count(); ++e)
        CHECK(back.raw_pairs(e) == c.raw_pairs(e));
}

TEST_CASE("parse_cover errors") {
    auto g = shared(gen_cycle(4));
    CHECK_THROWS_AS(parse_cover("L 0 2\n", g), ParseError);             // before header
    CHECK_THROWS_AS(parse_cover("c 5 2\n", g), ParseError);             // wrong n
    CHECK_THROWS_AS(parse_cover("c 4 *\nL 0 2\n", g), ParseError);      // missing sizes
    CHECK_THROWS_AS(parse_cover("c 4 2\nL 0 2\nL 0 2\n", g), ParseError); // duplicate L
    CHECK_THROWS_AS(parse_cover("c 4 2\nq 1\n", g), ParseError);        // unknown tag
    Cover defaulted = parse_cover("c 4 3\n", g); // header fold fills the sizes
    CHECK(defaulted.fold() == 3);
}
