#include "flexdp/errors.hpp"
#include "flexdp/families.hpp"
#include "flexdp/graph_io.hpp"
#include "flexdp/mad.hpp"
#include "flexdp/multigraph.hpp"
#include "flexdp/structure.hpp"

#include "../oracles.hpp"

#include <doctest.h>

using namespace flexdp;

TEST_CASE("rational parsing and rendering")
{
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-3")) == "-3/1");
    CHECK(to_string(parse_rational("0")) == "0/1");
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("1/-2"), InputError);
    CHECK_THROWS_AS(parse_rational("x"), InputError);
    std::vector<Rational> v{Rational(1, 4), Rational(1, 6)};
    CHECK(lcm_of_denominators(v) == 12);
}

TEST_CASE("multigraph construction")
{
    Multigraph c2(2, {{0, 1, 2}});
    CHECK(c2.edge_count() == 2);
    CHECK(c2.multiplicity(1, 0) == 2);

    Multigraph i1(3, {{0, 1, 2}, {1, 2, 1}, {0, 2, 1}});
    CHECK(i1 == gen_im(1).graph);

    CHECK_THROWS_AS(Multigraph(2, {{0, 0, 1}}), InputError);
    CHECK_THROWS_AS(Multigraph(2, {{0, 2, 1}}), InputError);
    CHECK_THROWS_AS(Multigraph(2, {{0, 1, 0}}), InputError);

    Multigraph summed(3, {{0, 1, 1}, {1, 0, 2}});
    CHECK(summed.multiplicity(0, 1) == 3);
    CHECK(summed.degree(0) == 3);
    CHECK(summed.without_edge(0, 1).multiplicity(0, 1) == 2);
    CHECK_FALSE(summed.is_connected());
    CHECK(summed.components().size() == 2);
}

TEST_CASE("potential and sigma")
{
    auto i1 = gen_im(1);
    CHECK(potential(i1.graph, i1.rho) == 2);
    CHECK(potential(i1.graph, i1.rho, std::vector<Vertex>{}) == 0);
    auto k4 = gen_k4();
    CHECK(potential(k4.graph, k4.rho) == 0);
    CHECK(sigma(i1.graph, i1.rho, 2) == 2);
    CHECK(sigma(Multigraph(1, {}), PotentialAssignment::uniform(1), 0) == 6);
    auto c2 = gen_exceptional_c2();
    CHECK(sigma(c2.graph, c2.rho, 0) == 0);
    CHECK(potential(c2.graph, c2.rho) == 2);
    CHECK_THROWS_AS(potential(i1.graph, i1.rho, std::vector<Vertex>{5}), InputError);
    CHECK_THROWS_AS(PotentialAssignment({5}), InputError);
}

TEST_CASE("potential additivity and sigma sum on random graphs")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        std::uniform_int_distribution<int> size(1, 8);
        const int n = size(rng);
        auto g = oracle::random_connected_multigraph(rng, n, 3, 0.3);
        auto rho = oracle::random_rho(rng, n);
        std::vector<Vertex> u, w;
        std::uniform_int_distribution<int> side(0, 2);
        for (Vertex v = 0; v < n; ++v) {
            int s = side(rng);
            if (s == 0)
                u.push_back(v);
            else if (s == 1)
                w.push_back(v);
        }
        std::vector<Vertex> both = u;
        both.insert(both.end(), w.begin(), w.end());
        std::sort(both.begin(), both.end());
        CHECK(potential(g, rho, both) ==
              potential(g, rho, u) + potential(g, rho, w) - 4 * edges_between(g, u, w));

        int sigma_sum = 0;
        for (Vertex v = 0; v < n; ++v)
            sigma_sum += sigma(g, rho, v);
        CHECK(sigma_sum == potential(g, rho));
        CHECK(potential(g, rho) == oracle::potential_by_definition(g, rho));
    }
}

TEST_CASE("mad examples")
{
    CHECK(mad(gen_k4().graph) == 3);
    CHECK(mad(gen_im(1).graph) == Rational(8, 3));
    CHECK(mad(gen_jm(1).graph) == Rational(14, 5));
    CHECK(oracle::mad_by_subsets(gen_im(1).graph) == Rational(8, 3));
    CHECK(oracle::mad_by_subsets(gen_jm(1).graph) == Rational(14, 5));
    CHECK_THROWS_AS(mad(Multigraph(0, {})), InputError);
    CHECK(mad(Multigraph(1, {})) == 0);
}

TEST_CASE("mad of the tight families")
{
    for (int m = 1; m <= 6; ++m) {
        Rational im(2 * (3 * m + 1), 2 * m + 1), jm(6 * m + 8, 2 * m + 3);
        im.canonicalize();
        jm.canonicalize();
        CHECK(mad(gen_im(m).graph) == im);
        CHECK(mad(gen_jm(m).graph) == jm);
        CHECK(im < 3);
        CHECK(jm < 3);
    }
}

TEST_CASE("mad: flow search agrees with subset enumeration")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 400; ++trial) {
        std::uniform_int_distribution<int> size(1, 8);
        auto g = oracle::random_connected_multigraph(rng, size(rng), 3, 0.35);
        auto dense = densest_subgraph(g);
        CHECK(2 * dense.density == oracle::mad_by_subsets(g));
        // the reported witness attains the density
        auto sub = g.induced(dense.vertices);
        Rational d(sub.edge_count(), static_cast<long>(dense.vertices.size()));
        d.canonicalize();
        CHECK(d == dense.density);
    }
}

TEST_CASE("I-subgraph detection")
{
    auto i2 = gen_im(2).graph;
    auto w = find_i_subgraph(i2);
    REQUIRE(w);
    CHECK(w->m == 2);
    CHECK(w->cycle.size() == 5);
    CHECK_FALSE(find_i_subgraph(gen_jm(1).graph));
    CHECK_FALSE(find_i_subgraph(gen_k4().graph));
    for (int m = 1; m <= 4; ++m) {
        auto found = find_i_subgraph(gen_im(m).graph);
        REQUIRE(found);
        CHECK(found->m == m);
    }
}

TEST_CASE("I-subgraph detection agrees with brute force")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 400; ++trial) {
        std::uniform_int_distribution<int> size(1, 7);
        auto g = oracle::random_connected_multigraph(rng, size(rng), 2, 0.3);
        auto found = find_i_subgraph(g);
        CHECK(found.has_value() == oracle::has_i_subgraph(g));
        if (found) {
            const auto & c = found->cycle;
            REQUIRE(static_cast<int>(c.size()) == 2 * found->m + 1);
            for (std::size_t k = 0; k < c.size(); ++k) {
                int need = k % 2 == 0 && k + 1 < c.size() ? 2 : 1;
                CHECK(g.multiplicity(c[k], c[(k + 1) % c.size()]) >= need);
            }
        }
        if (g.is_simple())
            CHECK_FALSE(found);
    }
}

TEST_CASE("family generators")
{
    auto i3 = gen_im(3);
    CHECK(i3.graph.vertex_count() == 7);
    CHECK(i3.graph.edge_count() == 10);
    auto j1 = gen_jm(1);
    CHECK(j1.graph.vertex_count() == 5);
    CHECK(j1.graph.edge_count() == 7);
    for (int m = 1; m <= 5; ++m) {
        CHECK(gen_im(m).graph.edge_count() == 3 * m + 1);
        CHECK(gen_jm(m).graph.vertex_count() == 2 * m + 3);
        CHECK(gen_jm(m).graph.edge_count() == 3 * m + 4);
        CHECK(potential(gen_jm(m).graph, gen_jm(m).rho) == 2);
    }
    auto c2 = gen_exceptional_c2();
    CHECK(c2.rho.rho(0) == 4);
    CHECK(c2.rho.rho(1) == 6);
    auto house = gen_house();
    CHECK(house.graph.vertex_count() == 5);
    CHECK(house.graph.edge_count() == 7);
    auto s = gen_s({1, 2});
    CHECK(s.graph.vertex_count() == 5 + 3 * 3);
    CHECK(s.graph.is_connected());
    CHECK_THROWS_AS(gen_im(0), InputError);
    CHECK_THROWS_AS(gen_s({}), InputError);
    CHECK(parse_family("Jm") == Family::jm);
    CHECK_THROWS_AS(parse_family("nope"), InputError);
}

TEST_CASE("graph text format round trip")
{
    auto parsed = parse_graph("# comment\nvertices 3\n  edge 0 1 1\nedge 1 0 1 # again\nedge 1 2 1\nrho 2 4\nbasepoint 2 1\n");
    CHECK(parsed.graph.multiplicity(0, 1) == 2);
    CHECK(parsed.rho.rho(2) == 4);
    CHECK(parsed.rho.basepoint(2) == 1);
    CHECK_THROWS_AS(parse_graph("edge 0 1 1\n"), InputError);
    CHECK_THROWS_AS(parse_graph("vertices 2\nedge 0 0 1\n"), InputError);
    CHECK_THROWS_AS(parse_graph("vertices 2\nrho 0 5\n"), InputError);
    CHECK_THROWS_AS(parse_graph("vertices 2\nbogus\n"), InputError);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        std::uniform_int_distribution<int> size(1, 9);
        const int n = size(rng);
        auto g = oracle::random_connected_multigraph(rng, n, 3, 0.3);
        auto rho = oracle::random_rho(rng, n);
        auto back = parse_graph(serialize_graph(g, rho));
        CHECK(back.graph == g);
        CHECK(back.rho == rho);
    }
}
