#include "flexdp/errors.hpp"
#include "flexdp/families.hpp"
#include "flexdp/flexibility.hpp"

#include "../oracles.hpp"

#include <doctest.h>

using namespace flexdp;

TEST_CASE("epsilon star examples")
{
    auto c2 = gen_exceptional_c2().graph;
    auto c2_cover = paper_cover({Family::c2, 1, {}}, c2);
    auto r = epsilon_star(c2, c2_cover);
    CHECK(r.epsilon_star == Rational(1, 4));
    CHECK(oracle::certifies_optimum(c2, c2_cover, ListAssignment::full(2), r));

    auto i1 = gen_im(1).graph;
    auto i1_cover = paper_cover({Family::im, 1, {}}, i1);
    auto ri = epsilon_star(i1, i1_cover);
    CHECK(ri.epsilon_star == 0);
    CHECK(ri.colorable);
    CHECK(oracle::certifies_optimum(i1, i1_cover, ListAssignment::full(3), ri));

    auto j1 = gen_jm(1).graph;
    auto j1_cover = paper_cover({Family::jm, 1, {}}, j1);
    auto rj = epsilon_star(j1, j1_cover);
    CHECK(rj.epsilon_star == Rational(1, 5));
    CHECK(oracle::certifies_optimum(j1, j1_cover, ListAssignment::full(5), rj));

    auto k4 = gen_k4().graph;
    auto rk = epsilon_star(k4, straight_cover(k4));
    CHECK_FALSE(rk.colorable);
    CHECK(rk.epsilon_star == 0);
    CHECK(rk.distribution.entries.empty());

    CHECK(epsilon_star(Multigraph(1, {}), Cover{}).epsilon_star == Rational(1, 3));
    CHECK_THROWS_AS(epsilon_star(c2, c2_cover, ListAssignment::full(3)), InputError);
}

TEST_CASE("fractional packing examples")
{
    Multigraph p2(2, {{0, 1, 1}});
    auto packing = fractional_packing(p2, straight_cover(p2));
    REQUIRE(packing);
    for (const auto & m : marginals(*packing, 2))
        for (const auto & x : m)
            CHECK(x == Rational(1, 3));

    // K_{2,3} plus an edge inside the 3-side
    Multigraph k23(5, {{0, 2, 1}, {0, 3, 1}, {0, 4, 1}, {1, 2, 1}, {1, 3, 1}, {1, 4, 1}, {2, 3, 1}});
    bool missing = false;
    enumerate_covers(k23, [&](const Cover & c) {
        missing = !fractional_packing(k23, c);
        return !missing;
    });
    CHECK(missing);
}

TEST_CASE("box distributions")
{
    Multigraph p3(3, {{0, 1, 1}, {1, 2, 1}});
    PotentialAssignment rho({6, 4, 6}, {0, 0, 0});
    const Rational eps(1, 5);
    auto pins = basepoint_pins(rho, eps);
    CHECK(pins.size() == 3);
    auto box = box_distribution(p3, straight_cover(p3), ListAssignment::full(3), eps, 1, pins);
    REQUIRE(box);
    auto marg = marginals(*box, 3);
    CHECK(marg[1][0] == Rational(2, 5));
    CHECK(marg[1][1] == Rational(3, 10));
    CHECK(marg[1][2] == Rational(3, 10));
    for (const auto & m : marg)
        for (const auto & x : m)
            CHECK(x >= eps);

    CHECK_FALSE(box_distribution(p3, straight_cover(p3), ListAssignment::full(3), Rational(1, 2), 1, {}));
    CHECK(box_distribution(Multigraph(1, {}), Cover{}, ListAssignment::full(1), Rational(1, 3), Rational(1, 3), {}));
    CHECK_THROWS_AS(box_distribution(p3, straight_cover(p3), ListAssignment::full(3), Rational(1, 2), Rational(1, 3), {}),
                    InputError);
    ListAssignment two = ListAssignment::full(3);
    two.forbid(0, 2);
    CHECK_THROWS_AS(box_distribution(p3, straight_cover(p3), two, 0, 1, {{0, 2, Rational(1, 3)}}), InputError);
    CHECK_THROWS_AS(box_distribution(p3, straight_cover(p3), ListAssignment::full(3), 0, 1,
                                     {{0, 1, Rational(1, 3)}, {0, 1, Rational(1, 4)}}),
                    InputError);
}

TEST_CASE("framework feasibility")
{
    auto c2 = gen_exceptional_c2();
    auto cover = paper_cover({Family::c2, 1, {}}, c2.graph);
    CHECK(framework_feasible(c2.graph, c2.rho, cover, {}, Rational(1, 6)).status == FrameworkStatus::feasible);
    CHECK(framework_feasible(c2.graph, c2.rho, cover, {}, Rational(1, 6) + Rational(1, 1000)).status ==
          FrameworkStatus::infeasible);

    auto i1 = gen_im(1);
    CHECK(framework_feasible(i1.graph, i1.rho, paper_cover({Family::im, 1, {}}, i1.graph), {}, Rational(1, 100))
              .status == FrameworkStatus::infeasible);

    // one 3-vertex with a uniformly random 2-list
    Multigraph single(1, {});
    PotentialAssignment three({3});
    ListDistribution uniform{{{ListAssignment({3}), Rational(1, 3)},
                              {ListAssignment({5}), Rational(1, 3)},
                              {ListAssignment({6}), Rational(1, 3)}}};
    auto ok = framework_feasible(single, three, Cover{}, uniform, Rational(1, 3));
    CHECK(ok.status == FrameworkStatus::feasible);
    REQUIRE(ok.per_outcome.size() == 3);
    for (const auto & part : ok.per_outcome) {
        Rational mass = 0;
        for (const auto & e : part.entries)
            mass += e.weight;
        CHECK(mass == Rational(1, 3));
    }
    CHECK(framework_feasible(single, three, Cover{}, uniform, Rational(1, 3) + Rational(1, 100)).status ==
          FrameworkStatus::not_admissible);
    ListDistribution fixed{{{ListAssignment({3}), 1}}};
    auto bad = framework_feasible(single, three, Cover{}, fixed, Rational(1, 10));
    CHECK(bad.status == FrameworkStatus::not_admissible);
    REQUIRE(bad.inadmissible_at);
    CHECK(*bad.inadmissible_at == std::pair<Vertex, int>{0, 0});

    CHECK_THROWS_AS(framework_feasible(single, three, Cover{}, {}, Rational(1, 10)), InputError);
    CHECK_THROWS_AS(framework_feasible(c2.graph, c2.rho, cover, {}, 0), InputError);
    CHECK_THROWS_AS(framework_feasible(c2.graph, c2.rho, cover, {}, 1), InputError);
    ListDistribution short_mass{{{ListAssignment({3}), Rational(1, 2)}}};
    CHECK_THROWS_AS(framework_feasible(single, three, Cover{}, short_mass, Rational(1, 10)), InputError);
}

TEST_CASE("packing exists exactly when epsilon star is 1/3")
{
    std::mt19937_64 rng(41);
    int packed = 0;
    for (int trial = 0; trial < 150; ++trial) {
        std::uniform_int_distribution<int> size(1, 5);
        auto g = oracle::random_connected_multigraph(rng, size(rng), 2, 0.3);
        auto cover = oracle::random_cover(rng, g);
        auto eps = epsilon_star(g, cover).epsilon_star;
        CHECK(eps <= Rational(1, 3));
        auto packing = fractional_packing(g, cover);
        CHECK(packing.has_value() == (eps == Rational(1, 3)));
        packed += packing.has_value();
    }
    CHECK(packed > 0);
}

TEST_CASE("deleting a matching never lowers epsilon star")
{
    std::mt19937_64 rng(42);
    int checked = 0;
    while (checked < 100) {
        std::uniform_int_distribution<int> size(2, 5);
        auto g = oracle::random_connected_multigraph(rng, size(rng), 3, 0.4);
        auto cover = oracle::random_cover(rng, g);
        std::vector<std::pair<VertexPair, std::size_t>> slots;
        for (const auto & [pair, perms] : cover.slots())
            for (std::size_t i = 0; i < perms.size(); ++i)
                slots.emplace_back(pair, i);
        std::uniform_int_distribution<std::size_t> pick(0, slots.size() - 1);
        auto drop = slots[pick(rng)];
        Cover smaller;
        for (const auto & [pair, perms] : cover.slots())
            for (std::size_t i = 0; i < perms.size(); ++i)
                if (!(pair == drop.first && i == drop.second))
                    smaller.add_matching(pair.lo, pair.hi, perms[i]);
        CHECK(epsilon_star(g, smaller).epsilon_star >= epsilon_star(g, cover).epsilon_star);
        ++checked;
    }
}

TEST_CASE("framework over full lists agrees with epsilon star")
{
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<int> size(1, 5);
        auto g = oracle::random_connected_multigraph(rng, size(rng), 2, 0.3);
        auto cover = oracle::random_cover(rng, g);
        auto rho = PotentialAssignment::uniform(g.vertex_count());
        auto eps = epsilon_star(g, cover).epsilon_star;
        for (const Rational & probe : {Rational(1, 7), Rational(1, 5), Rational(1, 4), Rational(1, 3)}) {
            auto status = framework_feasible(g, rho, cover, {}, probe).status;
            CHECK((status == FrameworkStatus::feasible) == (eps >= probe));
        }
        if (eps > 0)
            CHECK(framework_feasible(g, rho, cover, {}, eps).status == FrameworkStatus::feasible);
    }
}

TEST_CASE("trees with any cover have a fractional packing")
{
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<int> size(1, 8);
        auto t = oracle::random_tree(rng, size(rng));
        auto cover = oracle::random_cover(rng, t);
        CHECK(fractional_packing(t, cover).has_value());
    }
}

TEST_CASE("flexibility reports carry a weak-duality certificate")
{
    std::mt19937_64 rng(45);
    std::uniform_int_distribution<int> mask(1, 7);
    for (int trial = 0; trial < 150; ++trial) {
        std::uniform_int_distribution<int> size(1, 5);
        const int n = size(rng);
        auto g = oracle::random_connected_multigraph(rng, n, 3, 0.3);
        auto cover = oracle::random_cover(rng, g);
        std::vector<std::uint8_t> masks;
        for (int i = 0; i < n; ++i)
            masks.push_back(static_cast<std::uint8_t>(mask(rng)));
        ListAssignment lists(masks);
        CHECK(oracle::certifies_optimum(g, cover, lists, epsilon_star(g, cover, lists)));
    }
}
