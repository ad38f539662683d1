#include <doctest.h>

#include <cmath>
#include <random>
#include <thread>

#include "hsx/constructions.hpp"
#include "hsx/errors.hpp"
#include "hsx/hypergraph.hpp"
#include "hsx/simplicial_complex.hpp"
#include "support/test_helpers.hpp"

using namespace hsx;
using hsx::testing::pi_from_definition;
using hsx::testing::random_hypergraph;

TEST_SUITE("complex-core") {

TEST_CASE("single edge induces symmetric measures") {
    const Hypergraph h = make_hypergraph(3, 3, {{0, 1, 2}});
    const SimplicialComplex x = SimplicialComplex::induce(h);
    CHECK(x.dimension() == 3);
    CHECK(x.faces(0).size() == 1);
    CHECK(x.faces(1).size() == 3);
    CHECK(x.faces(2).size() == 3);
    CHECK(x.faces(3).size() == 1);
    for (const Face& f : x.faces(1)) {
        CHECK(x.face_measure(1, f) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    }
    for (const Face& f : x.faces(2)) {
        CHECK(x.face_measure(2, f) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    }
    CHECK(x.face_measure(3, {0, 1, 2}) == doctest::Approx(1.0));
    CHECK(x.face_measure(0, {}) == doctest::Approx(1.0));
}

TEST_CASE("two-edge sunflower measures match the definition") {
    const Hypergraph h = make_hypergraph(3, 5, {{0, 1, 2}, {0, 3, 4}});
    const SimplicialComplex x = SimplicialComplex::induce(h);
    CHECK(x.face_measure(1, {0}) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(x.face_measure(1, {1}) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    CHECK(x.face_measure(2, {0, 1}) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));

    // sum over level-2 supersets of {0} equals C(2,1) * Pi_1({0}) = 2/3
    double sum = 0.0;
    for (const Face& t : x.faces(2)) {
        if (face_contains(t, {0})) sum += x.face_measure(2, t);
    }
    CHECK(sum == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("duplicate edges merge by summing weight") {
    const Hypergraph h =
        make_hypergraph(3, 5, {{0, 1, 2}, {2, 1, 0}, {0, 3, 4}}, {0.3, 0.2, 0.5});
    REQUIRE(h.edges.size() == 2);
    CHECK(h.edges[0] == Face{0, 1, 2});
    CHECK(h.weights[0] == doctest::Approx(0.5));
    CHECK(h.weights[1] == doctest::Approx(0.5));

    // unweighted duplicates are idempotent: uniform over distinct edges
    const Hypergraph u = make_hypergraph(3, 5, {{0, 1, 2}, {0, 1, 2}, {0, 3, 4}});
    REQUIRE(u.edges.size() == 2);
    CHECK(u.weights[0] == doctest::Approx(0.5));
    CHECK(u.weights[1] == doctest::Approx(0.5));
}

TEST_CASE("validation rejects bad input") {
    CHECK_THROWS_AS(make_hypergraph(3, 5, {{0, 1}, {0, 3, 4}}), InputError);
    CHECK_THROWS_AS(make_hypergraph(3, 5, {{0, 1, 1}, {0, 3, 4}}), InputError);
    CHECK_THROWS_AS(make_hypergraph(3, 5, {{0, 1, 5}, {0, 3, 4}}), InputError);
    CHECK_THROWS_AS(make_hypergraph(3, 5, {{0, 1, 2}, {0, 3, 4}}, {0.6, 0.6}), InputError);
    CHECK_THROWS_AS(make_hypergraph(3, 5, {{0, 1, 2}, {0, 3, 4}}, {1.0, 0.0}), InputError);
    CHECK_THROWS_AS(make_hypergraph(3, 5, {{0, 1, 2}, {0, 3, 4}}, {1.2, -0.2}), InputError);
    // vertex 4 uncovered
    CHECK_THROWS_AS(make_hypergraph(3, 5, {{0, 1, 2}, {0, 1, 3}}), InputError);
    CHECK_THROWS_AS(make_hypergraph(1, 3, {{0}, {1}, {2}}), InputError);
}

TEST_CASE("face budget is an explicit error") {
    const Hypergraph h = make_hypergraph(3, 5, {{0, 1, 2}, {0, 3, 4}});
    CHECK_THROWS_AS(SimplicialComplex::induce(h, 4), BudgetError);
}

TEST_CASE("induced complexes satisfy closure, purity, and measure consistency") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
        const Hypergraph h = random_hypergraph(rng);
        const SimplicialComplex x = SimplicialComplex::induce(h);
        const int k = x.dimension();

        for (int l = 0; l <= k; ++l) {
            double total = 0.0;
            for (const Face& f : x.faces(l)) {
                const double p = x.face_measure(l, f);
                CHECK(p > 0.0);
                total += p;
                // measure matches the direct definition
                CHECK(p == doctest::Approx(pi_from_definition(h, f)).epsilon(1e-12));
                // downward closure
                if (l > 0) {
                    for_each_subset(f, l - 1, [&](const Face& sub) {
                        CHECK(x.contains(sub));
                    });
                }
            }
            CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
        }

        // purity: every face extends to a top face
        for (int l = 0; l <= k; ++l) {
            for (const Face& f : x.faces(l)) {
                bool extends = false;
                for (const Face& top : x.faces(k)) {
                    if (face_contains(top, f)) {
                        extends = true;
                        break;
                    }
                }
                CHECK(extends);
            }
        }

        // pi_level_relation: sum over supersets at level l of Pi_l equals
        // C(l,m) Pi_m(s)
        for (int m = 0; m <= k; ++m) {
            for (int l = m; l <= k; ++l) {
                for (const Face& s : x.faces(m)) {
                    double sum = 0.0;
                    for (const Face& t : x.faces(l)) {
                        if (face_contains(t, s)) sum += x.face_measure(l, t);
                    }
                    CHECK(std::abs(sum - binomial(l, m) * x.face_measure(m, s)) < 1e-12);
                }
            }
        }
    }
}

TEST_CASE("link of the empty face is the complex itself") {
    const Hypergraph h = make_hypergraph(3, 5, {{0, 1, 2}, {0, 3, 4}});
    const SimplicialComplex x = SimplicialComplex::induce(h);
    const SimplicialComplex lk = link(x, {});
    CHECK(lk.dimension() == x.dimension());
    for (int l = 0; l <= x.dimension(); ++l) {
        REQUIRE(lk.faces(l) == x.faces(l));
        for (std::size_t i = 0; i < lk.measure(l).size(); ++i) {
            CHECK(lk.measure(l)[i] == doctest::Approx(x.measure(l)[i]).epsilon(1e-14));
        }
    }
}

TEST_CASE("link of a vertex in the single edge") {
    const Hypergraph h = make_hypergraph(3, 3, {{0, 1, 2}});
    const SimplicialComplex x = SimplicialComplex::induce(h);
    const SimplicialComplex lk = link(x, {0});
    CHECK(lk.dimension() == 2);
    CHECK(lk.faces(1) == std::vector<Face>{{1}, {2}});
    CHECK(lk.faces(2) == std::vector<Face>{{1, 2}});
    CHECK(lk.face_measure(2, {1, 2}) == doctest::Approx(1.0));
    CHECK(lk.face_measure(1, {1}) == doctest::Approx(0.5));

    CHECK_THROWS_AS(link(x, {0, 3}), InputError);
}

TEST_CASE("link measures are renormalized restrictions") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const Hypergraph h = random_hypergraph(rng, 8, 4);
        const SimplicialComplex x = SimplicialComplex::induce(h);
        const int k = x.dimension();
        for (int level = 0; level <= k - 2; ++level) {
            for (const Face& s : x.faces(level)) {
                const SimplicialComplex lk = link(x, s);
                const int m = static_cast<int>(s.size());
                for (int j = 0; j <= lk.dimension(); ++j) {
                    double total = 0.0;
                    for (const Face& f : lk.faces(j)) {
                        const double p = lk.face_measure(j, f);
                        total += p;
                        // proportional to Pi_{j+m} on the superset
                        const double ratio =
                            x.face_measure(j + m, face_union(f, s)) /
                            (binomial(j + m, m) * x.face_measure(m, s));
                        CHECK(p == doctest::Approx(ratio).epsilon(1e-11));
                    }
                    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
                }
            }
        }
    }
}

TEST_CASE("shared complexes are safe to read concurrently") {
    const SimplicialComplex x =
        SimplicialComplex::induce(cycle_link_hypergraph(9, 3));
    const double expected = skeleton(link(x, Face{0})).total_volume();
    std::vector<double> results(8, 0.0);
    std::vector<std::thread> workers;
    for (int t = 0; t < 8; ++t) {
        workers.emplace_back([&x, &results, t] {
            const SimplicialComplex lk = link(x, Face{0});
            results[static_cast<std::size_t>(t)] = skeleton(lk).total_volume();
        });
    }
    for (auto& w : workers) w.join();
    for (int t = 0; t < 8; ++t) {
        CHECK(results[static_cast<std::size_t>(t)] == expected);
    }
}

TEST_CASE("skeletons of small complexes") {
    // single edge -> triangle with uniform weights
    const SimplicialComplex x1 =
        SimplicialComplex::induce(make_hypergraph(3, 3, {{0, 1, 2}}));
    const WeightedGraph tri = skeleton(x1);
    CHECK(tri.size() == 3);
    CHECK(tri.component_count() == 1);
    CHECK(tri.weight(0, 1) == doctest::Approx(1.0 / 3.0));
    CHECK(tri.weight(0, 0) == 0.0);

    // link({0}) of the two-edge sunflower -> two disjoint edges, weights 1/2
    const SimplicialComplex x2 =
        SimplicialComplex::induce(make_hypergraph(3, 5, {{0, 1, 2}, {0, 3, 4}}));
    const WeightedGraph g = skeleton(link(x2, {0}));
    CHECK(g.size() == 4);
    CHECK(g.component_count() == 2);
    CHECK(g.weight(g.vertex(0).face == Face{1} ? 0 : 0, 1) == doctest::Approx(0.5));
    CHECK(g.weight(2, 3) == doctest::Approx(0.5));
    CHECK(g.weight(0, 2) == 0.0);

    // dimension error below 2
    CHECK_THROWS_AS(skeleton(link(x1, {0, 1})), InputError);
}

} // TEST_SUITE
