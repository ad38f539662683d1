#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hsx/constructions.hpp"
#include "hsx/errors.hpp"
#include "hsx/spectra.hpp"
#include "hsx/walks.hpp"

using namespace hsx;

namespace {

const Claim& claim_by_id(const ClaimReport& r, const std::string& id) {
    for (const Claim& c : r.claims) {
        if (c.id == id) return c;
    }
    FAIL("missing claim ", id);
    static Claim dummy;
    return dummy;
}

} // namespace

TEST_SUITE("constructions") {

TEST_CASE("sunflower generator") {
    const Hypergraph h = sunflower_hypergraph(2, 3);
    CHECK(h.n == 5);
    CHECK(h.edges == std::vector<Face>{{0, 1, 2}, {0, 3, 4}});
    CHECK(h.weights[0] == doctest::Approx(0.5));

    const Hypergraph single = sunflower_hypergraph(1, 4);
    CHECK(single.edges.size() == 1);
    CHECK(single.n == 4);

    // pairwise intersections are exactly the core
    for (int r = 2; r <= 6; ++r) {
        for (int k = 3; k <= 5; ++k) {
            const Hypergraph s = sunflower_hypergraph(r, k);
            CHECK(s.n == r * (k - 1) + 1);
            for (std::size_t i = 0; i < s.edges.size(); ++i) {
                for (std::size_t j = i + 1; j < s.edges.size(); ++j) {
                    Face common;
                    std::set_intersection(s.edges[i].begin(), s.edges[i].end(),
                                          s.edges[j].begin(), s.edges[j].end(),
                                          std::back_inserter(common));
                    CHECK(common == Face{0});
                }
            }
        }
    }

    CHECK_THROWS_AS(sunflower_hypergraph(0, 3), InputError);
    CHECK_THROWS_AS(sunflower_hypergraph(2, 2), InputError);
}

TEST_CASE("cycle-link generator") {
    const Hypergraph h = cycle_link_hypergraph(9, 3);
    CHECK(h.n == 10);
    CHECK(h.edges.size() == 93); // C(9,3) + 9

    // the cycle part contributes exactly n edges (those touching the tail)
    int cycle_edges = 0;
    for (const Face& e : h.edges) {
        if (std::binary_search(e.begin(), e.end(), 9)) ++cycle_edges;
    }
    CHECK(cycle_edges == 9);

    // tail degree n, cycle-vertex degree C(n-1,k-1)+2
    for (int n = 9; n <= 15; n += 3) {
        for (int k = 3; k <= 4; ++k) {
            if (n < 3 * k) continue;
            const Hypergraph g = cycle_link_hypergraph(n, k);
            CHECK(g.n == n + k - 2);
            const int expected = static_cast<int>(binomial(n - 1, k - 1)) + 2;
            for (Vertex v = 0; v < g.n; ++v) {
                int deg = 0;
                for (const Face& e : g.edges) {
                    if (std::binary_search(e.begin(), e.end(), v)) ++deg;
                }
                if (v < n) {
                    CHECK(deg == expected);
                } else {
                    CHECK(deg == n);
                }
            }
        }
    }

    CHECK_THROWS_AS(cycle_link_hypergraph(8, 3), InputError);
    CHECK_THROWS_AS(cycle_link_hypergraph(9, 2), InputError);
}

TEST_CASE("arbitrary base graphs slot into the link construction") {
    // the cycle is the special case
    std::vector<std::pair<int, int>> cycle;
    for (int i = 0; i < 9; ++i) cycle.emplace_back(i, (i + 1) % 9);
    const Hypergraph via_hook = graph_link_hypergraph(9, 3, cycle);
    const Hypergraph direct = cycle_link_hypergraph(9, 3);
    CHECK(via_hook.edges == direct.edges);

    // a path base makes the tail link skeleton that path
    std::vector<std::pair<int, int>> path;
    for (int i = 0; i + 1 < 9; ++i) path.emplace_back(i, i + 1);
    const Hypergraph h = graph_link_hypergraph(9, 3, path);
    const SimplicialComplex x = SimplicialComplex::induce(h);
    const WeightedGraph g = skeleton(link(x, {9}));
    CHECK(g.size() == 9);
    CHECK(g.component_count() == 1);
    int edge_count = 0;
    for (int i = 0; i < g.size(); ++i) {
        for (int j = i + 1; j < g.size(); ++j) {
            if (g.weight(i, j) > 0.0) ++edge_count;
        }
    }
    CHECK(edge_count == 8);

    CHECK_THROWS_AS(graph_link_hypergraph(9, 3, {}), InputError);
    CHECK_THROWS_AS(graph_link_hypergraph(9, 3, {{0, 0}}), InputError);
    CHECK_THROWS_AS(graph_link_hypergraph(9, 3, {{0, 9}}), InputError);
}

TEST_CASE("sunflower claims hold at r=3, k=3") {
    const ClaimReport report = verify_sunflower_claims(3, 3);
    CHECK(report.all_pass);
    CHECK(!report.note.empty());
    CHECK(std::is_sorted(report.claims.begin(), report.claims.end(),
                         [](const Claim& a, const Claim& b) { return a.id < b.id; }));

    const Claim& lam = claim_by_id(report, "lambda_r(G(1,2))==1");
    CHECK(lam.measured == doctest::Approx(1.0).epsilon(1e-9));
    const Claim& oracle = claim_by_id(report, "oracle_phi>=1/k");
    CHECK(oracle.measured >= 1.0 / 3.0 - 1e-12);
    const Claim& n2 = claim_by_id(report, "lambda_r(N2(2,3))==1");
    CHECK(n2.pass);
    const Claim& comp = claim_by_id(report, "components(B(2,3))==r");
    CHECK(comp.measured == doctest::Approx(3.0));
}

TEST_CASE("sunflower claims hold at r=3, k=4") {
    const ClaimReport report = verify_sunflower_claims(3, 4);
    CHECK(report.all_pass);
    CHECK(claim_by_id(report, "lambda_r(N2(2,3))==1").pass);
    CHECK(claim_by_id(report, "lambda_r(G(2,2))==1").pass);
    CHECK(claim_by_id(report, "lambda_r(G(1,3))==1").pass);
    // swap graphs have at least r components
    for (const Claim& c : report.claims) {
        if (c.id.rfind("components(G", 0) == 0) {
            CHECK(c.measured >= 3.0);
        }
    }
}

TEST_CASE("B_{2,k} of the two-petal sunflower has two components") {
    const SimplicialComplex x = SimplicialComplex::induce(sunflower_hypergraph(2, 3));
    CHECK(bipartite_walk_graph(x, 2, 3).component_count() == 2);
}

TEST_CASE("cycle-link claims hold at n=9 and n=12") {
    const ClaimReport r9 = verify_cycle_link_claims(9, 3);
    CHECK(r9.all_pass);
    const Claim& sigma9 = claim_by_id(r9, "sigma2(skeleton(link(tau)))==cos(2pi/n)");
    CHECK(sigma9.measured ==
          doctest::Approx(std::cos(2.0 * std::numbers::pi / 9.0)).epsilon(1e-9));
    CHECK(claim_by_id(r9, "oracle_phi>=1/(3k)^k").pass);

    const ClaimReport r12 = verify_cycle_link_claims(12, 3);
    CHECK(r12.all_pass);
    const Claim& sigma12 = claim_by_id(r12, "sigma2(skeleton(link(tau)))==cos(2pi/n)");
    CHECK(sigma12.measured == doctest::Approx(0.8660254).epsilon(1e-7));
    CHECK(claim_by_id(r12, "link(tau)_skeleton_is_cycle").pass);
    CHECK(claim_by_id(r12, "hdx_gamma>=cos(2pi/n)").pass);
}

} // TEST_SUITE
