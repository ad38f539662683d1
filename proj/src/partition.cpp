#include "hsx/partition.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "hsx/errors.hpp"
#include "hsx/spectra.hpp"
#include "hsx/walks.hpp"

namespace hsx {

namespace {

std::vector<char> membership(int n, const std::vector<int>& set, const char* what) {
    if (set.empty()) throw InputError(std::string(what) + ": empty set");
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    for (int v : set) {
        if (v < 0 || v >= n) {
            throw InputError(std::string(what) + ": id " + std::to_string(v) + " out of range");
        }
        if (in[static_cast<std::size_t>(v)]) {
            throw InputError(std::string(what) + ": repeated id " + std::to_string(v));
        }
        in[static_cast<std::size_t>(v)] = 1;
    }
    if (static_cast<int>(set.size()) == n) {
        throw InputError(std::string(what) + ": set equals the whole vertex set");
    }
    return in;
}

} // namespace

ConductanceResult conductance_hypergraph(const Hypergraph& h, const std::vector<Vertex>& set) {
    const auto in = membership(h.n, set, "conductance_hypergraph");
    ConductanceResult r;
    double total = 0.0;
    std::vector<double> deg(static_cast<std::size_t>(h.n), 0.0);
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
        int inside = 0;
        for (Vertex v : h.edges[e]) {
            deg[static_cast<std::size_t>(v)] += h.weights[e];
            if (in[static_cast<std::size_t>(v)]) ++inside;
        }
        if (inside > 0 && inside < h.k) r.boundary_weight += h.weights[e];
    }
    for (Vertex v = 0; v < h.n; ++v) {
        total += deg[static_cast<std::size_t>(v)];
        if (in[static_cast<std::size_t>(v)]) r.volume += deg[static_cast<std::size_t>(v)];
    }
    r.phi = r.boundary_weight / r.volume;
    r.within_half = r.volume <= total / 2.0 + kVolumeTol;
    return r;
}

ConductanceResult conductance_graph(const WeightedGraph& g, const std::vector<int>& set) {
    const auto in = membership(g.size(), set, "conductance_graph");
    ConductanceResult r;
    for (int i = 0; i < g.size(); ++i) {
        if (!in[static_cast<std::size_t>(i)]) continue;
        r.volume += g.degree(i);
        for (int j = 0; j < g.size(); ++j) {
            if (!in[static_cast<std::size_t>(j)]) r.boundary_weight += g.weight(i, j);
        }
    }
    r.phi = r.boundary_weight / r.volume;
    r.within_half = r.volume <= g.total_volume() / 2.0 + kVolumeTol;
    return r;
}

OracleResult brute_force_min_conductance(const Hypergraph& h, int vertex_cap) {
    if (h.n > vertex_cap) {
        throw BudgetError("oracle cap exceeded: n = " + std::to_string(h.n) + " > " +
                          std::to_string(vertex_cap));
    }
    if (h.n > 30) throw BudgetError("oracle cap above 30 vertices is not supported");

    const int n = h.n;
    std::vector<std::uint32_t> edge_mask(h.edges.size(), 0);
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
        for (Vertex v : h.edges[e]) edge_mask[e] |= (1u << v);
    }
    std::vector<double> deg(static_cast<std::size_t>(n), 0.0);
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
        for (Vertex v : h.edges[e]) deg[static_cast<std::size_t>(v)] += h.weights[e];
    }
    const double total = std::accumulate(deg.begin(), deg.end(), 0.0);
    const double half = total / 2.0 + kVolumeTol;

    auto lex_less = [n](std::uint32_t a, std::uint32_t b) {
        // compare vertex sets as sorted sequences
        for (int v = 0; v < n; ++v) {
            const bool ina = (a >> v) & 1u;
            const bool inb = (b >> v) & 1u;
            if (ina != inb) return ina; // {v,...} < {w,...} when v present only in a
        }
        return false;
    };

    double best_phi = 2.0;
    double best_boundary = 0.0;
    double best_volume = 0.0;
    std::uint32_t best_mask = 0;
    bool found = false;
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1u);
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        double vol = 0.0;
        std::uint32_t rest = mask;
        while (rest) {
            const int v = std::countr_zero(rest);
            vol += deg[static_cast<std::size_t>(v)];
            rest &= rest - 1;
        }
        if (vol > half) continue;
        double boundary = 0.0;
        for (std::size_t e = 0; e < edge_mask.size(); ++e) {
            const std::uint32_t overlap = mask & edge_mask[e];
            if (overlap != 0 && overlap != edge_mask[e]) boundary += h.weights[e];
        }
        const double phi = boundary / vol;
        const bool better = !found || phi < best_phi - 1e-14;
        const bool tie = found && std::abs(phi - best_phi) <= 1e-14 && lex_less(mask, best_mask);
        if (better || tie) {
            best_phi = phi;
            best_boundary = boundary;
            best_volume = vol;
            best_mask = mask;
            found = true;
        }
    }
    OracleResult out;
    out.phi = best_phi;
    out.boundary_weight = best_boundary;
    out.volume = best_volume;
    for (int v = 0; v < n; ++v) {
        if ((best_mask >> v) & 1u) out.set.push_back(v);
    }
    return out;
}

SweepResult fiedler_sweep(const WeightedGraph& g) {
    const int n = g.size();
    if (n < 2) throw InputError("fiedler_sweep needs at least two vertices");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g.sym_normalized_adjacency());
    const double lambda2 = solver.eigenvalues()(n - 2);
    Eigen::VectorXd y = solver.eigenvectors().col(n - 2);
    Eigen::VectorXd x(n);
    for (int i = 0; i < n; ++i) x(i) = y(i) / std::sqrt(g.degree(i));

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    const double total = g.total_volume();

    SweepResult best;
    best.phi = 2.0;
    bool found = false;

    auto scan = [&](const std::vector<int>& ord) {
        std::vector<char> in(static_cast<std::size_t>(n), 0);
        double cut = 0.0;
        double vol = 0.0;
        for (int j = 0; j + 1 < n; ++j) {
            const int v = ord[static_cast<std::size_t>(j)];
            for (int u = 0; u < n; ++u) {
                if (u == v) continue;
                cut += in[static_cast<std::size_t>(u)] ? -g.weight(v, u) : g.weight(v, u);
            }
            in[static_cast<std::size_t>(v)] = 1;
            vol += g.degree(v);
            double phi;
            std::vector<char> side = in;
            if (vol <= total / 2.0 + kVolumeTol) {
                phi = cut / vol;
            } else {
                phi = cut / (total - vol);
                for (auto& c : side) c = !c;
            }
            if (!found || phi < best.phi) {
                best.phi = phi;
                best.set.clear();
                for (int u = 0; u < n; ++u) {
                    if (side[static_cast<std::size_t>(u)]) best.set.push_back(u);
                }
                found = true;
            }
        }
    };

    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return x(a) != x(b) ? x(a) < x(b) : a < b; });
    scan(order);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return x(a) != x(b) ? x(a) > x(b) : a < b; });
    scan(order);

    best.lambda2 = lambda2;
    best.cheeger_bound = std::sqrt(2.0 * std::max(0.0, 1.0 - lambda2));
    return best;
}

CutCertificate hypergraph_sparse_cut(const Hypergraph& h, int l, std::size_t face_budget) {
    if (l < 2 || l > h.k) {
        throw InputError("sparse-cut level l = " + std::to_string(l) + " out of range [2," +
                         std::to_string(h.k) + "]");
    }
    const SimplicialComplex x = SimplicialComplex::induce(h, face_budget);

    // a rank-deficient operator has no second singular value; it is 0 then
    auto sigma2 = [](const SpectralReport& r) {
        return r.values.size() > 1 ? r.values[1] : 0.0;
    };

    CutCertificate cert;
    cert.level = l;
    cert.sigma2_d12 = sigma2(singular_values(compose_down(x, 1, 2)));
    cert.sigma2_d1l = l == 2 ? cert.sigma2_d12 : sigma2(singular_values(compose_down(x, 1, l)));
    cert.epsilon = std::max(0.0, 1.0 - cert.sigma2_d12);
    cert.epsilon_l = std::max(0.0, 1.0 - cert.sigma2_d1l);
    cert.lambda2_updown = cert.sigma2_d1l * cert.sigma2_d1l;
    cert.lower_bound = (1.0 - cert.lambda2_updown) / static_cast<double>(h.k);
    cert.upper_bound = 4.0 * std::sqrt(cert.epsilon);

    const WeightedGraph b2 = two_step_graph(x, 1, 2);
    const SweepResult sweep = fiedler_sweep(b2);
    // B^2_{1,2} vertices are the singleton faces in lex order, so the graph
    // index equals the vertex id
    cert.set.reserve(sweep.set.size());
    for (int i : sweep.set) cert.set.push_back(b2.vertex(i).face[0]);
    std::sort(cert.set.begin(), cert.set.end());

    cert.phi_b2 = conductance_graph(b2, sweep.set).phi;
    const ConductanceResult ch = conductance_hypergraph(h, cert.set);
    cert.phi_hypergraph = ch.phi;
    cert.within_half = ch.within_half;
    cert.upper_ok = cert.phi_hypergraph <= cert.upper_bound + kBoundTol;
    cert.relate_ok = cert.phi_hypergraph <= 2.0 * cert.phi_b2 + kBoundTol;
    return cert;
}

namespace {

double b2_boundary_weight(const WeightedGraph& b2, const std::vector<char>& in) {
    double w = 0.0;
    for (int i = 0; i < b2.size(); ++i) {
        if (!in[static_cast<std::size_t>(i)]) continue;
        for (int j = 0; j < b2.size(); ++j) {
            if (!in[static_cast<std::size_t>(j)]) w += b2.weight(i, j);
        }
    }
    return w;
}

} // namespace

BoundReport verify_expansion_bounds(const Hypergraph& h, const std::vector<Vertex>& set, int l,
                                    std::size_t face_budget) {
    if (l < 2 || l > h.k) {
        throw InputError("bound check level l = " + std::to_string(l) + " out of range [2," +
                         std::to_string(h.k) + "]");
    }
    const auto in = membership(h.n, set, "verify_expansion_bounds");
    const SimplicialComplex x = SimplicialComplex::induce(h, face_budget);
    const WeightedGraph b2_12 = two_step_graph(x, 1, 2);
    const WeightedGraph b2_1l = l == 2 ? b2_12 : two_step_graph(x, 1, l);

    const ConductanceResult ch = conductance_hypergraph(h, set);
    const ConductanceResult c12 = conductance_graph(b2_12, set);
    const ConductanceResult c1l = conductance_graph(b2_1l, set);
    const double k = static_cast<double>(h.k);

    BoundReport report;
    auto add = [&report](std::string name, double lhs, double rhs) {
        BoundCheck c;
        c.name = std::move(name);
        c.lhs = lhs;
        c.rhs = rhs;
        c.slack = rhs - lhs;
        c.pass = c.slack >= -kBoundTol;
        report.checks.push_back(std::move(c));
    };

    const double boundary_h = ch.boundary_weight;
    add("related_boundary_edges", (k - 1.0) * boundary_h, b2_boundary_weight(b2_12, in));
    add("boundary_upper", b2_boundary_weight(b2_1l, in),
        binomial(h.k, l) * binomial(l, 2) * boundary_h);
    add("relate_expansion", ch.phi, 2.0 * c12.phi);
    add("lowerbound_expansion", (2.0 / k) * c1l.phi, ch.phi);

    report.all_pass = std::all_of(report.checks.begin(), report.checks.end(),
                                  [](const BoundCheck& c) { return c.pass; });
    return report;
}

} // namespace hsx
