#include "hsx/walks.hpp"

#include <utility>

#include "hsx/errors.hpp"

namespace hsx {

namespace {

std::string pair_id(const char* name, int m, int l) {
    return std::string(name) + "(" + std::to_string(m) + "," + std::to_string(l) + ")";
}

Eigen::VectorXd measure_vector(const SimplicialComplex& x, int level) {
    const auto& m = x.measure(level);
    return Eigen::Map<const Eigen::VectorXd>(m.data(), static_cast<Eigen::Index>(m.size()));
}

void check_level(const SimplicialComplex& x, int level, const char* what) {
    if (level < 0 || level > x.dimension()) {
        throw InputError(std::string(what) + ": level " + std::to_string(level) +
                         " out of range [0," + std::to_string(x.dimension()) + "]");
    }
}

WalkOperator make_operator(const SimplicialComplex& x, std::string id, int dom, int cod,
                           Eigen::MatrixXd matrix) {
    WalkOperator op;
    op.id = std::move(id);
    op.domain_level = dom;
    op.codomain_level = cod;
    op.domain_faces = x.faces(dom);
    op.codomain_faces = x.faces(cod);
    op.domain_measure = measure_vector(x, dom);
    op.codomain_measure = measure_vector(x, cod);
    op.matrix = std::move(matrix);
    return op;
}

} // namespace

double weighted_inner(const Eigen::VectorXd& f, const Eigen::VectorXd& g,
                      const Eigen::VectorXd& mu) {
    return (mu.array() * f.array() * g.array()).sum();
}

WalkOperator WalkOperator::adjoint() const {
    WalkOperator a;
    a.id = id + "+";
    a.domain_level = codomain_level;
    a.codomain_level = domain_level;
    a.domain_faces = codomain_faces;
    a.codomain_faces = domain_faces;
    a.domain_measure = codomain_measure;
    a.codomain_measure = domain_measure;
    a.matrix = domain_measure.cwiseInverse().asDiagonal() * matrix.transpose() *
               codomain_measure.asDiagonal();
    return a;
}

WalkOperator up_operator(const SimplicialComplex& x, int i) {
    check_level(x, i, "up_operator");
    check_level(x, i + 1, "up_operator");
    const auto& dom = x.faces(i);
    const auto& cod = x.faces(i + 1);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(cod.size()),
                                              static_cast<Eigen::Index>(dom.size()));
    const double share = 1.0 / static_cast<double>(i + 1);
    for (std::size_t t = 0; t < cod.size(); ++t) {
        for_each_subset(cod[t], i, [&](const Face& s) {
            m(static_cast<Eigen::Index>(t), x.face_index(i, s)) += share;
        });
    }
    return make_operator(x, "U" + std::to_string(i), i, i + 1, std::move(m));
}

WalkOperator down_operator(const SimplicialComplex& x, int j) {
    check_level(x, j - 1, "down_operator");
    check_level(x, j, "down_operator");
    const auto& dom = x.faces(j);
    const auto& cod = x.faces(j - 1);
    const auto& mu_dom = x.measure(j);
    const auto& mu_cod = x.measure(j - 1);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(cod.size()),
                                              static_cast<Eigen::Index>(dom.size()));
    for (std::size_t t = 0; t < dom.size(); ++t) {
        for_each_subset(dom[t], j - 1, [&](const Face& s) {
            const int si = x.face_index(j - 1, s);
            m(si, static_cast<Eigen::Index>(t)) +=
                mu_dom[t] / (static_cast<double>(j) * mu_cod[static_cast<std::size_t>(si)]);
        });
    }
    return make_operator(x, "D" + std::to_string(j), j, j - 1, std::move(m));
}

WalkOperator compose_down(const SimplicialComplex& x, int m, int l) {
    if (m > l) {
        throw InputError("compose_down: need m <= l, got m = " + std::to_string(m) +
                         ", l = " + std::to_string(l));
    }
    if (m < 1) throw InputError("compose_down: need m >= 1");
    check_level(x, l, "compose_down");
    Eigen::MatrixXd mat = Eigen::MatrixXd::Identity(
        static_cast<Eigen::Index>(x.faces(m).size()), static_cast<Eigen::Index>(x.faces(m).size()));
    for (int j = m + 1; j <= l; ++j) {
        mat = mat * down_operator(x, j).matrix;
    }
    return make_operator(x, pair_id("D", m, l), l, m, std::move(mat));
}

WalkOperator compose_up(const SimplicialComplex& x, int l, int m) {
    if (m > l) {
        throw InputError("compose_up: need m <= l, got m = " + std::to_string(m) +
                         ", l = " + std::to_string(l));
    }
    if (m < 1) throw InputError("compose_up: need m >= 1");
    check_level(x, l, "compose_up");
    Eigen::MatrixXd mat = Eigen::MatrixXd::Identity(
        static_cast<Eigen::Index>(x.faces(l).size()), static_cast<Eigen::Index>(x.faces(l).size()));
    for (int i = l - 1; i >= m; --i) {
        mat = mat * up_operator(x, i).matrix;
    }
    return make_operator(x, pair_id("U", l, m), m, l, std::move(mat));
}

WalkOperator updown_walk(const SimplicialComplex& x, int m, int l) {
    WalkOperator down = compose_down(x, m, l);
    WalkOperator up = compose_up(x, l, m);
    Eigen::MatrixXd mat = down.matrix * up.matrix;
    return make_operator(x, pair_id("N2", m, l), m, m, std::move(mat));
}

WalkOperator swap_operator(const SimplicialComplex& x, int m, int l) {
    if (m < 1 || l < 1) throw InputError("swap_operator: levels must be >= 1");
    if (m + l > x.dimension()) {
        throw InputError("swap_operator: m + l = " + std::to_string(m + l) +
                         " exceeds dimension " + std::to_string(x.dimension()));
    }
    const auto& dom = x.faces(l);
    const auto& cod = x.faces(m);
    const auto& mu_m = x.measure(m);
    const auto& tops = x.faces(m + l);
    const auto& mu_top = x.measure(m + l);
    const double choose = binomial(m + l, m);
    Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(cod.size()),
                                                static_cast<Eigen::Index>(dom.size()));
    for (std::size_t u = 0; u < tops.size(); ++u) {
        for_each_subset(tops[u], m, [&](const Face& s) {
            const Face t = face_difference(tops[u], s);
            const int si = x.face_index(m, s);
            const int ti = x.face_index(l, t);
            mat(si, ti) += mu_top[u] / (choose * mu_m[static_cast<std::size_t>(si)]);
        });
    }
    return make_operator(x, pair_id("S", m, l), l, m, std::move(mat));
}

namespace {

// Tagged two-level vertex list: side 0 carries X(m), side 1 carries X(l).
std::vector<GraphVertex> two_level_vertices(const SimplicialComplex& x, int m, int l) {
    std::vector<GraphVertex> verts;
    verts.reserve(x.faces(m).size() + x.faces(l).size());
    for (const Face& f : x.faces(m)) verts.push_back({0, f});
    for (const Face& f : x.faces(l)) verts.push_back({1, f});
    return verts;
}

} // namespace

WeightedGraph bipartite_walk_graph(const SimplicialComplex& x, int m, int l) {
    if (m > l) {
        throw InputError("bipartite_walk_graph: need m <= l, got m = " + std::to_string(m) +
                         ", l = " + std::to_string(l));
    }
    if (m < 1) throw InputError("bipartite_walk_graph: need m >= 1");
    check_level(x, l, "bipartite_walk_graph");
    const auto& side_m = x.faces(m);
    const auto& side_l = x.faces(l);
    const auto& mu_l = x.measure(l);
    const int n0 = static_cast<int>(side_m.size());
    const int n1 = static_cast<int>(side_l.size());
    const double scale = binomial(x.dimension(), l);
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n0 + n1, n0 + n1);
    for (int t = 0; t < n1; ++t) {
        const double wt = scale * mu_l[static_cast<std::size_t>(t)];
        for_each_subset(side_l[static_cast<std::size_t>(t)], m, [&](const Face& s) {
            const int si = x.face_index(m, s);
            w(si, n0 + t) = wt;
            w(n0 + t, si) = wt;
        });
    }
    return WeightedGraph(two_level_vertices(x, m, l), std::move(w), pair_id("B", m, l));
}

WeightedGraph two_step_graph(const SimplicialComplex& x, int m, int l) {
    if (m > l) {
        throw InputError("two_step_graph: need m <= l, got m = " + std::to_string(m) +
                         ", l = " + std::to_string(l));
    }
    if (m < 1) throw InputError("two_step_graph: need m >= 1");
    check_level(x, l, "two_step_graph");
    const auto& side_m = x.faces(m);
    const auto& side_l = x.faces(l);
    const auto& mu_l = x.measure(l);
    const int n0 = static_cast<int>(side_m.size());
    const double scale = binomial(x.dimension(), l);
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n0, n0);
    std::vector<int> subs;
    for (std::size_t t = 0; t < side_l.size(); ++t) {
        const double wt = scale * mu_l[t];
        subs.clear();
        for_each_subset(side_l[t], m, [&](const Face& s) { subs.push_back(x.face_index(m, s)); });
        for (std::size_t a = 0; a < subs.size(); ++a) {
            for (std::size_t b = a; b < subs.size(); ++b) {
                w(subs[a], subs[b]) += wt;
                if (subs[a] != subs[b]) w(subs[b], subs[a]) += wt;
            }
        }
    }
    std::vector<GraphVertex> verts;
    verts.reserve(side_m.size());
    for (const Face& f : side_m) verts.push_back({0, f});
    return WeightedGraph(std::move(verts), std::move(w), pair_id("B2", m, l));
}

WeightedGraph swap_graph(const SimplicialComplex& x, int m, int l) {
    if (m < 1 || l < 1) throw InputError("swap_graph: levels must be >= 1");
    if (m + l > x.dimension()) {
        throw InputError("swap_graph: m + l = " + std::to_string(m + l) +
                         " exceeds dimension " + std::to_string(x.dimension()));
    }
    const auto& side_m = x.faces(m);
    const int n0 = static_cast<int>(side_m.size());
    const int n1 = static_cast<int>(x.faces(l).size());
    const auto& tops = x.faces(m + l);
    const auto& mu_top = x.measure(m + l);
    const double choose = binomial(m + l, m);
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n0 + n1, n0 + n1);
    for (std::size_t u = 0; u < tops.size(); ++u) {
        const double wu = mu_top[u] / choose;
        for_each_subset(tops[u], m, [&](const Face& s) {
            const Face t = face_difference(tops[u], s);
            const int si = x.face_index(m, s);
            const int ti = x.face_index(l, t);
            w(si, n0 + ti) += wu;
            w(n0 + ti, si) += wu;
        });
    }
    return WeightedGraph(two_level_vertices(x, m, l), std::move(w), pair_id("G", m, l));
}

double two_step_weight_closed_form(const Hypergraph& h, const Face& s, const Face& t, int l) {
    const Face u = face_union(s, t);
    double mass = 0.0;
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
        if (face_contains(h.edges[e], u)) mass += h.weights[e];
    }
    return binomial(h.k - static_cast<int>(u.size()), l - static_cast<int>(u.size())) * mass;
}

double two_step_degree_closed_form(const Hypergraph& h, const Face& s, int m, int l) {
    double mass = 0.0;
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
        if (face_contains(h.edges[e], s)) mass += h.weights[e];
    }
    const double c = binomial(l, m);
    return c * c * (binomial(h.k, l) / binomial(h.k, m)) * mass;
}

} // namespace hsx
