#include "hsx/json_io.hpp"

#include <cmath>
#include <cstdio>

#include "hsx/errors.hpp"

namespace hsx {

Hypergraph parse_hypergraph(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw InputError("input must be a JSON object");
    if (!j.contains("k") || !j["k"].is_number_integer()) {
        throw InputError("missing integer field \"k\"");
    }
    if (!j.contains("vertices") || !j["vertices"].is_number_integer()) {
        throw InputError("missing integer field \"vertices\"");
    }
    if (!j.contains("edges") || !j["edges"].is_array() || j["edges"].empty()) {
        throw InputError("missing non-empty array field \"edges\"");
    }
    const int k = j["k"].get<int>();
    const int n = j["vertices"].get<int>();

    std::vector<Face> edges;
    edges.reserve(j["edges"].size());
    for (std::size_t i = 0; i < j["edges"].size(); ++i) {
        const json& je = j["edges"][i];
        if (!je.is_array()) {
            throw InputError("edge " + std::to_string(i) + " is not an array");
        }
        Face e;
        e.reserve(je.size());
        for (const json& jv : je) {
            if (!jv.is_number_integer()) {
                throw InputError("edge " + std::to_string(i) + " has a non-integer vertex");
            }
            e.push_back(jv.get<int>());
        }
        edges.push_back(std::move(e));
    }

    std::vector<double> weights;
    if (j.contains("weights")) {
        if (!j["weights"].is_array()) throw InputError("\"weights\" must be an array");
        weights.reserve(j["weights"].size());
        for (std::size_t i = 0; i < j["weights"].size(); ++i) {
            if (!j["weights"][i].is_number()) {
                throw InputError("weight " + std::to_string(i) + " is not a number");
            }
            weights.push_back(j["weights"][i].get<double>());
        }
    }
    return make_hypergraph(k, n, std::move(edges), std::move(weights));
}

json hypergraph_to_json(const Hypergraph& h) {
    json j;
    j["k"] = h.k;
    j["vertices"] = h.n;
    j["edges"] = h.edges;
    j["weights"] = h.weights;
    return j;
}

json spectral_report_to_json(const SpectralReport& r) {
    json j;
    j["object"] = r.object_id;
    j["kind"] = r.kind;
    j["values"] = r.values;
    j["tolerance"] = r.tolerance;
    return j;
}

json walk_operator_to_json(const WalkOperator& op) {
    json j;
    j["id"] = op.id;
    j["rows"] = op.codomain_faces;
    j["cols"] = op.domain_faces;
    json data = json::array();
    for (Eigen::Index r = 0; r < op.matrix.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < op.matrix.cols(); ++c) row.push_back(op.matrix(r, c));
        data.push_back(std::move(row));
    }
    j["data"] = std::move(data);
    return j;
}

json weighted_graph_to_json(const WeightedGraph& g) {
    json j;
    j["id"] = g.id();
    json verts = json::array();
    for (const GraphVertex& v : g.vertices()) {
        verts.push_back(json{{"side", v.side}, {"face", v.face}});
    }
    j["vertices"] = std::move(verts);
    json w = json::array();
    for (int r = 0; r < g.size(); ++r) {
        json row = json::array();
        for (int c = 0; c < g.size(); ++c) row.push_back(g.weight(r, c));
        w.push_back(std::move(row));
    }
    j["weights"] = std::move(w);
    return j;
}

json oracle_result_to_json(const OracleResult& r) {
    return json{{"set", r.set},
                {"phi", r.phi},
                {"boundary_weight", r.boundary_weight},
                {"volume", r.volume}};
}

json sweep_result_to_json(const SweepResult& r) {
    return json{{"set", r.set},
                {"phi", r.phi},
                {"lambda2", r.lambda2},
                {"cheeger_bound", r.cheeger_bound}};
}

json cut_certificate_to_json(const CutCertificate& c) {
    json j;
    j["set"] = c.set;
    j["level"] = c.level;
    j["phi_hypergraph"] = c.phi_hypergraph;
    j["phi_b2_12"] = c.phi_b2;
    j["sigma2_d12"] = c.sigma2_d12;
    j["sigma2_d1l"] = c.sigma2_d1l;
    j["epsilon"] = c.epsilon;
    j["epsilon_l"] = c.epsilon_l;
    j["lambda2_updown_1l"] = c.lambda2_updown;
    j["bounds"] = json{{"lower", c.lower_bound}, {"upper", c.upper_bound}};
    j["vol_within_half"] = c.within_half;
    j["upper_ok"] = c.upper_ok;
    j["relate_ok"] = c.relate_ok;
    return j;
}

json bound_report_to_json(const BoundReport& r) {
    json checks = json::array();
    for (const BoundCheck& c : r.checks) {
        checks.push_back(json{{"name", c.name},
                              {"lhs", c.lhs},
                              {"rhs", c.rhs},
                              {"slack", c.slack},
                              {"pass", c.pass}});
    }
    return json{{"checks", std::move(checks)}, {"all_pass", r.all_pass}};
}

json splitting_tree_to_json(const SplittingTree& t) {
    json j;
    j["label"] = t.label;
    if (!t.is_leaf()) {
        j["children"] =
            json::array({splitting_tree_to_json(t.children[0]), splitting_tree_to_json(t.children[1])});
    }
    return j;
}

json splittability_to_json(const SplittabilityResult& r) {
    json ranks = json::object();
    for (const auto& [id, rank] : r.pair_ranks) ranks[id] = rank;
    return json{{"splittable", r.splittable},
                {"tau", r.tau},
                {"r", r.required_rank},
                {"best_rank", r.best_rank},
                {"witness_tree", splitting_tree_to_json(r.witness)},
                {"blocking_graph", r.blocking_graph},
                {"pair_ranks", std::move(ranks)}};
}

json link_expansion_to_json(const LinkExpansionResult& r) {
    return json{{"gamma", r.gamma},
                {"link_expansion", 1.0 - r.gamma},
                {"witness_face", r.witness},
                {"links_checked", r.links_checked}};
}

json claim_report_to_json(const ClaimReport& r) {
    json j;
    j["construction"] = r.construction;
    json params = json::object();
    for (const auto& [name, value] : r.params) params[name] = value;
    j["params"] = std::move(params);
    if (!r.note.empty()) j["note"] = r.note;
    json claims = json::array();
    for (const Claim& c : r.claims) {
        json jc{{"id", c.id},
                {"measured", c.measured},
                {"bound", c.bound},
                {"relation", c.relation},
                {"pass", c.pass}};
        if (!c.detail.empty()) jc["detail"] = c.detail;
        claims.push_back(std::move(jc));
    }
    j["claims"] = std::move(claims);
    j["all_pass"] = r.all_pass;
    return j;
}

namespace {

void dump_rec(const json& j, std::string& out, int indent, int depth) {
    const std::string pad(static_cast<std::size_t>(indent) * static_cast<std::size_t>(depth), ' ');
    const std::string pad_in(static_cast<std::size_t>(indent) * (static_cast<std::size_t>(depth) + 1),
                             ' ');
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad_in;
                out += json(it.key()).dump();
                out += ": ";
                dump_rec(it.value(), out, indent, depth + 1);
            }
            out += "\n" + pad + "}";
            return;
        }
        case json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += ",\n";
                out += pad_in;
                dump_rec(j[i], out, indent, depth + 1);
            }
            out += "\n" + pad + "]";
            return;
        }
        case json::value_t::number_float: {
            const double x = j.get<double>();
            if (!std::isfinite(x)) {
                out += "null";
                return;
            }
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.17g", x);
            out += buf;
            return;
        }
        default:
            out += j.dump();
            return;
    }
}

} // namespace

std::string dump_json(const json& j, int indent) {
    std::string out;
    dump_rec(j, out, indent, 0);
    out += "\n";
    return out;
}

} // namespace hsx
