#include "modepoly/io.hpp"

#include "modepoly/error.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace modepoly::io {

namespace {

Json parse_json(std::string_view text, const char* what) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(std::string("malformed ") + what + " JSON: " + e.what());
    }
}

std::vector<std::string> string_list(const Json& j, const char* field) {
    if (!j.is_array()) throw InvalidInput(std::string("'") + field + "' must be an array of strings");
    std::vector<std::string> out;
    for (const auto& item : j) {
        if (!item.is_string()) throw InvalidInput(std::string("'") + field + "' must contain only strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> pair_list(const Json& j, const char* field) {
    if (!j.is_array()) throw InvalidInput(std::string("'") + field + "' must be an array of pairs");
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string())
            throw InvalidInput(std::string("'") + field + "' entries must be [string, string]");
        out.emplace_back(item[0].get<std::string>(), item[1].get<std::string>());
    }
    return out;
}

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw InvalidInput(std::string("missing field '") + name + "'");
    return j.at(name);
}

Json labels_json(const Graph& g, std::span<const NodeIndex> set) {
    Json out = Json::array();
    for (NodeIndex v : set) out.push_back(g.label(v));
    return out;
}

} // namespace

Graph parse_graph(std::string_view text) {
    Json j = parse_json(text, "graph");
    return Graph(string_list(field(j, "nodes"), "nodes"), pair_list(field(j, "edges"), "edges"));
}

Json graph_to_json(const Graph& g) {
    Json edges = Json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back(Json::array({a, b}));
    return Json{{"nodes", g.labels()}, {"edges", edges}};
}

ModeSet parse_mode_set(std::string_view text, const Graph& g) {
    Json j = parse_json(text, "mode set");
    return ModeSet::from_labels(g, string_list(field(j, "modes"), "modes"));
}

Json mode_set_to_json(const Graph& g, const ModeSet& c) { return Json{{"modes", labels_json(g, c.members())}}; }

Poset parse_poset(std::string_view text) {
    Json j = parse_json(text, "poset");
    return Poset(string_list(field(j, "elements"), "elements"), pair_list(field(j, "covers"), "covers"));
}

Json poset_to_json(const Poset& p) {
    Json covers = Json::array();
    for (auto [lo, up] : p.covers()) covers.push_back(Json::array({p.elements()[lo], p.elements()[up]}));
    return Json{{"elements", p.elements()}, {"covers", covers}};
}

Distribution parse_distribution(std::string_view text, const Graph& g) {
    Json j = parse_json(text, "distribution");
    if (!j.is_object()) throw InvalidInput("distribution must be an object {node: \"num/den\"}");
    RationalVector p(g.size());
    std::vector<bool> seen(g.size(), false);
    for (const auto& [label, value] : j.items()) {
        const NodeIndex x = g.index_of(label);
        if (seen[x]) throw InvalidInput("node '" + label + "' listed twice");
        seen[x] = true;
        if (value.is_string())
            p[x] = parse_rational(value.get<std::string>());
        else if (value.is_number_integer())
            p[x] = Rational(BigInt(std::to_string(value.get<long long>())));
        else
            throw InvalidInput("probability of '" + label + "' must be a \"num/den\" string");
    }
    for (NodeIndex x = 0; x < g.size(); ++x)
        if (!seen[x]) throw InvalidInput("distribution has no entry for node '" + g.label(x) + "'");
    return Distribution(std::move(p));
}

Json rational_to_json(const Rational& q) { return to_string(q); }

Json distribution_to_json(const Graph& g, const Distribution& p) {
    Json out = Json::object();
    for (NodeIndex x = 0; x < g.size(); ++x) out[g.label(x)] = to_string(p[x]);
    return out;
}

std::string generator_label(const Graph& g, const Generator& gen) {
    switch (gen.kind) {
    case Generator::Kind::PointMass: return "delta:" + g.label(gen.nodes.at(0));
    case Generator::Kind::Anchor: return "anchor:" + g.label(gen.nodes.at(0));
    case Generator::Kind::Witness: {
        std::string s = "W:[";
        for (std::size_t i = 0; i < gen.nodes.size(); ++i) {
            if (i) s += ',';
            s += g.label(gen.nodes[i]);
        }
        return s + "]";
    }
    case Generator::Kind::Unlabelled: return "oracle";
    }
    return "oracle";
}

Json vrep_to_json(const Graph& g, const VRep& v) {
    Json out = Json::array();
    for (const auto& vertex : v.vertices)
        out.push_back(Json{{"generator", generator_label(g, vertex.generator)},
                           {"probabilities", distribution_to_json(g, vertex.point)}});
    return out;
}

Json strong_vertices_to_json(const Graph& g, const std::vector<StrongVertex>& vertices) {
    Json out = Json::array();
    for (const auto& v : vertices)
        out.push_back(Json{{"anchor", g.label(v.anchor)},
                           {"support", labels_json(g, v.support)},
                           {"probabilities", distribution_to_json(g, v.point)}});
    return out;
}

Json facets_to_json(const Graph& g, const std::vector<FacetInfo>& facets) {
    Json out = Json::array();
    for (const auto& f : facets)
        out.push_back(Json{{"kind", describe(g.labels(), f.inequality)}, {"facet", f.facet}, {"reason", f.reason}});
    return out;
}

Json certificate_to_json(const std::vector<std::string>& labels, const ViolationCertificate& cert) {
    return Json{{"inequality", describe(labels, cert.inequality)},
                {"lhs", to_string(cert.lhs)},
                {"rhs", to_string(cert.rhs)},
                {"slack", to_string(cert.slack)}};
}

Json membership_to_json(const Graph& g, const MembershipResult& r) {
    Json out{{"member", r.member}};
    if (r.violation) out["violation"] = certificate_to_json(g.labels(), *r.violation);
    return out;
}

Json decomposition_to_json(const Graph& g, const std::vector<WeightedVertex>& parts) {
    Json out = Json::array();
    for (const auto& part : parts)
        out.push_back(Json{{"generator", generator_label(g, part.vertex.generator)},
                           {"weight", to_string(part.weight)},
                           {"probabilities", distribution_to_json(g, part.vertex.point)}});
    return out;
}

Json degeneracy_to_json(const Graph& g, const std::vector<ForcedConstraint>& report) {
    Json out = Json::array();
    for (const auto& fc : report) out.push_back(describe(g, fc));
    return out;
}

Json montecarlo_to_json(const std::string& instance, const Rational& exact, const McEstimate& e,
                        std::uint64_t seed) {
    return Json{{"instance", instance},
                {"exact", to_string(exact)},
                {"estimate", e.estimate_value()},
                {"stderr", e.stderr_value},
                {"trials", e.trials},
                {"seed", seed}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace modepoly::io
