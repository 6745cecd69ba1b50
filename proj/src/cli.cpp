#include "modepoly/cli.hpp"

#include "modepoly/degeneracy.hpp"
#include "modepoly/error.hpp"
#include "modepoly/io.hpp"
#include "modepoly/linalg.hpp"
#include "modepoly/membership.hpp"
#include "modepoly/mode_polytope.hpp"
#include "modepoly/oracle.hpp"
#include "modepoly/poset.hpp"
#include "modepoly/strong_polytope.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

namespace modepoly::cli {

namespace {

using io::Json;

constexpr std::uint64_t kDefaultMaxNodes = std::uint64_t{1} << kDefaultMaxHypercubeDim;
constexpr std::uint64_t kDefaultSeed = 20240601;

struct Options {
    std::string graph_file;
    std::string generator;
    std::optional<std::string> modes;
    std::string modes_file;
    std::string poset_file;
    std::string dist_file;
    std::string format = "json";
    std::string kind = "mode";
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t max_ideals = kDefaultMaxIdeals;
    std::uint64_t max_extensions = kDefaultMaxExtensions;
    std::uint64_t max_nodes = kDefaultMaxNodes;
    std::uint64_t max_vertices = kDefaultMaxVertices;
    std::uint64_t montecarlo = 0;
    std::size_t oracle_max_nodes = 8;
    unsigned workers = 1;
    bool naive = false;
    bool lower_bound = false;
    bool list = false;
    bool strong = false;
    bool strict = false;
};

bool text(const Options& o) { return o.format == "text"; }

std::uint64_t parse_count(std::string_view s, std::string_view what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw InvalidInput("bad " + std::string(what) + " '" + std::string(s) + "'");
    return v;
}

void check_nodes(std::uint64_t nodes, const Options& o) {
    if (nodes > o.max_nodes)
        throw BudgetExceeded("graph has more nodes than --max-nodes=" + std::to_string(o.max_nodes), nodes);
}

struct Instance {
    Graph graph;
    std::optional<unsigned> cube_dim;
};

Instance load_graph(const Options& o) {
    if (o.graph_file.empty() == o.generator.empty())
        throw InvalidInput("give exactly one of --graph or --generator");
    if (!o.graph_file.empty()) {
        Graph g = io::parse_graph(io::read_file(o.graph_file));
        check_nodes(g.size(), o);
        return {std::move(g), std::nullopt};
    }
    const auto colon = o.generator.find(':');
    if (colon == std::string::npos) throw InvalidInput("generator spec needs the form name:size");
    const std::string family = o.generator.substr(0, colon);
    const std::string_view arg = std::string_view(o.generator).substr(colon + 1);

    if (family == "hypercube") {
        const std::uint64_t n = parse_count(arg, "hypercube dimension");
        if (n >= 63) throw InvalidInput("hypercube dimension too large");
        check_nodes(std::uint64_t{1} << n, o);
        return {generate_hypercube(static_cast<unsigned>(n), 62), static_cast<unsigned>(n)};
    }
    if (family == "path" || family == "cycle") {
        const std::uint64_t n = parse_count(arg, family + " length");
        check_nodes(n, o);
        return {family == "path" ? generate_path(n) : generate_cycle(n), std::nullopt};
    }
    if (family == "grid") {
        const auto x = arg.find('x');
        if (x == std::string_view::npos) throw InvalidInput("grid spec needs the form grid:RxC");
        const std::uint64_t r = parse_count(arg.substr(0, x), "grid rows");
        const std::uint64_t c = parse_count(arg.substr(x + 1), "grid columns");
        if (r != 0 && c > o.max_nodes / r) check_nodes(o.max_nodes + 1, o);
        check_nodes(r * c, o);
        return {generate_grid(r, c), std::nullopt};
    }
    throw InvalidInput("unknown generator '" + family + "'");
}

ModeSet load_modes(const Options& o, const Instance& inst) {
    if (o.modes.has_value() == !o.modes_file.empty())
        throw InvalidInput("give exactly one of --modes or --modes-file");
    if (!o.modes_file.empty()) return io::parse_mode_set(io::read_file(o.modes_file), inst.graph);

    const std::string& spec = *o.modes;
    if (spec == "even-parity" || spec == "odd-parity") {
        if (!inst.cube_dim) throw InvalidInput("parity mode sets need a hypercube generator");
        return spec == "even-parity" ? even_parity_set(inst.graph, *inst.cube_dim)
                                     : odd_parity_set(inst.graph, *inst.cube_dim);
    }
    std::vector<std::string> labels;
    std::stringstream ss(spec);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) labels.push_back(item);
    return ModeSet::from_labels(inst.graph, labels);
}

// ---------------------------------------------------------------------------
// Text rendering

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (width.size() <= i) width.push_back(0);
            width[i] = std::max(width[i], row[i].size());
        }
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
        }
        line.erase(line.find_last_not_of(' ') + 1);
        out << line << '\n';
    }
}

std::vector<std::string> header(const Graph& g, std::string first) {
    std::vector<std::string> row{std::move(first)};
    for (const auto& l : g.labels()) row.push_back(l);
    return row;
}

std::vector<std::string> point_row(std::string first, const Distribution& p) {
    std::vector<std::string> row{std::move(first)};
    for (const auto& v : p.values()) row.push_back(to_string(v));
    return row;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------
// Commands

int cmd_generate(const Options& o, std::ostream& out) {
    const Instance inst = load_graph(o);
    if (text(o)) {
        std::vector<std::vector<std::string>> rows{{"node", "neighbors"}};
        for (NodeIndex v = 0; v < inst.graph.size(); ++v) {
            std::string nb;
            for (NodeIndex y : inst.graph.neighbors(v)) nb += (nb.empty() ? "" : ",") + inst.graph.label(y);
            rows.push_back({inst.graph.label(v), nb});
        }
        print_table(out, rows);
    } else {
        emit(out, io::graph_to_json(inst.graph));
    }
    return kSuccess;
}

int cmd_vertices(const Options& o, std::ostream& out) {
    const Instance inst = load_graph(o);
    const Graph& g = inst.graph;
    const ModeSet c = load_modes(o, inst);
    if (o.kind == "mode") {
        const VRep v = mode_vertices(g, c, o.max_vertices);
        if (text(o)) {
            std::vector<std::vector<std::string>> rows{header(g, "generator")};
            for (const auto& vx : v.vertices) rows.push_back(point_row(io::generator_label(g, vx.generator), vx.point));
            print_table(out, rows);
        } else {
            emit(out, Json{{"polytope", "mode"}, {"count", v.vertices.size()}, {"vertices", io::vrep_to_json(g, v)}});
        }
    } else {
        const auto v = strong_vertices(g, c);
        if (text(o)) {
            std::vector<std::vector<std::string>> rows{header(g, "anchor")};
            for (const auto& vx : v) rows.push_back(point_row(g.label(vx.anchor), vx.point));
            print_table(out, rows);
        } else {
            emit(out, Json{{"polytope", "strong"}, {"count", v.size()}, {"vertices", io::strong_vertices_to_json(g, v)}});
        }
    }
    return kSuccess;
}

int cmd_facets(const Options& o, std::ostream& out) {
    const Instance inst = load_graph(o);
    const ModeSet c = load_modes(o, inst);
    const auto facets = o.kind == "mode" ? mode_facets(inst.graph, c) : classify_strong_facets(inst.graph, c);
    const std::size_t count = o.kind == "mode"
                                  ? static_cast<std::size_t>(std::count_if(facets.begin(), facets.end(),
                                                                           [](const FacetInfo& f) { return f.facet; }))
                                  : strong_facets(inst.graph, c).size();
    if (text(o)) {
        std::vector<std::vector<std::string>> rows{{"inequality", "facet", "reason"}};
        for (const auto& f : facets)
            rows.push_back({describe(inst.graph.labels(), f.inequality), f.facet ? "yes" : "no", f.reason});
        print_table(out, rows);
    } else {
        emit(out, Json{{"polytope", o.kind}, {"facet_count", count}, {"inequalities", io::facets_to_json(inst.graph, facets)}});
    }
    return kSuccess;
}

int cmd_volume(const Options& o, std::ostream& out) {
    Rational exact;
    std::optional<HRep> h;
    std::string instance;
    if (!o.poset_file.empty()) {
        if (o.kind != "mode") throw InvalidInput("--poset only applies to the mode polytope");
        const Poset order = io::parse_poset(io::read_file(o.poset_file));
        exact = mode_volume_ratio_poset(order, o.max_ideals);
        if (o.montecarlo) h = mode_hrep_poset(order);
        instance = "poset:" + o.poset_file;
    } else {
        const Instance inst = load_graph(o);
        const ModeSet c = load_modes(o, inst);
        if (o.kind == "mode") {
            exact = mode_volume_ratio(inst.graph, c, o.max_ideals);
            if (o.montecarlo) h = mode_hrep(inst.graph, c);
        } else {
            exact = strong_volume_ratio(inst.graph, c);
            if (o.montecarlo) h = strong_hrep(inst.graph, c);
        }
        instance = o.kind + ":" + (o.graph_file.empty() ? o.generator : o.graph_file);
    }

    if (!o.montecarlo) {
        if (text(o))
            out << to_string(exact) << '\n';
        else
            emit(out, io::rational_to_json(exact));
        return kSuccess;
    }
    const McEstimate e = montecarlo_volume(*h, o.montecarlo, o.seed, o.workers);
    if (text(o)) {
        print_table(out, {{"exact", to_string(exact)},
                          {"estimate", std::to_string(e.estimate_value())},
                          {"stderr", std::to_string(e.stderr_value)},
                          {"trials", std::to_string(e.trials)},
                          {"seed", std::to_string(o.seed)}});
    } else {
        emit(out, io::montecarlo_to_json(instance, exact, e, o.seed));
    }
    return kSuccess;
}

int cmd_extensions(const Options& o, std::ostream& out) {
    Poset order;
    std::optional<BigInt> bound;
    if (!o.poset_file.empty()) {
        if (o.lower_bound) throw InvalidInput("--lower-bound needs a graph and mode set");
        order = io::parse_poset(io::read_file(o.poset_file));
    } else {
        const Instance inst = load_graph(o);
        const ModeSet c = load_modes(o, inst);
        order = poset_from_modes(inst.graph, c);
        if (o.lower_bound) bound = extension_lower_bound(inst.graph, c);
    }
    if (o.list) {
        const auto all = enumerate_extensions(order, o.max_extensions);
        Json rows = Json::array();
        for (const auto& ext : all) {
            std::vector<std::string> labels;
            for (std::size_t i : ext) labels.push_back(order.elements()[i]);
            if (text(o)) {
                std::string line;
                for (const auto& l : labels) line += (line.empty() ? "" : " ") + l;
                out << line << '\n';
            }
            rows.push_back(std::move(labels));
        }
        if (!text(o)) emit(out, Json{{"count", std::to_string(all.size())}, {"extensions", std::move(rows)}});
        return kSuccess;
    }
    const BigInt count = o.naive ? count_linear_extensions_naive(order) : count_linear_extensions(order, o.max_ideals);
    if (bound && count < *bound) throw ConsistencyError("extension count below the lower bound");

    if (text(o)) {
        if (bound)
            print_table(out, {{"count", count.get_str()}, {"lower_bound", bound->get_str()}});
        else
            out << count.get_str() << '\n';
    } else if (bound) {
        emit(out, Json{{"count", count.get_str()}, {"lower_bound", bound->get_str()}});
    } else {
        emit(out, Json(count.get_str()));
    }
    return kSuccess;
}

int cmd_membership(const Options& o, std::ostream& out) {
    const Instance inst = load_graph(o);
    const ModeSet c = load_modes(o, inst);
    const Distribution p = io::parse_distribution(io::read_file(o.dist_file), inst.graph);
    const MembershipResult r =
        o.kind == "mode" ? in_mode_polytope(p, inst.graph, c) : in_strong_polytope(p, inst.graph, c);
    if (text(o)) {
        out << (r.member ? "member" : "not a member") << '\n';
        if (r.violation)
            out << "violated " << describe(inst.graph.labels(), r.violation->inequality) << ": "
                << to_string(r.violation->lhs) << " < " << to_string(r.violation->rhs) << '\n';
    } else {
        emit(out, io::membership_to_json(inst.graph, r));
    }
    return kSuccess;
}

int cmd_decompose(const Options& o, std::ostream& out) {
    const Instance inst = load_graph(o);
    const ModeSet c = load_modes(o, inst);
    const Distribution p = io::parse_distribution(io::read_file(o.dist_file), inst.graph);
    const auto parts = o.kind == "mode" ? decompose_mode(p, inst.graph, c) : decompose_strong(p, inst.graph, c);
    if (recombine(parts, p.size()) != p.values()) throw ConsistencyError("decomposition does not recombine");
    if (text(o)) {
        std::vector<std::vector<std::string>> rows{{"weight", "generator"}};
        for (const auto& part : parts)
            rows.push_back({to_string(part.weight), io::generator_label(inst.graph, part.vertex.generator)});
        print_table(out, rows);
    } else {
        emit(out, io::decomposition_to_json(inst.graph, parts));
    }
    return kSuccess;
}

int cmd_modes(const Options& o, std::ostream& out) {
    const Instance inst = load_graph(o);
    const Distribution p = io::parse_distribution(io::read_file(o.dist_file), inst.graph);
    const Strictness s = o.strict ? Strictness::Strict : Strictness::Weak;
    const NodeSet found = o.strong ? strong_modes_of(p, inst.graph, s) : modes_of(p, inst.graph, s);
    const auto labels = inst.graph.labels_of(found);
    if (text(o)) {
        for (const auto& l : labels) out << l << '\n';
    } else {
        emit(out, Json{{"modes", labels}});
    }
    return kSuccess;
}

int cmd_locate(const Options& o, std::ostream& out) {
    const Instance inst = load_graph(o);
    const ModeSet c = load_modes(o, inst);
    const Distribution p = io::parse_distribution(io::read_file(o.dist_file), inst.graph);
    const auto order = locate_simplex(p, inst.graph, c);
    const auto labels = inst.graph.labels_of(order);
    if (text(o)) {
        std::string line;
        for (const auto& l : labels) line += (line.empty() ? "" : " <= ") + l;
        out << line << '\n';
    } else {
        emit(out, Json{{"ascending", labels}});
    }
    return kSuccess;
}

// ---------------------------------------------------------------------------
// Cross-validation

enum class Status { Pass, Fail, Skipped };

struct CheckResult {
    std::string name;
    Status status;
    std::string detail;
};

class Checker {
public:
    void run(const std::string& name, const std::function<std::string()>& body) {
        try {
            results_.push_back({name, Status::Pass, body()});
        } catch (const BudgetExceeded& e) {
            results_.push_back({name, Status::Skipped, e.what()});
        } catch (const std::exception& e) {
            results_.push_back({name, Status::Fail, e.what()});
        }
    }

    bool passed() const {
        return std::none_of(results_.begin(), results_.end(), [](const CheckResult& r) { return r.status == Status::Fail; });
    }
    const std::vector<CheckResult>& results() const { return results_; }

private:
    std::vector<CheckResult> results_;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw ConsistencyError(what);
}

std::string_view status_name(Status s) {
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
    }
    return "?";
}

void check_facets(const HRep& h, const VRep& v, const std::vector<FacetInfo>& facets) {
    const auto target = static_cast<std::ptrdiff_t>(h.dimension) - 2;
    for (const auto& f : facets) {
        const bool by_incidence = incidence_rank(v, f.inequality) == target;
        expect(by_incidence == f.facet, "facet classification disagrees with vertex incidence");
    }
}

Distribution barycenter(const VRep& v, std::size_t n) {
    RationalVector sum(n);
    for (const auto& vx : v.vertices)
        for (std::size_t i = 0; i < n; ++i) sum[i] += vx.point[i];
    return Distribution::normalized(std::move(sum));
}

int cmd_check(const Options& o, std::ostream& out) {
    const Instance inst = load_graph(o);
    const Graph& g = inst.graph;
    const ModeSet c = load_modes(o, inst);
    require_independent(g, c);
    const std::size_t n = g.size();
    const auto oracle_cap = [&] {
        if (n > o.oracle_max_nodes) throw BudgetExceeded("oracle skipped above --oracle-max-nodes", n);
    };

    Checker checker;
    const HRep mh = mode_hrep(g, c);
    const HRep sh = strong_hrep(g, c);
    std::optional<VRep> mv;
    checker.run("mode vertices feasible", [&] {
        mv = mode_vertices(g, c, o.max_vertices);
        for (const auto& vx : mv->vertices) expect(mh.contains(vx.point.values()), "vertex violates the H-representation");
        return std::to_string(mv->vertices.size()) + " vertices";
    });
    checker.run("mode vertices are basic", [&] {
        expect(mv.has_value(), "no vertex list");
        for (const auto& vx : mv->vertices) expect(tight_rank(mh, vx.point.values()) == n, "vertex is not basic");
        return std::string();
    });
    checker.run("mode vertices match brute force", [&] {
        oracle_cap();
        expect(mv.has_value(), "no vertex list");
        expect(same_point_set(*mv, naive_vertex_enum(mh, o.oracle_max_nodes)), "vertex sets differ");
        return std::string();
    });
    checker.run("mode facets match incidence", [&] {
        expect(mv.has_value(), "no vertex list");
        check_facets(mh, *mv, mode_facets(g, c));
        return std::string();
    });
    checker.run("mode polytope full-dimensional", [&] {
        expect(mode_dimension(g, c) == n - 1, "dimension");
        return std::to_string(n - 1);
    });

    const VRep sv = strong_vrep(g, c);
    checker.run("strong vertices match brute force", [&] {
        oracle_cap();
        expect(same_point_set(sv, naive_vertex_enum(sh, o.oracle_max_nodes)), "vertex sets differ");
        return std::string();
    });
    checker.run("strong facets match incidence", [&] {
        check_facets(sh, sv, classify_strong_facets(g, c));
        return std::string();
    });
    checker.run("strong volume equals determinant", [&] {
        const Rational formula = strong_volume_ratio(g, c);
        expect(formula == strong_volume_det(g, c), "volume formula and determinant differ");
        return to_string(formula);
    });
    checker.run("strong polytope inside mode polytope", [&] {
        for (const auto& vx : sv.vertices) expect(mh.contains(vx.point.values()), "strong vertex outside");
        return std::string();
    });

    std::optional<Poset> order;
    checker.run("extension counters agree", [&] {
        order = poset_from_modes(g, c);
        const BigInt dp = count_linear_extensions(*order, o.max_ideals);
        expect(dp == count_linear_extensions_layered(*order, o.max_ideals), "layered counter differs");
        if (n <= kMaxNaiveElements) expect(dp == count_linear_extensions_naive(*order), "naive counter differs");
        expect(dp >= extension_lower_bound(g, c), "count below the lower bound");
        return dp.get_str();
    });
    checker.run("mode decomposition recombines", [&] {
        expect(mv.has_value(), "no vertex list");
        const Distribution p = barycenter(*mv, n);
        expect(recombine(decompose_mode(p, g, c), n) == p.values(), "recombination differs");
        const auto ascending = locate_simplex(p, g, c);
        for (std::size_t i = 1; i < n; ++i) expect(p[ascending[i - 1]] <= p[ascending[i]], "not ascending");
        return std::string();
    });
    checker.run("strong decomposition is barycentric", [&] {
        const Distribution p = barycenter(sv, n);
        const auto parts = decompose_strong(p, g, c);
        expect(parts.size() == n, "missing vertex");
        for (const auto& part : parts) expect(part.weight == Rational(1, static_cast<unsigned long>(n)), "weight");
        return std::string();
    });
    if (o.montecarlo) {
        checker.run("mode volume by sampling", [&] {
            const Rational exact = mode_volume_ratio(g, c, o.max_ideals);
            const McEstimate e = montecarlo_volume(mh, o.montecarlo, o.seed, o.workers);
            expect(e.within(exact, 4), "estimate outside 4 standard errors");
            return std::to_string(e.estimate_value());
        });
        checker.run("strong volume by sampling", [&] {
            const Rational exact = strong_volume_ratio(g, c);
            const McEstimate e = montecarlo_volume(sh, o.montecarlo, o.seed, o.workers);
            expect(e.within(exact, 4), "estimate outside 4 standard errors");
            return std::to_string(e.estimate_value());
        });
    }

    if (text(o)) {
        std::vector<std::vector<std::string>> rows{{"check", "status", "detail"}};
        for (const auto& r : checker.results()) rows.push_back({r.name, std::string(status_name(r.status)), r.detail});
        print_table(out, rows);
    } else {
        Json checks = Json::array();
        for (const auto& r : checker.results())
            checks.push_back({{"name", r.name}, {"status", status_name(r.status)}, {"detail", r.detail}});
        emit(out, Json{{"passed", checker.passed()}, {"checks", std::move(checks)}});
    }
    return checker.passed() ? kSuccess : kConsistencyFailure;
}

// ---------------------------------------------------------------------------

void add_instance(CLI::App* sub, Options& o, bool with_modes) {
    sub->add_option("--graph", o.graph_file, "graph JSON file");
    sub->add_option("--generator", o.generator, "hypercube:N, path:N, cycle:N or grid:RxC");
    if (with_modes) {
        sub->add_option("--modes", o.modes, "comma-separated labels, even-parity or odd-parity");
        sub->add_option("--modes-file", o.modes_file, "mode set JSON file");
    }
}

void add_kind(CLI::App* sub, Options& o, bool required) {
    sub->add_option("kind", o.kind, "mode or strong")->check(CLI::IsMember({"mode", "strong"}))->required(required);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact geometry of mode polytopes", "modepoly"};
    app.require_subcommand(1);
    app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", o.seed, "random seed");
    app.add_option("--max-ideals", o.max_ideals, "order ideal budget");
    app.add_option("--max-extensions", o.max_extensions, "listed extension budget");
    app.add_option("--max-nodes", o.max_nodes, "graph size budget");
    app.add_option("--max-vertices", o.max_vertices, "vertex enumeration budget");
    app.add_option("--workers", o.workers, "sampling threads")->check(CLI::Range(1U, 256U));

    auto* vertices = app.add_subcommand("vertices", "list vertices");
    add_kind(vertices, o, true);
    add_instance(vertices, o, true);

    auto* facets = app.add_subcommand("facets", "classify inequalities");
    add_kind(facets, o, true);
    add_instance(facets, o, true);

    auto* volume = app.add_subcommand("volume", "exact volume ratio");
    add_kind(volume, o, true);
    add_instance(volume, o, true);
    volume->add_option("--poset", o.poset_file, "poset JSON file");
    volume->add_option("--montecarlo", o.montecarlo, "also estimate with this many samples");

    auto* extensions = app.add_subcommand("extensions", "count linear extensions");
    add_instance(extensions, o, true);
    extensions->add_option("--poset", o.poset_file, "poset JSON file");
    extensions->add_flag("--naive", o.naive, "brute-force count");
    extensions->add_flag("--lower-bound", o.lower_bound, "also print |C|! |V\\C|!");
    extensions->add_flag("--list", o.list, "list the extensions themselves, up to --max-extensions");

    auto* membership = app.add_subcommand("membership", "test a distribution");
    add_kind(membership, o, false);
    add_instance(membership, o, true);
    membership->add_option("--dist", o.dist_file, "distribution JSON file")->required();

    auto* decompose = app.add_subcommand("decompose", "write a distribution as a vertex mixture");
    add_kind(decompose, o, false);
    add_instance(decompose, o, true);
    decompose->add_option("--dist", o.dist_file, "distribution JSON file")->required();

    auto* locate = app.add_subcommand("locate", "ascending order of a member of the mode polytope");
    add_instance(locate, o, true);
    locate->add_option("--dist", o.dist_file, "distribution JSON file")->required();

    auto* modes = app.add_subcommand("modes", "modes of a distribution");
    add_instance(modes, o, false);
    modes->add_option("--dist", o.dist_file, "distribution JSON file")->required();
    modes->add_flag("--strong", o.strong, "strong modes");
    modes->add_flag("--strict", o.strict, "strict inequalities");

    auto* check = app.add_subcommand("check", "cross-validate against brute-force oracles");
    add_instance(check, o, true);
    check->add_option("--montecarlo", o.montecarlo, "also sample the volumes");
    check->add_option("--oracle-max-nodes", o.oracle_max_nodes, "largest graph for vertex brute force")
        ->check(CLI::Range(std::size_t{1}, kMaxOracleDimension));

    auto* generate = app.add_subcommand("generate", "emit graph JSON");
    add_instance(generate, o, false);

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    // CLI11 consumes arguments from the back; drop the program name.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream help, fail;
        const int code = app.exit(e, help, fail);
        out << help.str();
        err << fail.str();
        return code == 0 ? kSuccess : kInvalidInput;
    }

    try {
        if (*vertices) return cmd_vertices(o, out);
        if (*facets) return cmd_facets(o, out);
        if (*volume) return cmd_volume(o, out);
        if (*extensions) return cmd_extensions(o, out);
        if (*membership) return cmd_membership(o, out);
        if (*decompose) return cmd_decompose(o, out);
        if (*locate) return cmd_locate(o, out);
        if (*modes) return cmd_modes(o, out);
        if (*check) return cmd_check(o, out);
        if (*generate) return cmd_generate(o, out);
    } catch (const NotIndependent& e) {
        err << "error: " << e.what() << '\n' << e.details();
        if (!e.details().empty() && e.details().back() != '\n') err << '\n';
        return kInvalidInput;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kBudgetExceeded;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kConsistencyFailure;
    }
    return kInvalidInput;
}

} // namespace modepoly::cli
