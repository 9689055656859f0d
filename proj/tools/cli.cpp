#include "cli.hpp"

#include "rigidkit/collision.hpp"
#include "rigidkit/errors.hpp"
#include "rigidkit/graph.hpp"
#include "rigidkit/hom.hpp"
#include "rigidkit/json.hpp"
#include "rigidkit/omega.hpp"
#include "rigidkit/phi.hpp"
#include "rigidkit/rigid_search.hpp"
#include "rigidkit/symmetrize.hpp"
#include "rigidkit/union.hpp"
#include "rigidkit/witness.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

namespace rigidkit::cli {

namespace {

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << contents))
        throw UsageError("cannot write '" + path + "'");
}

Digraph load_graph(const std::string& path) {
    try {
        return decode(read_file(path));
    } catch (const ParseError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

UGraph load_base(const std::string& path) {
    auto g = load_graph(path);
    if (!g.is_symmetric())
        throw ArityError(path + ": base relation must be symmetric (list every edge both ways)");
    return UGraph(std::move(g));
}

// One witness set per non-blank line, vertices separated by whitespace.
std::vector<std::vector<Vertex>> load_witness_sets(const std::string& path) {
    std::istringstream in(read_file(path));
    std::vector<std::vector<Vertex>> sets;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream fields(line);
        std::vector<Vertex> set;
        long long v = 0;
        while (fields >> v) {
            if (v < 0)
                throw ParseError(line_no, path + ": negative vertex index");
            set.push_back(static_cast<Vertex>(v));
        }
        if (!fields.eof())
            throw ParseError(line_no, path + ": expected vertex indices");
        sets.push_back(std::move(set));
    }
    return sets;
}

Structure load_structure(const RunConfig& c) {
    auto g = load_graph(c.inputs.at(0));
    if (!c.component_size)
        return Structure(std::move(g));
    const auto size = *c.component_size;
    if (size == 0 || g.size() % size != 0)
        throw ArityError("vertex count " + std::to_string(g.size()) + " is not a multiple of component size " +
                         std::to_string(size));
    std::vector<std::vector<Edge>> parts(g.size() / size);
    for (auto [u, v] : g.edges()) {
        if (u / size != v / size)
            throw ArityError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") crosses components");
        parts[u / size].emplace_back(u % size, v % size);
    }
    std::vector<Digraph> components;
    for (auto& edges : parts)
        components.emplace_back(size, std::move(edges));
    return Structure(UnionStructure(std::move(components)));
}

WitnessProvider witness_provider(const RunConfig& c, const Structure& s) {
    if (c.witness == "component")
        return WitnessProvider::component(s);
    if (c.witness == "full")
        return WitnessProvider::full(s.size());
    return WitnessProvider::explicit_sets(s.size(), load_witness_sets(c.witness));
}

Pin parse_pin(const std::string& text) {
    auto eq = text.find('=');
    try {
        if (eq == std::string::npos)
            throw std::invalid_argument(text);
        return {static_cast<Vertex>(std::stoul(text.substr(0, eq))), static_cast<Vertex>(std::stoul(text.substr(eq + 1)))};
    } catch (const std::logic_error&) {
        throw UsageError("pin must look like u=v, got '" + text + "'");
    }
}

GadgetScheme load_scheme(const std::string& which) {
    if (which == "default")
        return default_scheme();
    return parse_scheme(read_file(which));
}

class Command {
  public:
    Command(const RunConfig& config, std::ostream& out) : c_(config), out_(out) {}

    // Prints the JSON envelope with --json or on a failed verdict, otherwise `summary`.
    void emit(const Json& report, const std::string& summary, bool pass = true) const {
        if (c_.json || !pass) {
            Json envelope = {{"tool", "rigidkit"},
                             {"version", version},
                             {"command", c_.command},
                             {"seed", c_.seed},
                             {"report", report}};
            out_ << envelope.dump(2) << '\n';
        } else {
            out_ << summary;
        }
    }

    int check_rigid() const {
        auto g = load_graph(c_.inputs.at(0));
        auto cert = is_rigid(g);
        emit(to_json(cert), "rigid\n", cert.rigid);
        return cert.rigid ? exit_pass : exit_fail;
    }

    int homs() const {
        auto source = load_graph(c_.inputs.at(0));
        auto target = load_graph(c_.target);
        HomQuery query;
        for (const auto& p : c_.pins)
            query.pins.push_back(parse_pin(p));
        query.limit = c_.limit;
        query.workers = c_.workers;
        auto maps = enumerate_homs(source, target, query);
        Json list = Json::array();
        std::ostringstream text;
        for (const auto& m : maps) {
            list.push_back(m.image);
            for (std::size_t i = 0; i < m.image.size(); ++i)
                text << (i ? " " : "") << m.image[i];
            text << '\n';
        }
        emit({{"count", maps.size()}, {"homomorphisms", std::move(list)}}, text.str());
        return exit_pass;
    }

    int phi_count() const {
        auto base = load_base(c_.inputs.at(0));
        auto t = compute_T(base);
        Json pairs = Json::array();
        for (auto [a, b] : t.pairs)
            pairs.push_back({a, b});
        auto count = phi_count_text(t.size());
        emit({{"non_edges", std::move(pairs)}, {"bits", t.size()}, {"count", count}}, count + "\n");
        return exit_pass;
    }

    int phi_member() const {
        auto base = load_base(c_.inputs.at(0));
        auto member = build_phi_member(base, bits_from_string(c_.bits));
        if (!c_.output.empty())
            write_file(c_.output, encode(member.realized));
        emit({{"bits", bits_to_string(member.bits)}, {"realized", to_json(member.realized)}},
             c_.output.empty() ? encode(member.realized) : "");
        return exit_pass;
    }

    int phi_sweep() const {
        auto base = load_base(c_.inputs.at(0));
        auto report = c_.orientations ? orientation_sweep(base, c_.samples, c_.seed, c_.workers)
                                      : rigidkit::phi_sweep(base, c_.samples, c_.seed, c_.workers);
        std::ostringstream text;
        text << report.pairs.size() << " pairs, " << report.total_homs << " homomorphisms\n";
        bool pass = report.hom_free && report.identity_never_hom && report.homs_are_base_endomorphisms;
        emit(to_json(report), text.str(), pass);
        return pass ? exit_pass : exit_fail;
    }

    int make_union() const {
        std::vector<Digraph> components;
        for (const auto& path : c_.inputs)
            components.push_back(load_graph(path));
        auto u = build_union(std::move(components));
        if (c_.output.empty())
            throw UsageError("union needs -o OUT");
        write_file(c_.output, encode(u.flat()));
        std::ostringstream text;
        text << u.component_count() << " components of " << u.component_size() << " vertices -> " << c_.output
             << '\n';
        emit({{"components", u.component_count()}, {"component_size", u.component_size()}, {"output", c_.output}},
             text.str());
        return exit_pass;
    }

    int verify(WitnessMode mode) const {
        if (!c_.k)
            throw UsageError("--k is required");
        auto structure = load_structure(c_);
        auto provider = witness_provider(c_, structure);
        WitnessOptions options{*c_.k, c_.strict, c_.workers, c_.confine};
        auto report = mode == WitnessMode::diamond ? verify_diamond(structure, provider, options)
                                                   : verify_star(structure, provider, options);
        std::ostringstream text;
        std::size_t failures = 0;
        for (const auto& e : report.entries)
            failures += e.pass ? 0 : 1;
        text << (report.pass ? "pass" : "fail") << ": " << report.entries.size() - failures << "/"
             << report.entries.size() << " entries hold\n";
        emit(to_json(report), text.str(), report.pass);
        return report.pass ? exit_pass : exit_fail;
    }

    int collide() const {
        auto structure = load_structure(c_);
        std::vector<std::vector<Vertex>> sets;
        if (c_.witness == "component")
            sets = structure.blocks();
        else
            sets = load_witness_sets(c_.witness);
        auto result = find_witness_collision(structure.graph(), sets);
        std::ostringstream text;
        if (result.collision)
            text << "collision between witnesses " << result.collision->first << " and " << result.collision->second
                 << '\n';
        else
            text << "no collision\n";
        emit(to_json(result), text.str(), !result.collision);
        return result.collision ? exit_fail : exit_pass;
    }

    int omega_verify() const {
        auto report = omega_sweep(c_.i_max, c_.slack, c_.workers);
        std::ostringstream text;
        text << (report.pass ? "pass" : "fail") << ": i = 0.." << c_.i_max << ", slack 0.." << c_.slack << '\n';
        emit(to_json(report), text.str(), report.pass);
        return report.pass ? exit_pass : exit_fail;
    }

    int search() const {
        SearchOptions options;
        options.n = c_.n;
        options.symmetric = c_.symmetric;
        if (c_.mode == "exhaustive")
            options.mode = SearchMode::exhaustive;
        else if (c_.mode == "random")
            options.mode = SearchMode::random;
        else
            throw UsageError("--mode must be exhaustive or random");
        if (options.mode == SearchMode::random && c_.budget == 0)
            throw UsageError("random mode needs --budget");
        options.budget = c_.budget;
        options.seed = c_.seed;
        options.max_finds = c_.max_finds;
        options.reject_isomorphs = c_.reject_isomorphs;
        options.workers = c_.workers;
        auto report = search_rigid(options);
        if (!c_.out_dir.empty()) {
            std::filesystem::create_directories(c_.out_dir);
            for (std::size_t i = 0; i < report.rigid_found.size(); ++i)
                write_file((std::filesystem::path(c_.out_dir) /
                            ("rigid_n" + std::to_string(c_.n) + "_" + std::to_string(i) + ".edges"))
                               .string(),
                           encode(report.rigid_found[i]));
        }
        std::ostringstream text;
        text << report.rigid_found.size() << " rigid graphs among " << report.graphs_examined << " examined\n";
        emit(to_json(report), text.str());
        return exit_pass;
    }

    int symmetrize_file() const {
        auto d = load_graph(c_.inputs.at(0));
        auto scheme = load_scheme(c_.scheme);
        auto result = symmetrize(d, scheme);
        if (c_.output.empty())
            throw UsageError("symmetrize needs -o OUT");
        write_file(c_.output, encode(result.graph.digraph()));
        std::ostringstream text;
        text << result.graph.size() << " vertices -> " << c_.output << '\n';
        emit({{"vertices", result.graph.size()},
              {"edges", result.graph.pairs().size()},
              {"carrier", result.carrier},
              {"output", c_.output}},
             text.str());
        return exit_pass;
    }

    int verify_faithful_cmd() const {
        auto scheme = load_scheme(c_.scheme);
        Json report = Json::object();
        bool pass = true;
        std::ostringstream text;
        if (c_.inputs.size() == 2) {
            auto r = verify_faithful(load_graph(c_.inputs[0]), load_graph(c_.inputs[1]), scheme);
            report["pair"] = to_json(r);
            pass = r.equal;
            text << "pair: " << r.digraph_homs << " vs " << r.symmetric_homs << '\n';
        } else if (!c_.inputs.empty()) {
            throw UsageError("verify-faithful takes zero or two digraph files");
        }
        if (c_.sweep3) {
            auto r = faithful_sweep3(scheme, c_.workers);
            report["sweep3"] = to_json(r);
            pass = pass && r.pass;
            text << "sweep3: " << r.pairs_equal << "/" << r.pairs_checked << " equal\n";
        }
        if (c_.random4 > 0) {
            auto r = faithful_random(scheme, 4, c_.random4, c_.seed, c_.workers);
            report["random4"] = to_json(r);
            pass = pass && r.pass;
            text << "random4: " << r.pairs_equal << "/" << r.pairs_checked << " equal\n";
        }
        if (report.empty())
            throw UsageError("nothing to verify: pass --sweep3, --random4 N, or two digraph files");
        emit(report, text.str(), pass);
        return pass ? exit_pass : exit_fail;
    }

    int export_graph() const {
        auto g = load_graph(c_.inputs.at(0));
        std::string text;
        if (c_.format == "dot")
            text = to_dot(g);
        else if (c_.format == "json")
            text = to_json(g).dump(2) + "\n";
        else if (c_.format == "edges")
            text = encode(g);
        else
            throw UsageError("--format must be dot, json or edges");
        if (c_.output.empty())
            out_ << text;
        else
            write_file(c_.output, text);
        return exit_pass;
    }

  private:
    static std::string phi_count_text(std::size_t bits) {
        if (bits < 64)
            return std::to_string(std::uint64_t{1} << bits);
        return "2^" + std::to_string(bits);
    }

    const RunConfig& c_;
    std::ostream& out_;
};

unsigned default_workers() {
    if (const char* env = std::getenv("RIGIDKIT_WORKERS")) {
        try {
            auto w = std::stoul(env);
            if (w > 0)
                return static_cast<unsigned>(w);
        } catch (const std::logic_error&) {
        }
    }
    return 1;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        Command cmd(config, out);
        const std::map<std::string, std::function<int()>> table = {
            {"check-rigid", [&] { return cmd.check_rigid(); }},
            {"homs", [&] { return cmd.homs(); }},
            {"phi-count", [&] { return cmd.phi_count(); }},
            {"phi-member", [&] { return cmd.phi_member(); }},
            {"phi-sweep", [&] { return cmd.phi_sweep(); }},
            {"union", [&] { return cmd.make_union(); }},
            {"verify-diamond", [&] { return cmd.verify(WitnessMode::diamond); }},
            {"verify-star", [&] { return cmd.verify(WitnessMode::star); }},
            {"collide", [&] { return cmd.collide(); }},
            {"omega-verify", [&] { return cmd.omega_verify(); }},
            {"search-rigid", [&] { return cmd.search(); }},
            {"symmetrize", [&] { return cmd.symmetrize_file(); }},
            {"verify-faithful", [&] { return cmd.verify_faithful_cmd(); }},
            {"export", [&] { return cmd.export_graph(); }},
        };
        auto it = table.find(config.command);
        if (it == table.end())
            throw UsageError("unknown subcommand '" + config.command + "'");
        return it->second();
    } catch (const UsageError& e) {
        err << "rigidkit: " << e.what() << '\n';
    } catch (const Error& e) {
        err << "rigidkit: " << e.what() << '\n';
    } catch (const std::filesystem::filesystem_error& e) {
        err << "rigidkit: " << e.what() << '\n';
    }
    return exit_usage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    c.workers = default_workers();

    CLI::App app{"Rigid relation constructions certified by homomorphism search", "rigidkit"};
    app.require_subcommand(1);
    app.add_option("--workers", c.workers, "Worker threads (default: RIGIDKIT_WORKERS or 1)")
        ->check(CLI::PositiveNumber);

    auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", c.json, "Print a JSON report"); };
    auto input = [&](CLI::App* sub, const char* name) { sub->add_option(name, c.inputs, "Edge-list file")->required(); };

    auto* check = app.add_subcommand("check-rigid", "Exit 0 iff the relation has no non-identity endomorphism");
    input(check, "file");
    json_flag(check);

    auto* homs = app.add_subcommand("homs", "Enumerate homomorphisms");
    homs->add_option("--source", c.inputs, "Source edge-list file")->required()->expected(1);
    homs->add_option("--target", c.target, "Target edge-list file")->required();
    homs->add_option("--pin", c.pins, "Force f(u)=v, written u=v")->take_all();
    homs->add_option("--limit", c.limit, "Stop after this many");
    json_flag(homs);

    auto* count = app.add_subcommand("phi-count", "Count completions of a symmetric base");
    input(count, "base");
    json_flag(count);

    auto* member = app.add_subcommand("phi-member", "Build the completion named by a bit string");
    input(member, "base");
    member->add_option("--bits", c.bits, "One 0/1 per non-adjacent pair")->required();
    member->add_option("-o,--output", c.output, "Write the realized relation here");
    json_flag(member);

    auto* sweep = app.add_subcommand("phi-sweep", "Check sampled pairs of distinct completions for homomorphisms");
    input(sweep, "base");
    sweep->add_option("--samples", c.samples, "Number of pairs");
    sweep->add_option("--seed", c.seed, "Random seed");
    sweep->add_flag("--orientations", c.orientations, "Sample orientations of the base instead of completions");
    json_flag(sweep);

    auto* uni = app.add_subcommand("union", "Disjoint union of same-size relations");
    uni->add_option("files", c.inputs, "Component edge-list files")->required();
    uni->add_option("-o,--output", c.output, "Output edge-list file")->required();
    json_flag(uni);

    for (auto [name, help] : {std::pair{"verify-diamond", "Check the per-vertex witness condition"},
                              std::pair{"verify-star", "Check the per-pair pinned witness condition"}}) {
        auto* v = app.add_subcommand(name, help);
        input(v, "file");
        v->add_option("--witness", c.witness, "component, full, or a witness file (line x lists A(x))");
        v->add_option("--k", c.k, "Witness size bound")->required();
        v->add_flag("--strict", c.strict, "Require |A(x)| < k instead of <= k");
        v->add_option("--component-size", c.component_size, "Treat the input as a union of blocks of this size");
        v->add_flag("!--no-confine", c.confine, "Search the whole structure even for tournament-complete witnesses");
        json_flag(v);
    }

    auto* col = app.add_subcommand("collide", "Find two witnesses with identical local relations");
    input(col, "file");
    col->add_option("--witness", c.witness, "component, or a file with one witness set per line");
    col->add_option("--component-size", c.component_size, "Treat the input as a union of blocks of this size");
    json_flag(col);

    auto* omega = app.add_subcommand("omega-verify", "Certify the successor-plus-chord witnesses on prefixes");
    omega->add_option("--i-max", c.i_max, "Largest i")->required();
    omega->add_option("--slack", c.slack, "Check prefixes of size i+3 .. i+3+slack");
    json_flag(omega);

    auto* search = app.add_subcommand("search-rigid", "Search for rigid graphs");
    search->add_option("--n", c.n, "Vertex count")->required();
    search->add_flag("--symmetric", c.symmetric, "Undirected graphs");
    search->add_option("--mode", c.mode, "exhaustive or random");
    search->add_option("--budget", c.budget, "Random samples");
    search->add_option("--seed", c.seed, "Random seed");
    search->add_option("--max-finds", c.max_finds, "Stop after this many rigid graphs");
    search->add_flag("--reject-isomorphs", c.reject_isomorphs, "Exhaustive: one representative per isomorphism class");
    search->add_option("--out-dir", c.out_dir, "Write each find as an edge-list file");
    json_flag(search);

    auto* sym = app.add_subcommand("symmetrize", "Replace arcs by gadgets to get an undirected graph");
    input(sym, "file");
    sym->add_option("-o,--output", c.output, "Output edge-list file")->required();
    sym->add_option("--scheme", c.scheme, "default or a scheme file");
    json_flag(sym);

    auto* faithful = app.add_subcommand("verify-faithful", "Compare homomorphism counts before and after symmetrizing");
    faithful->add_option("files", c.inputs, "Optional pair of digraph files");
    faithful->add_flag("--sweep3", c.sweep3, "All ordered pairs of 3-vertex digraphs");
    faithful->add_option("--random4", c.random4, "Number of random 4-vertex pairs");
    faithful->add_option("--seed", c.seed, "Random seed");
    faithful->add_option("--scheme", c.scheme, "default or a scheme file");
    json_flag(faithful);

    auto* exp = app.add_subcommand("export", "Convert an edge-list file to DOT or JSON");
    input(exp, "file");
    exp->add_option("--format", c.format, "dot, json or edges");
    exp->add_option("-o,--output", c.output, "Output file (default stdout)");

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }
    c.command = app.get_subcommands().front()->get_name();
    return run(c, out, err);
}

}  // namespace rigidkit::cli
