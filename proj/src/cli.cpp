#include "fcair/cli.hpp"

#include <CLI11.hpp>
#include <httplib.h>

#include <algorithm>
#include <csignal>
#include <fstream>
#include <unordered_set>

#include "fcair/config.hpp"
#include "fcair/cxt.hpp"
#include "fcair/error.hpp"
#include "fcair/index.hpp"
#include "fcair/query.hpp"
#include "fcair/service.hpp"

namespace fcair::cli {

using nlohmann::json;

namespace {

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

std::string join(const std::vector<std::string>& items, std::string_view sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

std::string braces(const std::vector<std::string>& items) { return "{" + join(items) + "}"; }

std::atomic<httplib::Server*> active_server{nullptr};

extern "C" void stop_server(int) {
    if (auto* s = active_server.load()) s->stop();
}

struct Options {
    std::string config_path;
    std::string format = "plain";

    std::string corpus;
    std::string ontology;
    std::string stoplist;
    std::string out_index;

    std::string index;
    std::vector<std::string> terms;
    std::string mode = "none";
    std::size_t max_depth = std::numeric_limits<std::size_t>::max();

    std::string verify_input;
    std::string dot_out = "-";
    bool full_labels = false;
    std::string listen;
};

Config resolve_config(const Options& o) {
    return load_config(o.config_path.empty() ? std::nullopt : std::optional<std::string>(o.config_path));
}

std::string require(const std::string& flag_value, const std::optional<std::string>& configured, const char* what) {
    if (!flag_value.empty()) return flag_value;
    if (configured) return *configured;
    throw Error(ErrorCode::invalid_argument, std::string("no ") + what + " given");
}

void require_readable(const std::string& path, const char* what) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::io_error, std::string("cannot read ") + what + " '" + path + "'");
}

int cmd_index(const Options& o, std::ostream& out) {
    Config cfg = resolve_config(o);
    IndexSources sources;
    sources.corpus_path = require(o.corpus, cfg.corpus, "corpus");
    std::string target = require(o.out_index, cfg.index, "output index path");
    if (!o.ontology.empty()) sources.ontology_path = o.ontology;
    else sources.ontology_path = cfg.ontology;
    if (!o.stoplist.empty()) sources.stoplist_path = o.stoplist;
    else sources.stoplist_path = cfg.stoplist;

    require_readable(sources.corpus_path, "corpus");
    if (sources.ontology_path) require_readable(*sources.ontology_path, "ontology");
    if (sources.stoplist_path) require_readable(*sources.stoplist_path, "stop list");

    Index index = build_index(sources);
    save_index(index, target);
    if (o.format == "json") {
        json j = service::index_summary(index);
        j["index"] = target;
        out << j.dump(2) << '\n';
    } else {
        out << "objects: " << index.context.object_count() << '\n'
            << "attributes: " << index.context.attribute_count() << '\n'
            << "concepts: " << index.lattice.size() << '\n'
            << "edges: " << index.lattice.edge_count() << '\n'
            << "wrote " << target << '\n';
    }
    return 0;
}

int cmd_query(const Options& o, std::ostream& out, std::ostream& err) {
    Config cfg = resolve_config(o);
    Index index = load_index(require(o.index, cfg.index, "index"));

    query::Query q;
    q.terms = query::split_query(join(o.terms, " "));
    q.mode = query::parse_mode(o.mode);
    query::SearchOptions options;
    options.rank.max_depth = o.max_depth;
    auto outcome = query::search(index, q, options);
    const auto& result = outcome.result;

    if (o.format == "json") {
        json j = query::to_json(result);
        for (auto& e : j["entries"])
            if (const auto* d = index.document(e["doc"].get<std::string>())) e["title"] = d->title;
        j["mode"] = o.mode;
        j["query_concept"] = {
            {"id", outcome.overlay.query_concept},
            {"intent", outcome.overlay.context.attribute_names(
                           outcome.overlay.lattice.concepts()[outcome.overlay.query_concept].intent)},
            {"extent", outcome.overlay.context.object_names(
                           outcome.overlay.lattice.concepts()[outcome.overlay.query_concept].extent)}};
        out << j.dump(2) << '\n';
        return 0;
    }
    if (!result.dropped_terms.empty()) err << "warning: dropped unknown terms: " << join(result.dropped_terms) << '\n';
    err << "effective terms: " << join(result.effective_terms) << '\n';
    for (const auto& e : result.entries) {
        out << e.rank << " - " << e.doc;
        if (const auto* d = index.document(e.doc)) out << " - " << d->title;
        out << '\n';
    }
    return 0;
}

// Batch enumeration is the reference for the stored/incremental lattice.
CheckResult check_enumeration(const Index& index) {
    const auto& ctx = index.context;
    const auto& lat = index.lattice;
    auto enumerated = enumerate_concepts(ctx);
    CheckResult r{"enumeration", true, std::to_string(lat.size()) + " = " + std::to_string(enumerated.size()) + " concepts"};
    for (const auto& c : enumerated) {
        std::size_t at = lat.find_intent(c.intent);
        if (at == lat.size() || lat.concept_at(at).extent != c.extent)
            return {"enumeration", false,
                    "enumerated concept " + braces(ctx.object_names(c.extent)) + " " +
                        braces(ctx.attribute_names(c.intent)) + " is not stored"};
    }
    // Every enumerated concept is stored, so any surplus is a stored non-concept.
    if (enumerated.size() != lat.size()) {
        std::unordered_set<Bitset, BitsetHash> intents;
        for (const auto& c : enumerated) intents.insert(c.intent);
        for (std::size_t c = 0; c < lat.size(); ++c)
            if (!intents.contains(lat.concept_at(c).intent))
                return {"enumeration", false,
                        "stored concept c" + std::to_string(c) + " " +
                            braces(ctx.attribute_names(lat.concept_at(c).intent)) + " is not a concept of the context"};
        return {"enumeration", false,
                std::to_string(lat.size()) + " stored vs " + std::to_string(enumerated.size()) + " enumerated concepts"};
    }
    return r;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const std::string& input = o.verify_input;
    Index index;
    if (ends_with(input, ".xml") || ends_with(input, ".cxt"))
        index = build_index(IndexSources{input, std::nullopt, std::nullopt});
    else
        index = load_index(input, LoadCheck::none);

    std::vector<CheckResult> checks{check_enumeration(index)};
    auto structural = check_lattice(index.context, index.lattice);
    checks.insert(checks.end(), structural.begin(), structural.end());

    bool ok = std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& c : checks) arr.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        out << json{{"passed", ok}, {"checks", arr}}.dump(2) << '\n';
    } else {
        for (const auto& c : checks) {
            out << (c.passed ? "PASS " : "FAIL ") << c.name;
            if (!c.detail.empty()) out << ": " << c.detail;
            out << '\n';
        }
    }
    return ok ? 0 : 1;
}

int cmd_export(const Options& o, std::ostream& out) {
    Config cfg = resolve_config(o);
    Index index = load_index(require(o.index, cfg.index, "index"));
    DotOptions options;
    options.full_labels = o.full_labels;
    std::string dot = export_dot(index, options);
    if (o.dot_out == "-") {
        out << dot;
        return 0;
    }
    std::ofstream file(o.dot_out, std::ios::trunc);
    if (!file || !(file << dot)) throw Error(ErrorCode::io_error, "cannot write '" + o.dot_out + "'");
    return 0;
}

int cmd_serve(const Options& o, std::ostream& out) {
    Config cfg = resolve_config(o);
    std::shared_ptr<const Index> index;
    if (!o.index.empty() || cfg.index) {
        index = std::make_shared<const Index>(load_index(require(o.index, cfg.index, "index")));
    } else if (cfg.corpus) {
        index = std::make_shared<const Index>(build_index(IndexSources{*cfg.corpus, cfg.ontology, cfg.stoplist}));
    }
    auto [host, port] = parse_listen(o.listen.empty() ? cfg.listen : o.listen);

    service::Service svc(index);
    httplib::Server server;
    svc.mount(server);
    if (!server.bind_to_port(host, port))
        throw Error(ErrorCode::io_error, "cannot listen on " + host + ":" + std::to_string(port) + " (port busy?)");
    out << "listening on " << host << ":" << port << std::endl;
    active_server = &server;
    auto previous_int = std::signal(SIGINT, stop_server);
    auto previous_term = std::signal(SIGTERM, stop_server);
    bool ok = server.listen_after_bind();
    std::signal(SIGINT, previous_int);
    std::signal(SIGTERM, previous_term);
    active_server = nullptr;
    return ok ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Concept-lattice document retrieval"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--config", o.config_path, "JSON config file");

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"plain", "json"}));
    };

    auto* index = app.add_subcommand("index", "Build and save an index from a corpus");
    index->add_option("corpus", o.corpus, "Corpus XML (or .cxt context)");
    index->add_option("-o,--out", o.out_index, "Index file to write");
    index->add_option("--ontology", o.ontology, "Ontology file");
    index->add_option("--stoplist", o.stoplist, "Extra stop words file");
    add_format(index);

    auto* query = app.add_subcommand("query", "Rank documents for a query");
    query->add_option("-i,--index", o.index, "Index file");
    query->add_option("--mode", o.mode, "Reformulation mode")
        ->check(CLI::IsMember({"none", "generalize", "specialize"}));
    query->add_option("--max-depth", o.max_depth, "Maximum traversal depth");
    query->add_option("terms", o.terms, "Query terms; quote multi-word terms")->required();
    add_format(query);

    auto* verify = app.add_subcommand("verify", "Check a lattice against batch enumeration");
    verify->add_option("input", o.verify_input, "Index (.json), corpus (.xml) or context (.cxt)")->required();
    add_format(verify);

    auto* exp = app.add_subcommand("export", "Write the line diagram as Graphviz DOT");
    exp->add_option("-i,--index", o.index, "Index file");
    exp->add_option("--dot", o.dot_out, "Output file ('-' for stdout)");
    exp->add_flag("--full-labels", o.full_labels, "Label nodes with full extents and intents");

    auto* serve = app.add_subcommand("serve", "Serve the HTTP API");
    serve->add_option("-i,--index", o.index, "Index file");
    serve->add_option("--listen", o.listen, "host:port");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*index) return cmd_index(o, out);
        if (*query) return cmd_query(o, out, err);
        if (*verify) return cmd_verify(o, out);
        if (*exp) return cmd_export(o, out);
        if (*serve) return cmd_serve(o, out);
    } catch (const Error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace fcair::cli
