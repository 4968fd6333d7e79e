#include "fcair/index.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "fcair/cxt.hpp"
#include "fcair/error.hpp"

namespace fcair {

using nlohmann::json;

const corpus::Document* Index::document(std::string_view id) const {
    for (const auto& d : documents)
        if (d.id == id) return &d;
    return nullptr;
}

namespace {

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

std::string describe(const FormalContext& ctx, const ConceptLattice& lat, std::size_t c) {
    std::string out = "c" + std::to_string(c) + " {";
    bool first = true;
    for (const auto& m : ctx.attribute_names(lat.concepts()[c].intent)) {
        out += (first ? "" : ", ") + m;
        first = false;
    }
    return out + "}";
}

std::string dot_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

}  // namespace

Index build_index(std::vector<corpus::Document> documents, corpus::StopList stopwords,
                  std::optional<ontology::OntologyTree> tree) {
    std::vector<std::string> phrases;
    if (tree)
        for (const auto& name : tree->vocabulary())
            if (name.find(' ') != std::string::npos) phrases.push_back(name);

    for (auto& doc : documents) {
        corpus::index_terms(doc, stopwords, phrases);
        if (!tree) continue;
        // Multi-word synonyms are indexed under their node's primary term.
        for (const auto& p : phrases) {
            if (!doc.terms.contains(p)) continue;
            const std::string& primary = tree->node(*tree->locate(p)).term;
            if (primary != p) {
                doc.terms.erase(p);
                doc.terms.insert(primary);
            }
        }
    }

    Index index;
    index.context = corpus::build_context(documents);
    index.lattice = build_lattice(index.context);
    index.documents = std::move(documents);
    index.stopwords = std::move(stopwords);
    index.ontology = std::move(tree);
    return index;
}

Index build_index(FormalContext ctx) {
    Index index;
    index.lattice = build_lattice(ctx);
    index.context = std::move(ctx);
    index.stopwords = corpus::StopList::defaults();
    return index;
}

Index build_index(const IndexSources& sources) {
    std::optional<ontology::OntologyTree> tree;
    if (sources.ontology_path) tree = ontology::OntologyTree::load(*sources.ontology_path);

    corpus::StopList stops = corpus::StopList::defaults();
    if (sources.stoplist_path) stops.merge(corpus::StopList::load(*sources.stoplist_path));

    if (ends_with(sources.corpus_path, ".cxt")) {
        Index index = build_index(load_cxt(sources.corpus_path));
        index.stopwords = std::move(stops);
        index.ontology = std::move(tree);
        return index;
    }
    return build_index(corpus::load_corpus(sources.corpus_path), std::move(stops), std::move(tree));
}

std::vector<CheckResult> check_lattice(const FormalContext& ctx, const ConceptLattice& lat) {
    std::vector<CheckResult> results;
    const auto& concepts = lat.concepts();
    const std::size_t n = concepts.size();

    CheckResult dims{"dimensions"};
    if (n == 0) {
        dims.passed = false;
        dims.detail = "lattice has no concepts";
        results.push_back(dims);
        return results;
    }
    for (std::size_t c = 0; c < n && dims.passed; ++c) {
        if (concepts[c].extent.size() != ctx.object_count() || concepts[c].intent.size() != ctx.attribute_count()) {
            dims.passed = false;
            dims.detail = "concept c" + std::to_string(c) + " does not match the context dimensions";
        }
    }
    if (lat.top() >= n || lat.bottom() >= n) {
        dims.passed = false;
        dims.detail = "top or bottom index out of range";
    }
    results.push_back(dims);
    if (!dims.passed) return results;

    CheckResult closure{"closure"};
    for (std::size_t c = 0; c < n && closure.passed; ++c) {
        if (derive_intent(ctx, concepts[c].extent) != concepts[c].intent ||
            derive_extent(ctx, concepts[c].intent) != concepts[c].extent) {
            closure.passed = false;
            closure.detail = describe(ctx, lat, c) + " is not a formal concept";
        }
    }
    results.push_back(closure);

    CheckResult distinct{"distinct"};
    std::unordered_map<Bitset, std::size_t, BitsetHash> by_intent;
    std::unordered_set<Bitset, BitsetHash> extents;
    for (std::size_t c = 0; c < n && distinct.passed; ++c) {
        if (!by_intent.emplace(concepts[c].intent, c).second || !extents.insert(concepts[c].extent).second) {
            distinct.passed = false;
            distinct.detail = describe(ctx, lat, c) + " appears more than once";
        }
    }
    results.push_back(distinct);

    // Every closed set is reached from the top by repeatedly adding one
    // attribute and closing, so checking those successors proves completeness.
    CheckResult complete{"completeness"};
    for (std::size_t c = 0; c < n && complete.passed; ++c) {
        std::unordered_set<Bitset, BitsetHash> tried;
        for (std::size_t m = 0; m < ctx.attribute_count() && complete.passed; ++m) {
            if (concepts[c].intent.test(m)) continue;
            ObjectSet extent = concepts[c].extent & ctx.column(m);
            if (!tried.insert(extent).second) continue;
            AttributeSet intent = derive_intent(ctx, extent);
            if (!by_intent.contains(intent)) {
                complete.passed = false;
                complete.detail = "missing concept with intent {" + join(ctx.attribute_names(intent), ", ") + "}";
            }
        }
    }
    results.push_back(complete);

    CheckResult covers{"covers"};
    auto expected = compute_covers(concepts);
    auto actual = lat.edges();
    if (expected != actual) {
        covers.passed = false;
        std::vector<std::pair<std::size_t, std::size_t>> missing, extra;
        std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(),
                            std::back_inserter(missing));
        std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(), std::back_inserter(extra));
        if (!extra.empty())
            covers.detail = "edge " + describe(ctx, lat, extra[0].first) + " -> " +
                            describe(ctx, lat, extra[0].second) + " is not a cover";
        else
            covers.detail = "cover edge " + describe(ctx, lat, missing[0].first) + " -> " +
                            describe(ctx, lat, missing[0].second) + " is missing";
    }
    results.push_back(covers);

    CheckResult bounds{"top-bottom"};
    if (!concepts[lat.top()].extent.all()) {
        bounds.passed = false;
        bounds.detail = "top " + describe(ctx, lat, lat.top()) + " does not contain every object";
    } else if (!concepts[lat.bottom()].intent.all()) {
        bounds.passed = false;
        bounds.detail = "bottom " + describe(ctx, lat, lat.bottom()) + " does not carry every attribute";
    }
    results.push_back(bounds);
    return results;
}

void validate(const Index& index) {
    for (const auto& r : check_lattice(index.context, index.lattice))
        if (!r.passed) throw Error(ErrorCode::validation_error, r.name + " check failed: " + r.detail);
    if (!index.documents.empty()) {
        if (index.documents.size() != index.context.object_count())
            throw Error(ErrorCode::validation_error, "documents check failed: count differs from context objects");
        for (std::size_t g = 0; g < index.documents.size(); ++g)
            if (index.documents[g].id != index.context.object(g))
                throw Error(ErrorCode::validation_error,
                            "documents check failed: document '" + index.documents[g].id + "' out of order");
    }
}

json to_json(const Index& index) {
    const auto& ctx = index.context;
    json j = json::object();
    j["format_version"] = index_format_version;
    j["objects"] = ctx.objects();
    j["attributes"] = ctx.attributes();
    json incidence = json::array();
    for (std::size_t g = 0; g < ctx.object_count(); ++g) incidence.push_back(ctx.row(g).indices());
    j["incidence"] = std::move(incidence);

    json concepts = json::array();
    for (std::size_t c = 0; c < index.lattice.size(); ++c) {
        const auto& concept_ = index.lattice.concepts()[c];
        concepts.push_back({{"id", c},
                            {"intent", ctx.attribute_names(concept_.intent)},
                            {"extent", ctx.object_names(concept_.extent)}});
    }
    j["concepts"] = std::move(concepts);
    json covers = json::array();
    for (auto [child, parent] : index.lattice.edges()) covers.push_back({child, parent});
    j["covers"] = std::move(covers);
    j["top"] = index.lattice.top();
    j["bottom"] = index.lattice.bottom();

    json docs = json::array();
    for (const auto& d : index.documents) docs.push_back({{"id", d.id}, {"title", d.title}, {"authors", d.authors}});
    j["documents"] = std::move(docs);
    j["stopwords"] = std::vector<std::string>(index.stopwords.words().begin(), index.stopwords.words().end());
    j["ontology"] = index.ontology ? index.ontology->to_json() : json();
    return j;
}

Index from_json(const json& j) {
    if (!j.is_object() || !j.contains("format_version") || !j["format_version"].is_number_integer())
        throw Error(ErrorCode::corruption, "index has no format_version");
    int version = j["format_version"].get<int>();
    if (version < 1 || version > index_format_version)
        throw Error(ErrorCode::unsupported_version, "unsupported index format_version " + std::to_string(version) +
                                                        " (supported: 1.." + std::to_string(index_format_version) +
                                                        ")");
    try {
        Index index;
        auto objects = j.at("objects").get<std::vector<std::string>>();
        auto attributes = j.at("attributes").get<std::vector<std::string>>();
        FormalContext ctx(objects, attributes);
        const auto& incidence = j.at("incidence");
        if (!incidence.is_array() || incidence.size() != objects.size())
            throw Error(ErrorCode::corruption, "incidence row count differs from object count");
        for (std::size_t g = 0; g < objects.size(); ++g)
            for (std::size_t m : incidence[g].get<std::vector<std::size_t>>()) {
                if (m >= attributes.size()) throw Error(ErrorCode::corruption, "incidence attribute out of range");
                ctx.set_incident(g, m);
            }

        std::vector<FormalConcept> concepts;
        const auto& jc = j.at("concepts");
        for (std::size_t c = 0; c < jc.size(); ++c) {
            if (jc[c].at("id").get<std::size_t>() != c)
                throw Error(ErrorCode::corruption, "concept ids are not consecutive");
            concepts.push_back({ctx.object_set(jc[c].at("extent").get<std::vector<std::string>>()),
                                ctx.attribute_set(jc[c].at("intent").get<std::vector<std::string>>())});
        }
        std::vector<std::pair<std::size_t, std::size_t>> covers;
        for (const auto& e : j.at("covers")) covers.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
        index.lattice = ConceptLattice::assemble(std::move(concepts), covers, j.at("top").get<std::size_t>(),
                                                 j.at("bottom").get<std::size_t>());
        index.context = std::move(ctx);

        for (const auto& d : j.at("documents"))
            index.documents.push_back({d.at("id").get<std::string>(),
                                       d.at("authors").get<std::vector<std::string>>(),
                                       d.at("title").get<std::string>(),
                                       {}});
        // Terms are recovered from the context rows.
        for (std::size_t g = 0; g < index.documents.size() && g < index.context.object_count(); ++g) {
            auto names = index.context.attribute_names(index.context.row(g));
            index.documents[g].terms = std::set<std::string>(names.begin(), names.end());
        }
        auto stops = j.at("stopwords").get<std::vector<std::string>>();
        index.stopwords = corpus::StopList(std::set<std::string>(stops.begin(), stops.end()));
        if (j.contains("ontology") && !j["ontology"].is_null())
            index.ontology = ontology::OntologyTree::from_json(j["ontology"]);
        return index;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::corruption, std::string("malformed index: ") + e.what());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::corruption) throw;
        throw Error(ErrorCode::corruption, std::string("malformed index: ") + e.what());
    }
}

void save_index(const Index& index, std::ostream& out) {
    validate(index);
    out << to_json(index).dump(2) << '\n';
}

void save_index(const Index& index, const std::string& path) {
    std::ostringstream buffer;
    save_index(index, buffer);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::io_error, "cannot write index '" + path + "'");
    out << buffer.str();
    if (!out.flush()) throw Error(ErrorCode::io_error, "failed writing index '" + path + "'");
}

Index load_index(std::istream& in, LoadCheck check) {
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw Error(ErrorCode::corruption, "index file is truncated or not valid JSON");
    Index index = from_json(j);
    if (check == LoadCheck::full) {
        try {
            validate(index);
        } catch (const Error& e) {
            throw Error(ErrorCode::corruption, e.what());
        }
    }
    return index;
}

Index load_index(const std::string& path, LoadCheck check) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::io_error, "cannot open index '" + path + "'");
    return load_index(in, check);
}

json canonical_lattice_json(const FormalContext& ctx, const ConceptLattice& lat) {
    ConceptLattice canon = canonicalize(lat, ctx);
    json concepts = json::array();
    for (const auto& c : canon.concepts())
        concepts.push_back({{"intent", ctx.attribute_names(c.intent)}, {"extent", ctx.object_names(c.extent)}});
    json covers = json::array();
    for (auto [child, parent] : canon.edges()) covers.push_back({child, parent});
    return {{"concepts", std::move(concepts)},
            {"covers", std::move(covers)},
            {"top", canon.top()},
            {"bottom", canon.bottom()}};
}

ReducedLabels reduced_labels(const FormalContext& ctx, const ConceptLattice& lat) {
    ReducedLabels labels;
    labels.attributes.resize(lat.size());
    labels.objects.resize(lat.size());
    std::unordered_map<Bitset, std::size_t, BitsetHash> by_extent, by_intent;
    for (std::size_t c = 0; c < lat.size(); ++c) {
        by_extent.emplace(lat.concepts()[c].extent, c);
        by_intent.emplace(lat.concepts()[c].intent, c);
    }
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
        if (auto it = by_extent.find(ctx.column(m)); it != by_extent.end())
            labels.attributes[it->second].push_back(ctx.attribute(m));
    for (std::size_t g = 0; g < ctx.object_count(); ++g)
        if (auto it = by_intent.find(ctx.row(g)); it != by_intent.end())
            labels.objects[it->second].push_back(ctx.object(g));
    for (auto& v : labels.attributes) std::sort(v.begin(), v.end());
    for (auto& v : labels.objects) std::sort(v.begin(), v.end());
    return labels;
}

std::string export_dot(const Index& index, const DotOptions& options) {
    const auto& ctx = index.context;
    const auto& lat = index.lattice;
    ReducedLabels labels = reduced_labels(ctx, lat);

    std::ostringstream out;
    out << "digraph " << options.graph_name << " {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box, style=rounded];\n";
    std::map<std::size_t, std::vector<std::size_t>> layers;
    for (std::size_t c = 0; c < lat.size(); ++c) {
        const auto& concept_ = lat.concepts()[c];
        std::vector<std::string> attrs = options.full_labels ? ctx.attribute_names(concept_.intent) : labels.attributes[c];
        std::vector<std::string> objs = options.full_labels ? ctx.object_names(concept_.extent) : labels.objects[c];
        std::string label = dot_escape(join(attrs, ", "));
        if (!objs.empty()) label += (label.empty() ? "" : "\\n") + dot_escape(join(objs, ", "));
        out << "  c" << c << " [label=\"" << label << "\"];\n";
        layers[concept_.intent.count()].push_back(c);
    }
    for (const auto& [size, nodes] : layers) {
        out << "  { rank=same;";
        for (std::size_t c : nodes) out << " c" << c << ";";
        out << " }\n";
    }
    for (auto [child, parent] : lat.edges()) out << "  c" << child << " -> c" << parent << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace fcair
