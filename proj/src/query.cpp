#include "fcair/query.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "fcair/error.hpp"

namespace fcair::query {

namespace {

bool is_quote(char c) { return c == '"' || c == '\''; }

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
    return out;
}

}  // namespace

std::string_view to_string(Mode mode) noexcept {
    switch (mode) {
        case Mode::none: return "none";
        case Mode::generalize: return "generalize";
        case Mode::specialize: return "specialize";
    }
    return "none";
}

Mode parse_mode(std::string_view text) {
    if (text == "none") return Mode::none;
    if (text == "generalize") return Mode::generalize;
    if (text == "specialize") return Mode::specialize;
    throw Error(ErrorCode::invalid_query, "unknown reformulation mode '" + std::string(text) + "'");
}

std::vector<std::string> split_query(std::string_view text) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (is_space(text[i])) {
            ++i;
            continue;
        }
        if (is_quote(text[i])) {
            char q = text[i];
            std::size_t close = text.find(q, i + 1);
            if (close == std::string_view::npos) close = text.size();
            out.emplace_back(text.substr(i, std::min(close + 1, text.size()) - i));
            i = close + 1;
            continue;
        }
        std::size_t end = i;
        while (end < text.size() && !is_space(text[end])) ++end;
        out.emplace_back(text.substr(i, end - i));
        i = end;
    }
    return out;
}

std::set<std::string> normalize_terms(const std::vector<std::string>& raw, const corpus::StopList& stops) {
    std::set<std::string> out;
    for (const auto& term : raw) {
        std::string_view t = term;
        bool quoted = t.size() >= 1 && is_quote(t.front());
        if (quoted) {
            t.remove_prefix(1);
            if (!t.empty() && is_quote(t.back())) t.remove_suffix(1);
        }
        std::string phrase = corpus::normalize_phrase(t);
        if (quoted || phrase.find(' ') != std::string::npos) {
            if (!phrase.empty()) out.insert(std::move(phrase));
            continue;
        }
        auto words = corpus::remove_stopwords(corpus::tokenize(t), stops);
        out.insert(words.begin(), words.end());
    }
    return out;
}

std::string pseudo_object_id(const FormalContext& ctx) {
    std::string id = "Query";
    while (ctx.has_object(id)) id += '\'';
    return id;
}

Overlay insert_query(const ConceptLattice& lat, const FormalContext& ctx, const std::set<std::string>& terms) {
    if (terms.empty()) throw Error(ErrorCode::invalid_query, "query has no terms");
    Overlay overlay{ctx, lat, 0, 0};
    AttributeSet intent = ctx.attribute_set(std::vector<std::string>(terms.begin(), terms.end()));
    std::string id = pseudo_object_id(ctx);
    overlay.query_concept = add_object(overlay.lattice, overlay.context, id, intent);
    overlay.query_object = overlay.context.object_index(id);
    return overlay;
}

RankedResult rank_documents(const Overlay& overlay, const std::set<std::string>& query_terms,
                            const RankOptions& options) {
    const auto& ctx = overlay.context;
    const auto& lat = overlay.lattice;
    AttributeSet wanted(ctx.attribute_count());
    for (const auto& t : query_terms)
        if (ctx.has_attribute(t)) wanted.set(ctx.attribute_index(t));

    auto admissible = [&](std::size_t c) {
        return c != lat.top() && c != lat.bottom() && lat.concepts()[c].intent.intersects(wanted);
    };

    RankedResult result;
    result.effective_terms.assign(query_terms.begin(), query_terms.end());

    ObjectSet ranked(ctx.object_count());
    ranked.set(overlay.query_object);
    std::vector<char> seen(lat.size(), 0);
    std::deque<std::pair<std::size_t, std::size_t>> frontier{{overlay.query_concept, 0}};
    seen[overlay.query_concept] = 1;

    while (!frontier.empty()) {
        auto [c, level] = frontier.front();
        frontier.pop_front();

        ObjectSet fresh = lat.concepts()[c].extent - ranked;
        ranked |= fresh;
        TrailStep step{c, level, ctx.object_names(fresh)};
        for (const auto& doc : step.new_documents) result.entries.push_back({level, doc});
        result.trail.push_back(std::move(step));

        if (level >= options.max_depth) continue;
        for (const auto* next : {&lat.upper(c), &lat.lower(c)}) {
            for (std::size_t n : *next) {
                if (seen[n] || !admissible(n)) continue;
                seen[n] = 1;
                frontier.emplace_back(n, level + 1);
            }
        }
    }
    std::sort(result.entries.begin(), result.entries.end(), [](const RankedEntry& a, const RankedEntry& b) {
        return a.rank != b.rank ? a.rank < b.rank : a.doc < b.doc;
    });
    return result;
}

SearchOutcome search(const Index& index, const Query& q, const SearchOptions& options) {
    std::set<std::string> terms = normalize_terms(q.terms, index.stopwords);
    if (terms.empty()) throw Error(ErrorCode::invalid_query, "query is empty after normalization");

    if (index.ontology) {
        // Synonyms stand for their node's primary term.
        std::set<std::string> resolved;
        for (const auto& t : terms) {
            auto n = index.ontology->locate(t);
            resolved.insert(n && !index.context.has_attribute(t) ? index.ontology->node(*n).term : t);
        }
        terms = std::move(resolved);
    }

    if (q.mode != Mode::none) {
        if (!index.ontology)
            throw Error(ErrorCode::no_ontology,
                        std::string("reformulation mode '") + std::string(to_string(q.mode)) +
                            "' needs an index built with an ontology");
        terms = q.mode == Mode::generalize ? ontology::generalize(*index.ontology, terms)
                                           : ontology::specialize(*index.ontology, terms, options.specialize);
    }

    std::set<std::string> known;
    std::vector<std::string> dropped;
    for (const auto& t : terms) {
        if (index.context.has_attribute(t))
            known.insert(t);
        else
            dropped.push_back(t);
    }
    if (known.empty()) throw Error(ErrorCode::no_known_terms, "no known terms in query; dropped: " + join(dropped));

    SearchOutcome outcome{{}, insert_query(index.lattice, index.context, known)};
    outcome.result = rank_documents(outcome.overlay, known, options.rank);
    outcome.result.dropped_terms = std::move(dropped);
    return outcome;
}

nlohmann::json to_json(const RankedResult& result) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : result.entries) entries.push_back({{"rank", e.rank}, {"doc", e.doc}});
    nlohmann::json trail = nlohmann::json::array();
    for (const auto& s : result.trail)
        trail.push_back({{"concept", s.concept_id}, {"level", s.level}, {"new_documents", s.new_documents}});
    return {{"entries", std::move(entries)},
            {"dropped_terms", result.dropped_terms},
            {"effective_terms", result.effective_terms},
            {"trail", std::move(trail)}};
}

}  // namespace fcair::query
