#include "fcair/corpus.hpp"

#include <expat.h>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <memory>
#include <sstream>
#include <unordered_set>

#include "fcair/error.hpp"

namespace fcair::corpus {

namespace detail {
extern const std::string_view default_stopwords_text;
}

namespace {

bool is_space(unsigned char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }
bool is_ascii_alnum(unsigned char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
char ascii_lower(unsigned char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : static_cast<char>(c); }

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && is_space(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && is_space(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::string xml_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

struct ParseState {
    XML_Parser parser = nullptr;
    std::vector<Document> docs;
    std::unordered_set<std::string> seen_ids;
    int depth = 0;
    bool in_document = false;
    bool has_title = false;
    std::string field;  // "auteur" / "titre" while collecting text
    std::string text;
    std::size_t ordinal = 0;
    std::string error;

    void fail(std::string message) {
        if (error.empty()) {
            error = std::move(message) + " (line " + std::to_string(XML_GetCurrentLineNumber(parser)) + ")";
            XML_StopParser(parser, XML_FALSE);
        }
    }
};

void XMLCALL on_start(void* data, const XML_Char* name, const XML_Char** attrs) {
    auto& st = *static_cast<ParseState*>(data);
    std::string_view tag(name);
    ++st.depth;
    if (st.depth == 1) {
        if (tag != "documents") st.fail("root element must be <documents>, found <" + std::string(tag) + ">");
        return;
    }
    if (st.depth == 2 && tag == "document") {
        ++st.ordinal;
        const char* nom = nullptr;
        for (const XML_Char** a = attrs; *a; a += 2)
            if (std::string_view(a[0]) == "nom") nom = a[1];
        if (!nom || trim(nom).empty()) {
            st.fail("document #" + std::to_string(st.ordinal) + " has no 'nom' attribute");
            return;
        }
        std::string id = trim(nom);
        if (!st.seen_ids.insert(id).second) {
            st.fail("duplicate document id '" + id + "'");
            return;
        }
        st.docs.push_back(Document{id, {}, {}, {}});
        st.in_document = true;
        st.has_title = false;
        return;
    }
    if (st.depth == 3 && st.in_document) {
        if (tag == "auteur") {
            st.field = "auteur";
        } else if (tag == "titre" || tag == "title") {
            if (st.has_title) {
                st.fail("document '" + st.docs.back().id + "' has more than one title");
                return;
            }
            st.field = "titre";
        }
        st.text.clear();
    }
}

void XMLCALL on_end(void* data, const XML_Char* name) {
    auto& st = *static_cast<ParseState*>(data);
    std::string_view tag(name);
    if (st.depth == 3 && st.in_document && !st.field.empty()) {
        if (st.field == "auteur") {
            std::string a = trim(st.text);
            if (!a.empty()) st.docs.back().authors.push_back(std::move(a));
        } else {
            st.docs.back().title = trim(st.text);
            st.has_title = true;
        }
        st.field.clear();
    } else if (st.depth == 2 && tag == "document" && st.in_document) {
        if (!st.has_title) st.fail("document '" + st.docs.back().id + "' has no <titre> element");
        st.in_document = false;
    }
    --st.depth;
}

void XMLCALL on_text(void* data, const XML_Char* s, int len) {
    auto& st = *static_cast<ParseState*>(data);
    if (!st.field.empty()) st.text.append(s, static_cast<std::size_t>(len));
}

}  // namespace

StopList::StopList(std::set<std::string> words) {
    for (const auto& w : words) words_.insert(normalize_phrase(w));
}

StopList StopList::defaults() {
    std::istringstream in{std::string(detail::default_stopwords_text)};
    return parse(in);
}

StopList StopList::parse(std::istream& in) {
    std::set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::string w = normalize_phrase(line);
        if (!w.empty()) words.insert(std::move(w));
    }
    return StopList(std::move(words));
}

StopList StopList::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::io_error, "cannot open stop list '" + path + "'");
    return parse(in);
}

void StopList::merge(const StopList& other) { words_.insert(other.words_.begin(), other.words_.end()); }

std::vector<Document> parse_corpus(std::string_view xml) {
    ParseState st;
    std::unique_ptr<std::remove_pointer_t<XML_Parser>, decltype(&XML_ParserFree)> parser(XML_ParserCreate("UTF-8"),
                                                                                          &XML_ParserFree);
    if (!parser) throw Error(ErrorCode::parse_error, "cannot allocate XML parser");
    st.parser = parser.get();
    XML_SetUserData(parser.get(), &st);
    XML_SetElementHandler(parser.get(), on_start, on_end);
    XML_SetCharacterDataHandler(parser.get(), on_text);

    XML_Status status = XML_Parse(parser.get(), xml.data(), static_cast<int>(xml.size()), XML_TRUE);
    if (!st.error.empty()) throw Error(ErrorCode::parse_error, st.error);
    if (status != XML_STATUS_OK) {
        throw Error(ErrorCode::parse_error,
                    std::string("malformed XML: ") + XML_ErrorString(XML_GetErrorCode(parser.get())) + " at line " +
                        std::to_string(XML_GetCurrentLineNumber(parser.get())) + ", column " +
                        std::to_string(XML_GetCurrentColumnNumber(parser.get())));
    }
    return std::move(st.docs);
}

std::vector<Document> parse_corpus(std::istream& in) {
    std::string xml((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_corpus(std::string_view(xml));
}

std::vector<Document> load_corpus(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::io_error, "cannot open corpus '" + path + "'");
    return parse_corpus(in);
}

void write_corpus(std::ostream& out, const std::vector<Document>& docs) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<documents>\n";
    for (const auto& d : docs) {
        out << "  <document nom=\"" << xml_escape(d.id) << "\">\n";
        for (const auto& a : d.authors) out << "    <auteur>" << xml_escape(a) << "</auteur>\n";
        out << "    <titre>" << xml_escape(d.title) << "</titre>\n";
        out << "  </document>\n";
    }
    out << "</documents>\n";
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> out;
    std::string current;
    auto flush = [&] {
        if (!current.empty()) out.push_back(std::move(current));
        current.clear();
    };
    for (char ch : text) {
        auto c = static_cast<unsigned char>(ch);
        if (is_space(c) || c == '-') {
            flush();
        } else if (is_ascii_alnum(c) || c >= 0x80) {
            current += ascii_lower(c);
        }
        // Remaining ASCII punctuation is dropped without splitting.
    }
    flush();
    return out;
}

std::set<std::string> remove_stopwords(const std::vector<std::string>& terms, const StopList& stops) {
    std::set<std::string> out;
    for (const auto& t : terms)
        if (!stops.contains(t)) out.insert(t);
    return out;
}

std::string normalize_phrase(std::string_view text) {
    std::string out;
    bool pending_space = false;
    for (char ch : text) {
        auto c = static_cast<unsigned char>(ch);
        if (is_space(c)) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) out += ' ';
        pending_space = false;
        out += ascii_lower(c);
    }
    return out;
}

void index_terms(Document& doc, const StopList& stops, const std::vector<std::string>& phrases) {
    doc.terms = remove_stopwords(tokenize(doc.title), stops);
    if (phrases.empty()) return;
    const std::string title = normalize_phrase(doc.title);
    auto boundary = [&](std::size_t pos) {
        return pos >= title.size() || !is_ascii_alnum(static_cast<unsigned char>(title[pos]));
    };
    for (const auto& raw : phrases) {
        std::string phrase = normalize_phrase(raw);
        if (phrase.empty()) continue;
        for (std::size_t pos = title.find(phrase); pos != std::string::npos; pos = title.find(phrase, pos + 1)) {
            if ((pos == 0 || boundary(pos - 1)) && boundary(pos + phrase.size())) {
                doc.terms.insert(phrase);
                break;
            }
        }
    }
}

FormalContext build_context(const std::vector<Document>& docs) {
    std::set<std::string> universe;
    std::vector<std::string> ids;
    ids.reserve(docs.size());
    for (const auto& d : docs) {
        universe.insert(d.terms.begin(), d.terms.end());
        ids.push_back(d.id);
    }
    FormalContext ctx(std::move(ids), std::vector<std::string>(universe.begin(), universe.end()));
    for (std::size_t g = 0; g < docs.size(); ++g)
        for (const auto& t : docs[g].terms) ctx.set_incident(g, ctx.attribute_index(t));
    return ctx;
}

}  // namespace fcair::corpus
