#pragma once

#include <istream>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fcair/context.hpp"

namespace fcair::corpus {

struct Document {
    std::string id;
    std::vector<std::string> authors;
    std::string title;
    std::set<std::string> terms;

    friend bool operator==(const Document&, const Document&) = default;
};

/// Lowercase words discarded during indexing.
class StopList {
public:
    StopList() = default;
    explicit StopList(std::set<std::string> words);

    /// The built-in list (data/stopwords.txt, compiled in).
    static StopList defaults();
    /// One term per line; '#' starts a comment; blank lines ignored.
    static StopList parse(std::istream& in);
    static StopList load(const std::string& path);

    bool contains(std::string_view word) const { return words_.contains(std::string(word)); }
    const std::set<std::string>& words() const noexcept { return words_; }
    void merge(const StopList& other);

    friend bool operator==(const StopList&, const StopList&) = default;

private:
    std::set<std::string> words_;
};

/// Reads the <documents>/<document nom=".."> corpus format. Titles are read
/// from <titre>, with <title> accepted as an alias. Terms are left empty.
std::vector<Document> parse_corpus(std::istream& in);
std::vector<Document> parse_corpus(std::string_view xml);
std::vector<Document> load_corpus(const std::string& path);

/// Emits the corpus format (always <titre>).
void write_corpus(std::ostream& out, const std::vector<Document>& docs);

/// Whitespace split, hyphen split, strip non-alphanumerics, lowercase.
/// Bytes outside ASCII are kept unchanged.
std::vector<std::string> tokenize(std::string_view text);

std::set<std::string> remove_stopwords(const std::vector<std::string>& terms, const StopList& stops);

/// Lowercases ASCII, trims and collapses internal whitespace. Used for
/// multi-word terms, which keep their punctuation.
std::string normalize_phrase(std::string_view text);

/// Fills Document::terms from the title. Each phrase in `phrases` that occurs
/// in the normalized title on word boundaries is added as a single term.
void index_terms(Document& doc, const StopList& stops, const std::vector<std::string>& phrases = {});

/// Objects are document ids in corpus order; attributes the sorted union of
/// all term sets; incidence is term presence.
FormalContext build_context(const std::vector<Document>& docs);

}  // namespace fcair::corpus
