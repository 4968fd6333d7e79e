#include <doctest.h>

#include <random>
#include <sstream>

#include "fcair/corpus.hpp"
#include "fcair/error.hpp"
#include "fixtures.hpp"

using namespace fcair;
using namespace fcair::corpus;
using Terms = std::vector<std::string>;

TEST_CASE("parse the three-document listing") {
    auto docs = load_corpus(fixtures::path("fig3.xml"));
    REQUIRE(docs.size() == 3);
    CHECK(docs[0].id == "document_1");
    CHECK(docs[0].authors.size() == 4);
    CHECK(docs[0].title == "ga-svm and mutual information based frequency feature selection for face recognition");
    // <title> is accepted as an alias of <titre>.
    CHECK(docs[2].title == "hos-based image sequence noise removal");
}

TEST_CASE("parse edge cases") {
    CHECK(parse_corpus(std::string_view("<documents/>")).empty());

    auto expect_error = [](std::string_view xml, std::string_view fragment) {
        try {
            parse_corpus(xml);
            FAIL("expected a parse error");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::parse_error);
            CHECK_MESSAGE(std::string(e.what()).find(fragment) != std::string::npos, e.what());
        }
    };
    expect_error(R"(<documents><document nom="document_1"><titre>a</titre></document>)"
                 R"(<document nom="document_1"><titre>b</titre></document></documents>)",
                 "duplicate document id 'document_1'");
    expect_error(R"(<documents><document nom="a"><titre>x</titre></document><document><titre>y</titre></document></documents>)",
                 "document #2");
    expect_error(R"(<documents><document nom="a"><auteur>x</auteur></document></documents>)", "'a' has no <titre>");
    expect_error("<documents><document nom=\"a\">\n<titre>x</document></documents>", "line 2");
    expect_error("<other/>", "root element");
}

TEST_CASE("tokenize") {
    CHECK(tokenize("ga-svm and mutual information based frequency feature selection for face recognition") ==
          Terms{"ga", "svm", "and", "mutual", "information", "based", "frequency", "feature", "selection", "for",
                "face", "recognition"});
    CHECK(tokenize("").empty());
    CHECK(tokenize("hos-based image sequence noise removal") ==
          Terms{"hos", "based", "image", "sequence", "noise", "removal"});
    CHECK(tokenize("k-optimal-spanning-trees: Approximation!") ==
          Terms{"k", "optimal", "spanning", "trees", "approximation"});
    CHECK(tokenize("Détection -- a,b") == Terms{"d\xc3\xa9tection", "ab"});
}

TEST_CASE("tokenize is idempotent") {
    std::mt19937 rng(1);
    const std::string alphabet = "abcXYZ019 -_,.;:()!?'\"\t";
    for (int i = 0; i < 300; ++i) {
        std::string s;
        for (int k = 0; k < 40; ++k) s += alphabet[rng() % alphabet.size()];
        auto once = tokenize(s);
        std::string joined;
        for (const auto& t : once) joined += t + " ";
        CHECK(tokenize(joined) == once);
        for (const auto& t : once)
            for (char c : t) CHECK(((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')));
    }
}

TEST_CASE("remove_stopwords") {
    auto stops = StopList::defaults();
    auto terms = tokenize("ga-svm and mutual information based frequency feature selection for face recognition");
    CHECK(remove_stopwords(terms, stops) == std::set<std::string>{"ga", "svm", "mutual", "information", "based",
                                                                  "frequency", "feature", "selection", "face",
                                                                  "recognition"});
    CHECK(remove_stopwords({}, stops).empty());
    CHECK(remove_stopwords({"of", "is", "and"}, stops).empty());
}

TEST_CASE("stop list file format") {
    std::istringstream in("# comment\nThe\n\n  foo  # trailing\n");
    auto stops = StopList::parse(in);
    CHECK(stops.words() == std::set<std::string>{"foo", "the"});
    CHECK(StopList::defaults().contains("of"));
    CHECK_FALSE(StopList::defaults().contains("based"));
}

TEST_CASE("build_context") {
    std::vector<Document> docs{{"d1", {}, "", {"image", "segmentation", "probability"}},
                               {"d2", {}, "", {"image", "segmentation"}},
                               {"d3", {}, "", {"image", "classification"}},
                               {"d4", {}, "", {"detection", "segmentation", "probability"}},
                               {"d5", {}, "", {"detection", "vision"}}};
    CHECK(build_context(docs) == fixtures::table2());

    auto one = build_context({{"d", {}, "", {"t"}}});
    CHECK(one.object_count() == 1);
    CHECK(one.incident(0, 0));

    auto diag = build_context({{"x", {}, "", {"a"}}, {"y", {}, "", {"b"}}});
    CHECK(diag.incident(0, 0));
    CHECK(diag.incident(1, 1));
    CHECK_FALSE(diag.incident(0, 1));
    CHECK_FALSE(diag.incident(1, 0));

    CHECK(build_context({}).object_count() == 0);
}

TEST_CASE("indexed attributes are clean") {
    auto docs = load_corpus(fixtures::path("fig3.xml"));
    auto stops = StopList::defaults();
    for (auto& d : docs) index_terms(d, stops);
    auto ctx = build_context(docs);
    for (const auto& m : ctx.attributes()) {
        CHECK_FALSE(stops.contains(m));
        for (char c : m) CHECK(((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')));
    }
    for (std::size_t g = 0; g < docs.size(); ++g)
        CHECK(ctx.attribute_names(ctx.row(g)) == std::vector<std::string>(docs[g].terms.begin(), docs[g].terms.end()));
}

TEST_CASE("phrase terms") {
    Document d{"d", {}, "A fast Detection  of contour method", {}};
    index_terms(d, StopList::defaults(), {"detection of contour", "contour method x", "tour"});
    CHECK(d.terms.contains("detection of contour"));
    CHECK_FALSE(d.terms.contains("contour method x"));
    CHECK_FALSE(d.terms.contains("tour"));
    CHECK(normalize_phrase("  Segmentation   by approach (Border) ") == "segmentation by approach (border)");
}

TEST_CASE("corpus write/parse round trip") {
    auto docs = load_corpus(fixtures::path("fig3.xml"));
    docs.push_back({"odd & <id>", {"O'Neil \"Q\""}, "a < b & c", {}});
    std::stringstream ss;
    write_corpus(ss, docs);
    auto again = parse_corpus(ss);
    CHECK(again == docs);
}
