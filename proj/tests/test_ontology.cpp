#include <doctest.h>

#include <algorithm>
#include <iterator>
#include <sstream>

#include "fcair/error.hpp"
#include "fcair/ontology.hpp"
#include "fixtures.hpp"

using namespace fcair;
using namespace fcair::ontology;
using Terms = std::set<std::string>;

namespace {

OntologyTree sample() { return OntologyTree::load(fixtures::path("ontology.json")); }
OntologyTree illustrative() { return OntologyTree::load(std::string(FCAIR_DATA_DIR) + "/image_processing_ontology.json"); }

void expect_validation_error(std::string_view text, std::string_view fragment) {
    try {
        OntologyTree::parse(text);
        FAIL("expected a validation error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::validation_error);
        CHECK_MESSAGE(std::string(e.what()).find(fragment) != std::string::npos, e.what());
    }
}

}  // namespace

TEST_CASE("sample ontology holds the border-segmentation chain") {
    auto tree = sample();
    auto canny = tree.locate("canny filter");
    REQUIRE(canny);
    CHECK(tree.node(*canny).children.empty());
    std::vector<std::string> chain;
    for (std::optional<std::size_t> n = canny; n; n = tree.node(*n).parent) chain.push_back(tree.node(*n).term);
    CHECK(chain == std::vector<std::string>{"canny filter", "detection of contour", "segmentation by approach (border)",
                                            "segmentation"});
    CHECK(tree.node(tree.root()).term == "segmentation");
}

TEST_CASE("locate") {
    auto tree = sample();
    auto dc = tree.locate("detection of contour");
    REQUIRE(dc);
    CHECK(tree.node(*dc).term == "detection of contour");
    CHECK(tree.locate("Detection  of Contour") == dc);
    CHECK(tree.locate("edge detection") == dc);
    CHECK_FALSE(tree.locate("astronomy"));
}

TEST_CASE("generalize") {
    auto tree = sample();
    CHECK(generalize(tree, {"detection of contour"}) ==
          Terms{"detection of contour", "segmentation by approach (border)", "segmentation"});
    CHECK(generalize(tree, {"segmentation"}) == Terms{"segmentation"});
    CHECK(generalize(tree, {"edge detection"}) ==
          Terms{"edge detection", "segmentation by approach (border)", "segmentation"});
    CHECK(generalize(tree, {"unknown-term"}) == Terms{"unknown-term"});
}

TEST_CASE("specialize") {
    auto tree = sample();
    CHECK(specialize(tree, {"detection of contour"}) == Terms{"detection of contour", "canny filter"});
    CHECK(specialize(tree, {"canny filter"}) == Terms{"canny filter"});
    CHECK(specialize(tree, {"segmentation"}) ==
          Terms{"segmentation", "segmentation by approach (border)", "detection of contour", "canny filter"});
    CHECK(specialize(tree, {"segmentation"}, SpecializeMode::leaves) == Terms{"segmentation", "canny filter"});

    auto wide = illustrative();
    CHECK(specialize(wide, {"segmentation by approach (border)"}, SpecializeMode::leaves) ==
          Terms{"segmentation by approach (border)", "canny filter", "sobel filter", "contour closing"});
    CHECK(specialize(wide, {"segmentation by approach (border)"}) ==
          Terms{"segmentation by approach (border)", "detection of contour", "canny filter", "sobel filter",
                "contour closing"});
}

TEST_CASE("expansion invariants over every node") {
    auto tree = illustrative();
    for (const auto& node : tree.nodes()) {
        Terms q{node.term};
        auto up = generalize(tree, q);
        auto down = specialize(tree, q);
        CHECK(std::includes(up.begin(), up.end(), q.begin(), q.end()));
        CHECK(std::includes(down.begin(), down.end(), q.begin(), q.end()));
        CHECK(generalize(tree, up) == up);
        CHECK(specialize(tree, down) == down);
        Terms both;
        std::set_intersection(up.begin(), up.end(), down.begin(), down.end(), std::inserter(both, both.end()));
        CHECK(both == q);
    }
}

TEST_CASE("parse errors") {
    CHECK(OntologyTree::parse(R"({"term": "solo"})").size() == 1);
    expect_validation_error(R"({"term": "a", "children": [{"term": "b", "children": [{"term": "a"}]}]})", "cycle");
    expect_validation_error(R"({"term": "a", "children": [{"term": "b"}, {"term": "B"}]})", "duplicate");
    expect_validation_error(R"([{"term": "a"}, {"term": "b"}])", "exactly one root");
    expect_validation_error(R"({"name": "a"})", "term");
    CHECK_THROWS_AS(OntologyTree::parse("{not json"), Error);
}

TEST_CASE("emit/parse round trip is stable") {
    auto tree = illustrative();
    std::stringstream first;
    tree.write(first);
    auto again = OntologyTree::parse(first.str());
    CHECK(again == tree);
    std::stringstream second;
    again.write(second);
    CHECK(first.str() == second.str());
    auto seg = tree.locate("segmentation");
    REQUIRE(seg);
    CHECK(tree.node(*seg).attributes == std::vector<Descriptor>{{"name", "string"}, {"type", "string"}});
}
