#pragma once

#include <string>

#include "fcair/context.hpp"

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(FCAIR_FIXTURES_DIR) + "/" + name; }

inline fcair::FormalContext table1() {
    fcair::FormalContext ctx({"s1", "s2", "s3", "s4"}, {"p1", "p2", "p3", "p4", "p5"});
    const char* rows[] = {"XX.X.", "..X.X", "XXX.X", "XXXX."};
    for (std::size_t g = 0; g < 4; ++g)
        for (std::size_t m = 0; m < 5; ++m)
            if (rows[g][m] == 'X') ctx.set_incident(g, m);
    return ctx;
}

// Documents as objects; attributes in sorted order, as the corpus builder emits them.
inline fcair::FormalContext table2() {
    fcair::FormalContext ctx({"d1", "d2", "d3", "d4", "d5"},
                             {"classification", "detection", "image", "probability", "segmentation", "vision"});
    auto set = [&](const char* g, std::initializer_list<const char*> ms) {
        for (const char* m : ms) ctx.set_incident(ctx.object_index(g), ctx.attribute_index(m));
    };
    set("d1", {"image", "segmentation", "probability"});
    set("d2", {"image", "segmentation"});
    set("d3", {"image", "classification"});
    set("d4", {"detection", "segmentation", "probability"});
    set("d5", {"detection", "vision"});
    return ctx;
}

}  // namespace fixtures
