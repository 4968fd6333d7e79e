#include "fcair/cxt.hpp"

#include <fstream>
#include <vector>

#include "fcair/error.hpp"

namespace fcair {

namespace {

std::string strip_cr(std::string s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

std::size_t parse_count(const std::string& line, const char* what) {
    try {
        std::size_t used = 0;
        unsigned long v = std::stoul(line, &used);
        if (used != line.size()) throw std::invalid_argument(line);
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorCode::parse_error, std::string("cxt: invalid ") + what + " '" + line + "'");
    }
}

}  // namespace

FormalContext read_cxt(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(strip_cr(line));

    if (lines.empty() || lines[0] != "B") throw Error(ErrorCode::parse_error, "cxt: missing 'B' header");
    // Header: B, optional name line, counts; skip blanks between them.
    std::size_t pos = 1;
    auto next_nonblank = [&]() -> std::string {
        while (pos < lines.size() && lines[pos].empty()) ++pos;
        if (pos >= lines.size()) throw Error(ErrorCode::parse_error, "cxt: truncated header");
        return lines[pos++];
    };
    std::string first = next_nonblank();
    std::size_t n_objects = 0;
    try {
        n_objects = parse_count(first, "object count");
    } catch (const Error&) {
        n_objects = parse_count(next_nonblank(), "object count");  // first line was a context name
    }
    std::size_t n_attributes = parse_count(next_nonblank(), "attribute count");
    while (pos < lines.size() && lines[pos].empty()) ++pos;

    if (lines.size() < pos + n_objects + n_attributes + n_objects)
        throw Error(ErrorCode::parse_error, "cxt: truncated body");
    std::vector<std::string> objects(lines.begin() + static_cast<std::ptrdiff_t>(pos),
                                     lines.begin() + static_cast<std::ptrdiff_t>(pos + n_objects));
    pos += n_objects;
    std::vector<std::string> attributes(lines.begin() + static_cast<std::ptrdiff_t>(pos),
                                        lines.begin() + static_cast<std::ptrdiff_t>(pos + n_attributes));
    pos += n_attributes;

    FormalContext ctx(std::move(objects), std::move(attributes));
    for (std::size_t g = 0; g < n_objects; ++g) {
        const std::string& row = lines[pos + g];
        if (row.size() != n_attributes)
            throw Error(ErrorCode::parse_error, "cxt: row " + std::to_string(g + 1) + " has wrong width");
        for (std::size_t m = 0; m < n_attributes; ++m) {
            char c = row[m];
            if (c == 'X' || c == 'x')
                ctx.set_incident(g, m);
            else if (c != '.')
                throw Error(ErrorCode::parse_error, "cxt: unexpected character in row " + std::to_string(g + 1));
        }
    }
    return ctx;
}

FormalContext load_cxt(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::io_error, "cannot open context '" + path + "'");
    return read_cxt(in);
}

void write_cxt(std::ostream& out, const FormalContext& ctx) {
    out << "B\n\n" << ctx.object_count() << '\n' << ctx.attribute_count() << "\n\n";
    for (const auto& g : ctx.objects()) out << g << '\n';
    for (const auto& m : ctx.attributes()) out << m << '\n';
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
        for (std::size_t m = 0; m < ctx.attribute_count(); ++m) out << (ctx.incident(g, m) ? 'X' : '.');
        out << '\n';
    }
}

}  // namespace fcair
