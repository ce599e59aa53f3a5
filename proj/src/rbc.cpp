#include "ramsey/rbc.hpp"

#include "ramsey/error.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace ramsey {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

bool read_number(std::string_view& s, std::size_t& out) {
    s = trim(s);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc{} || ptr == s.data()) {
        return false;
    }
    s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
    return true;
}

} // namespace

std::string RbcFile::meta(std::string_view key) const {
    for (const auto& [k, v] : metadata) {
        if (k == key) {
            return v;
        }
    }
    return {};
}

std::string canonical_rbc(const TwoColoring& c) { return to_rbc(c); }

std::string to_rbc(const TwoColoring& c, const std::vector<std::pair<std::string, std::string>>& metadata) {
    std::ostringstream out;
    out << "rbc " << c.order() << '\n';
    for (const auto& [key, value] : metadata) {
        out << "# " << key << ' ' << value << '\n';
    }
    for (auto [u, v] : c.red().edges()) {
        out << u << ' ' << v << '\n';
    }
    return out.str();
}

RbcFile parse_rbc(std::string_view text) {
    std::size_t line_no = 0;
    const auto fail = [&](const std::string& why) -> ParseError {
        return ParseError("rbc line " + std::to_string(line_no) + ": " + why);
    };

    std::optional<GraphBuilder> red;
    RbcFile file;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        std::string_view comment;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            comment = trim(line.substr(hash + 1));
            line = line.substr(0, hash);
        }
        line = trim(line);

        if (!red) {
            if (!line.starts_with("rbc ")) {
                throw fail("expected header 'rbc <N>'");
            }
            line.remove_prefix(4);
            std::size_t order = 0;
            if (!read_number(line, order) || !trim(line).empty()) {
                throw fail("malformed vertex count");
            }
            red.emplace(order);
            continue;
        }
        if (!comment.empty() && line.empty()) {
            const auto space = comment.find(' ');
            file.metadata.emplace_back(std::string(comment.substr(0, space)),
                                       space == std::string_view::npos ? std::string{}
                                                                       : std::string(trim(comment.substr(space + 1))));
        }
        if (line.empty()) {
            continue;
        }
        std::size_t u = 0;
        std::size_t v = 0;
        if (!read_number(line, u) || !read_number(line, v) || !trim(line).empty()) {
            throw fail("expected 'u v'");
        }
        if (u >= v) {
            throw fail("edge endpoints must satisfy u < v");
        }
        if (v >= red->order()) {
            throw fail("vertex " + std::to_string(v) + " out of range");
        }
        if (red->has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
            throw fail("repeated edge " + std::to_string(u) + " " + std::to_string(v));
        }
        red->add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (!red) {
        throw ParseError("rbc: empty file");
    }
    file.coloring = TwoColoring(std::move(*red).build());
    return file;
}

RbcFile read_rbc_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open " + path.string());
    }
    std::ostringstream body;
    body << in.rdbuf();
    return parse_rbc(body.str());
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << text;
}

} // namespace ramsey
