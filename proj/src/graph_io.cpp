#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "goodlab/errors.hpp"
#include "goodlab/graph.hpp"

namespace goodlab {

namespace {

bool is_blank_or_comment(std::string_view line) {
    auto first = line.find_first_not_of(" \t\r");
    return first == std::string_view::npos || line[first] == '#';
}

// Reads exactly `count` unsigned integers from the line, nothing else.
std::vector<std::uint64_t> read_fields(const std::string& line, std::size_t count,
                                       std::size_t line_no) {
    std::istringstream in(line);
    std::vector<std::uint64_t> fields;
    std::string token;
    while (in >> token) {
        if (token.find_first_not_of("0123456789") != std::string::npos || token.size() > 18) {
            throw ParseError(line_no, "expected a nonnegative integer, got '" + token + "'");
        }
        fields.push_back(std::stoull(token));
    }
    if (fields.size() != count) {
        throw ParseError(line_no, "expected " + std::to_string(count) + " fields, got " +
                                      std::to_string(fields.size()));
    }
    return fields;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::vector<Edge> edges;
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;

    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line)) continue;
        auto fields = read_fields(line, 2, line_no);
        if (!have_header) {
            n = fields[0];
            m = fields[1];
            if (n > std::numeric_limits<Vertex>::max()) throw ParseError(line_no, "vertex count too large");
            have_header = true;
            continue;
        }
        std::uint64_t u = fields[0];
        std::uint64_t v = fields[1];
        if (u >= n || v >= n) {
            throw RangeError("line " + std::to_string(line_no) + ": vertex id out of range [0," +
                             std::to_string(n) + ")");
        }
        if (u == v) throw ValidationError("line " + std::to_string(line_no) + ": self-loop");
        if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
            throw ValidationError("line " + std::to_string(line_no) + ": duplicate edge");
        }
        if (edges.size() == m) throw ParseError(line_no, "more edge lines than declared");
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    if (!have_header) throw ParseError(line_no + 1, "missing 'n m' header");
    if (edges.size() != m) {
        throw ParseError(line_no, "declared " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
    }
    return Graph(static_cast<std::size_t>(n), std::move(edges));
}

std::string write_graph(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count());
    for (const Edge& e : g.edges()) {
        out += '\n';
        out += std::to_string(e.u);
        out += ' ';
        out += std::to_string(e.v);
    }
    return out;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open graph file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

}  // namespace goodlab
