#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "goodlab/errors.hpp"
#include "goodlab/walks.hpp"

namespace goodlab {

void validate_labelling(const Graph& g, const Labelling& phi) {
    if (phi.size() != g.edge_count()) {
        throw ValidationError("labelling has " + std::to_string(phi.size()) +
                              " labels for a graph with " + std::to_string(g.edge_count()) +
                              " edges");
    }
}

std::vector<std::uint32_t> label_ranks(const Labelling& phi) {
    std::vector<std::uint32_t> order(phi.size());
    std::iota(order.begin(), order.end(), 0U);
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return phi[a] < phi[b]; });
    std::vector<std::uint32_t> rank(phi.size());
    std::uint32_t current = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i > 0 && phi[order[i - 1]] < phi[order[i]]) ++current;
        rank[order[i]] = current;
    }
    return rank;
}

Labelling labelling_from_ranks(const std::vector<std::uint64_t>& ranks) {
    Labelling phi;
    phi.labels.reserve(ranks.size());
    for (std::uint64_t r : ranks) phi.labels.emplace_back(r);
    return phi;
}

std::string label_text(const Rational& label) {
    if (is_integer(label)) return boost::multiprecision::numerator(label).str();
    return to_string(label);
}

Labelling parse_labelling(std::string_view text, const Graph& g) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::optional<Rational>> labels(g.edge_count());
    std::size_t assigned = 0;

    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        std::string u_text;
        std::string v_text;
        std::string label;
        std::string extra;
        if (!(fields >> u_text >> v_text >> label) || (fields >> extra)) {
            throw ParseError(line_no, "expected 'u v label'");
        }
        std::uint64_t u = 0;
        std::uint64_t v = 0;
        try {
            if (u_text.find_first_not_of("0123456789") != std::string::npos ||
                v_text.find_first_not_of("0123456789") != std::string::npos) {
                throw std::invalid_argument("not a vertex id");
            }
            u = std::stoull(u_text);
            v = std::stoull(v_text);
        } catch (const std::exception&) {
            throw ParseError(line_no, "invalid vertex id");
        }
        if (u >= g.vertex_count() || v >= g.vertex_count()) {
            throw RangeError("line " + std::to_string(line_no) + ": vertex id out of range");
        }
        auto id = g.edge_id(static_cast<Vertex>(u), static_cast<Vertex>(v));
        if (!id) {
            throw ValidationError("line " + std::to_string(line_no) + ": {" + u_text + "," +
                                  v_text + "} is not an edge of the graph");
        }
        if (labels[*id]) {
            throw ValidationError("line " + std::to_string(line_no) + ": edge labelled twice");
        }
        try {
            labels[*id] = parse_rational(label);
        } catch (const ValidationError& e) {
            throw ParseError(line_no, e.what());
        }
        ++assigned;
    }
    if (assigned != g.edge_count()) {
        for (EdgeId e = 0; e < labels.size(); ++e) {
            if (!labels[e]) {
                throw ValidationError("edge {" + std::to_string(g.edge(e).u) + "," +
                                      std::to_string(g.edge(e).v) + "} has no label");
            }
        }
    }
    Labelling phi;
    phi.labels.reserve(labels.size());
    for (auto& l : labels) phi.labels.push_back(std::move(*l));
    return phi;
}

std::string write_labelling(const Graph& g, const Labelling& phi) {
    validate_labelling(g, phi);
    std::string out;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (e > 0) out += '\n';
        out += std::to_string(g.edge(e).u) + " " + std::to_string(g.edge(e).v) + " " +
               label_text(phi[e]);
    }
    return out;
}

Labelling read_labelling_file(const std::string& path, const Graph& g) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open labelling file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_labelling(buffer.str(), g);
}

bool is_nice_walk(const Graph& g, const Labelling& phi, const Walk& walk) {
    if (walk.size() < 2) return false;
    std::optional<EdgeId> prev;
    for (std::size_t i = 1; i < walk.size(); ++i) {
        auto e = g.edge_id(walk[i - 1], walk[i]);
        if (!e) return false;
        if (i >= 2 && walk[i - 2] == walk[i]) return false;
        if (prev && phi[*e] < phi[*prev]) return false;
        prev = e;
    }
    return true;
}

bool is_nondecreasing_path(const Graph& g, const Labelling& phi, const Walk& path) {
    if (!is_nice_walk(g, phi, path)) return false;
    std::unordered_set<Vertex> seen(path.begin(), path.end());
    return seen.size() == path.size();
}

}  // namespace goodlab
