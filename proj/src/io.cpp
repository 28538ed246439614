#include "pcg/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pcg {

void write_graph(std::ostream& os, const Graph& g) {
    os << "p pcg " << g.order() << " " << g.size() << "\n";
    for (auto [u, v] : g.edges()) os << "e " << u + 1 << " " << v + 1 << "\n";
}

Graph read_graph(std::istream& is) {
    std::string line;
    int n = -1, m = -1, edges_seen = 0;
    Graph g;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        if (tag == "p") {
            std::string format;
            if (n != -1) throw ParseError("line " + std::to_string(lineno) + ": duplicate header");
            if (!(ls >> format >> n >> m) || format != "pcg" || n < 0 || m < 0)
                throw ParseError("line " + std::to_string(lineno) + ": bad header, expected 'p pcg <n> <m>'");
            g = Graph(n);
        } else if (tag == "e") {
            if (n == -1) throw ParseError("line " + std::to_string(lineno) + ": edge before header");
            int u, v;
            if (!(ls >> u >> v) || u < 1 || u > n || v < 1 || v > n)
                throw ParseError("line " + std::to_string(lineno) + ": bad edge");
            try {
                g.add_edge(u - 1, v - 1);
            } catch (const std::invalid_argument& e) {
                throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
            }
            ++edges_seen;
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown record '" + tag + "'");
        }
    }
    if (n == -1) throw ParseError("missing 'p pcg' header");
    if (edges_seen != m)
        throw ParseError("header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(edges_seen));
    return g;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ParseError("cannot open graph file: " + path);
    return read_graph(is);
}

void write_coloring(std::ostream& os, const PackingColoring& c) {
    for (size_t v = 0; v < c.colors.size(); ++v) os << v + 1 << " " << c.colors[v] << "\n";
}

PackingColoring read_coloring(std::istream& is, int n) {
    PackingColoring c;
    c.colors.assign(n, 0);
    std::string line;
    int lineno = 0, seen = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        int v, color;
        std::string first;
        if (!(ls >> first) || first == "c") continue;
        std::istringstream reparse(line);
        if (!(reparse >> v >> color) || v < 1 || v > n)
            throw ParseError("line " + std::to_string(lineno) + ": bad coloring entry");
        if (color < 1)
            throw ParseError("line " + std::to_string(lineno) + ": colors must be positive");
        if (c.colors[v - 1] != 0)
            throw ParseError("line " + std::to_string(lineno) + ": vertex listed twice");
        c.colors[v - 1] = color;
        ++seen;
    }
    if (seen != n)
        throw ParseError("coloring lists " + std::to_string(seen) + " of " + std::to_string(n) +
                         " vertices");
    return c;
}

PackingColoring read_coloring_file(const std::string& path, int n) {
    std::ifstream is(path);
    if (!is) throw ParseError("cannot open coloring file: " + path);
    return read_coloring(is, n);
}

std::string instance_metadata_json(const FamilyInstance& inst) {
    nlohmann::json j;
    j["family"] = family_name(inst.family);
    j["params"] = inst.params;
    j["n"] = inst.graph.order();
    j["m"] = inst.graph.size();
    j["canonical"] = inst.canonical;
    if (inst.corona_base) j["corona_base"] = family_name(*inst.corona_base);
    if (!inst.spine.empty()) {
        std::vector<int> spine1;
        for (int v : inst.spine) spine1.push_back(v + 1);
        j["spine"] = spine1;
        j["c_t"] = compute_ct(inst);
    }
    return j.dump(2) + "\n";
}

std::map<std::string, std::string> read_config(std::istream& is) {
    std::map<std::string, std::string> out;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        // trim
        auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        auto end = line.find_last_not_of(" \t\r");
        line = line.substr(begin, end - begin + 1);
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("config line " + std::to_string(lineno) + ": expected key=value");
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        auto strip = [](std::string s) {
            auto b = s.find_first_not_of(" \t");
            auto e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        out[strip(key)] = strip(value);
    }
    return out;
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ParseError("cannot open config file: " + path);
    return read_config(is);
}

std::chrono::milliseconds parse_duration(const std::string& text) {
    size_t pos = 0;
    long long value = -1;
    try {
        value = std::stoll(text, &pos);
    } catch (const std::exception&) {
        throw ParseError("bad duration: " + text);
    }
    if (value < 0) throw ParseError("durations must be non-negative: " + text);
    std::string unit = text.substr(pos);
    if (unit == "ms") return std::chrono::milliseconds(value);
    if (unit == "s" || unit.empty()) return std::chrono::milliseconds(value * 1000);
    if (unit == "m") return std::chrono::milliseconds(value * 60 * 1000);
    if (unit == "h") return std::chrono::milliseconds(value * 60 * 60 * 1000);
    throw ParseError("bad duration unit: " + text);
}

}  // namespace pcg
