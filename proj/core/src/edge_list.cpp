#include "netsens/edge_list.hpp"

#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

namespace netsens {

ParsedEdgeList from_edge_list(std::string_view text) {
    std::unordered_map<std::string, int> id_of;
    std::vector<std::string> labels;
    std::set<Edge> seen;
    std::vector<Edge> edges;
    int duplicates = 0, self_loops = 0;

    const auto intern = [&](std::string&& label) {
        auto [it, inserted] = id_of.try_emplace(std::move(label), static_cast<int>(labels.size()));
        if (inserted) labels.push_back(it->first);
        return it->second;
    };

    std::size_t pos = 0;
    int line_no = 0;
    bool any_line = false;
    while (pos < text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        ++line_no;

        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        std::istringstream tokens{std::string(line)};
        std::string a, b, extra;
        if (!(tokens >> a)) continue;  // blank line
        if (a.front() == '#' || a.front() == '%') continue;
        if (!(tokens >> b) || (tokens >> extra))
            throw ParseError("edge list line " + std::to_string(line_no) +
                             ": expected exactly two labels");
        any_line = true;

        const int u = intern(std::move(a));
        const int v = intern(std::move(b));
        if (u == v) {
            ++self_loops;
            continue;
        }
        const Edge e{std::min(u, v), std::max(u, v)};
        if (!seen.insert(e).second) {
            ++duplicates;
            continue;
        }
        edges.push_back(e);
    }

    if (!any_line) throw ParseError("edge list: no edges in input");

    ParsedEdgeList result;
    const int node_count = static_cast<int>(labels.size());
    result.graph = Graph(node_count, std::move(edges), std::move(labels));
    result.duplicate_edges = duplicates;
    result.self_loops = self_loops;
    return result;
}

ParsedEdgeList read_edge_list_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open edge list file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return from_edge_list(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_edge_list(const Graph& g, std::ostream& out) {
    for (const auto& [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file: " + path);
    write_edge_list(g, out);
}

}  // namespace netsens
