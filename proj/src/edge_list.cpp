#include "prismatic/edge_list.hpp"

#include <fstream>
#include <sstream>

namespace prismatic {

Graph read_edge_list(std::istream& in) {
    std::string line;
    int n = -1;
    long m = -1;
    long seen = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels;
    bool in_labels = false;

    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream c(line.substr(1));
            std::string word;
            c >> word;
            if (word == "labels") {
                in_labels = true;
            } else if (in_labels) {
                // inside the labels block every comment is `# <v> <label>`
                int v;
                std::string label;
                std::istringstream lc(line.substr(1));
                if (lc >> v && std::getline(lc, label)) {
                    if (!label.empty() && label[0] == ' ') label.erase(0, 1);
                    if (v >= 0) {
                        if (static_cast<size_t>(v) >= labels.size())
                            labels.resize(static_cast<size_t>(v) + 1);
                        labels[static_cast<size_t>(v)] = label;
                    }
                } else {
                    in_labels = false;
                }
            }
            continue;
        }
        in_labels = false;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw InvalidEdge("malformed header line: " + line);
            edges.reserve(static_cast<size_t>(m));
            continue;
        }
        int u, v;
        if (!(ls >> u >> v)) throw InvalidEdge("malformed edge line: " + line);
        edges.emplace_back(u, v);
        ++seen;
    }
    if (n < 0) throw InvalidEdge("missing `n m` header");
    if (seen != m)
        throw InvalidEdge("header declared " + std::to_string(m) + " edges, found " +
                          std::to_string(seen));
    if (!labels.empty() && static_cast<int>(labels.size()) != n) labels.resize(static_cast<size_t>(n));
    return build_graph(n, edges, std::move(labels));
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    auto edges = g.edges();  // already lexicographic with u < v
    out << g.vertex_count() << ' ' << edges.size() << '\n';
    if (g.has_labels()) {
        out << "# labels\n";
        for (int v = 0; v < g.vertex_count(); ++v)
            out << "# " << v << ' ' << g.label(v) << '\n';
    }
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    write_edge_list(out, g);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

}  // namespace prismatic
