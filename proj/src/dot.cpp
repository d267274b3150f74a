#include <map>
#include <sstream>

#include "perilink/engine.hpp"

namespace perilink {

namespace {

std::string_view sector_color(const Sector& s) {
    static const std::map<std::string_view, std::string_view> colors{
        {"F00", "#8dd3c7"}, {"F01", "#ffffb3"}, {"F10", "#bebada"}, {"F11", "#fb8072"}};
    return colors.at(s.name());
}

}  // namespace

std::string to_dot(const BoxGraph& graph) {
    std::ostringstream out;
    out << "graph linkage {\n  node [style=filled];\n";
    for (std::size_t k = 0; k < graph.nodes.size(); ++k) {
        const ParityWeight& pw = graph.nodes[k];
        out << "  n" << k << " [label=\"" << pw.to_string() << "\", fillcolor=\"" << sector_color(sector(pw))
            << "\"];\n";
    }
    std::map<std::pair<std::size_t, std::size_t>, MoveKind> undirected;
    for (const auto& e : graph.edges) undirected.emplace(std::minmax(e.from, e.to), e.move.kind);
    for (const auto& [ends, kind] : undirected)
        out << "  n" << ends.first << " -- n" << ends.second << " [label=\"" << kind_name(kind) << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace perilink
