#include "arrlab/mgraph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace arrlab {

MGraph build_mgraph(const Incidence& inc, int m) {
    if (m < 3) throw UsageError("m-graph machinery needs m >= 3");
    MGraph g;
    g.m = m;
    g.degree = inc.degree;

    const std::vector<int> vertex_points = stratum_div(inc, m);
    std::vector<int> vertex_of_point(inc.points.size(), -1);
    for (std::size_t v = 0; v < vertex_points.size(); ++v) {
        vertex_of_point[vertex_points[v]] = static_cast<int>(v);
        MVertex vert;
        vert.point_id = vertex_points[v];
        vert.weight = multiplicity(inc.points[vertex_points[v]]) / m;
        g.vertices.push_back(vert);
    }

    std::vector<std::vector<int>> vertices_on_line(inc.degree);
    for (std::size_t v = 0; v < vertex_points.size(); ++v)
        for (int line : inc.points[vertex_points[v]].lines)
            vertices_on_line[line].push_back(static_cast<int>(v));

    for (int line = 0; line < inc.degree; ++line) {
        if (vertices_on_line[line].size() < 2) continue;
        MEdge edge;
        edge.line = line;
        edge.vertices = vertices_on_line[line];
        for (int v : edge.vertices) ++g.vertices[v].shared;
        g.edges.push_back(std::move(edge));
    }
    for (MVertex& v : g.vertices) v.privately = v.weight * m - v.shared;
    return g;
}

Rational efficiency(const Incidence& inc, int m) {
    if (m < 3) throw UsageError("m-graph machinery needs m >= 3");
    long long total = 0;
    for (const auto& p : inc.points)
        if (multiplicity(p) % m == 0) total += multiplicity(p);
    return Rational(total, inc.degree);
}

int complexity(const Incidence& inc, int m) {
    const MGraph g = build_mgraph(inc, m);
    int c = 0;
    for (const MVertex& v : g.vertices) c = std::max(c, v.shared);
    return c;
}

MGraphSummary classify(const MGraph& g) {
    MGraphSummary s;
    long long weighted = 0;
    for (const MVertex& v : g.vertices) {
        s.complexity = std::max(s.complexity, v.shared);
        if (v.weight != 1) s.reduced = false;
        weighted += static_cast<long long>(v.weight) * g.m;
    }
    s.efficiency = g.degree > 0 ? Rational(weighted, g.degree) : Rational(0);
    s.unsaturated = s.complexity <= g.m - 1;

    // Connectivity by union-find over the hyperedges.
    std::vector<int> parent(g.vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const MEdge& e : g.edges)
        for (std::size_t i = 1; i < e.vertices.size(); ++i)
            parent[find(e.vertices[i])] = find(e.vertices[0]);
    int components = 0;
    for (std::size_t v = 0; v < parent.size(); ++v)
        if (find(static_cast<int>(v)) == static_cast<int>(v)) ++components;
    s.connected = components <= 1;
    return s;
}

std::string export_dot(const MGraph& g) {
    const bool reduced = std::all_of(g.vertices.begin(), g.vertices.end(),
                                     [](const MVertex& v) { return v.weight == 1; });
    std::ostringstream out;
    out << "graph mgraph {\n";
    out << "  // m = " << g.m << ", degree = " << g.degree << "\n";
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        out << "  v" << v << " [label=\"" << g.vertices[v].point_id;
        if (!reduced) out << " k=" << g.vertices[v].weight;
        out << "\"];\n";
    }
    for (const MEdge& e : g.edges)
        for (std::size_t i = 0; i < e.vertices.size(); ++i)
            for (std::size_t j = i + 1; j < e.vertices.size(); ++j)
                out << "  v" << e.vertices[i] << " -- v" << e.vertices[j] << " [line=" << e.line
                    << "];\n";
    out << "}\n";
    return out.str();
}

} // namespace arrlab
