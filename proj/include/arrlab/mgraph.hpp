#pragma once

#include <string>
#include <vector>

#include "arrlab/arrangement.hpp"

namespace arrlab {

/// Vertex of the m-graph: a point of multiplicity k*m. `shared` counts the
/// lines through it that contain another vertex (its edges), `privately`
/// the remaining lines, so shared + privately = weight * m.
struct MVertex {
    int point_id = -1;
    int weight = 0; // k, for a point of multiplicity k*m
    int shared = 0; // n_P
    int privately = 0; // r_P
};

/// Edge of the m-graph: a line carrying at least two vertices. Stored as a
/// hyperedge (the full ordered vertex list); pairwise expansion happens only
/// in the DOT export.
struct MEdge {
    int line = -1;
    std::vector<int> vertices; // indices into MGraph::vertices, ascending
};

struct MGraph {
    int m = 0;
    int degree = 0;
    std::vector<MVertex> vertices;
    std::vector<MEdge> edges;
};

struct MGraphSummary {
    Rational efficiency;  // E_{L,m}
    int complexity = 0;   // C_{L,m}, 0 on the empty graph
    bool reduced = true;  // every weight is 1
    bool unsaturated = true; // complexity <= m - 1
    bool connected = true;   // empty graph is connected by convention
};

// Vertices are the points with multiplicity divisible by m; m >= 3.
MGraph build_mgraph(const Incidence& inc, int m);

// Sum over k of |L^[km]| * km / d, exactly.
Rational efficiency(const Incidence& inc, int m);

// Max over vertices of the number of edges through it.
int complexity(const Incidence& inc, int m);

MGraphSummary classify(const MGraph& g);

// Deterministic DOT text: one node per vertex (id, weight unless the graph
// is reduced), one pairwise edge per vertex pair per line with a line
// attribute. Byte-identical across runs for the same graph.
std::string export_dot(const MGraph& g);

} // namespace arrlab
