#include <doctest.h>

#include <set>

#include "arrlab/families.hpp"
#include "arrlab/mgraph.hpp"

using namespace arrlab;

TEST_CASE("gaa3(2) has the complete graph on its four triple points") {
    const Incidence inc = builtin_family("gaa3", {2}).incidence;
    const MGraph g = build_mgraph(inc, 3);
    CHECK(g.vertices.size() == 4);
    CHECK(g.edges.size() == 6);
    std::set<std::pair<int, int>> pairs;
    for (const MEdge& e : g.edges) {
        REQUIRE(e.vertices.size() == 2);
        pairs.emplace(e.vertices[0], e.vertices[1]);
    }
    CHECK(pairs.size() == 6); // K4
    for (const MVertex& v : g.vertices) {
        CHECK(v.weight == 1);
        CHECK(v.shared == 3);
        CHECK(v.privately == 0);
    }
    CHECK(efficiency(inc, 3) == Rational(2));
    CHECK(complexity(inc, 3) == 3);

    const MGraphSummary s = classify(g);
    CHECK(s.reduced);
    CHECK(s.connected);
    CHECK_FALSE(s.unsaturated); // 3 > m - 1 = 2
    CHECK(s.efficiency == Rational(2));
    CHECK(s.complexity == 3);
}

TEST_CASE("hessian 4-graph: 9 vertices, 12 edges, every vertex on 4 edges") {
    const Incidence inc = builtin_family("hessian", {}).incidence;
    const MGraph g = build_mgraph(inc, 4);
    CHECK(g.vertices.size() == 9);
    CHECK(g.edges.size() == 12);
    for (const MEdge& e : g.edges) CHECK(e.vertices.size() == 3); // each line meets 3 vertices
    for (const MVertex& v : g.vertices) {
        CHECK(v.shared == 4);
        CHECK(v.privately == 0);
    }
    CHECK(efficiency(inc, 4) == Rational(3));
    CHECK(complexity(inc, 4) == 4);
}

TEST_CASE("hessian 3-graph is empty") {
    const Incidence inc = builtin_family("hessian", {}).incidence;
    const MGraph g = build_mgraph(inc, 3);
    CHECK(g.vertices.empty());
    CHECK(g.edges.empty());
    CHECK(complexity(inc, 3) == 0);
    const MGraphSummary s = classify(g);
    CHECK(s.reduced);
    CHECK(s.unsaturated);
    CHECK(s.connected);
    CHECK(s.efficiency == Rational(0));
}

TEST_CASE("m below 3 is rejected") {
    const Incidence inc = builtin_family("gaa3", {2}).incidence;
    CHECK_THROWS_AS(build_mgraph(inc, 2), UsageError);
    CHECK_THROWS_AS(efficiency(inc, 2), UsageError);
    CHECK_THROWS_AS(complexity(inc, 1), UsageError);
}

TEST_CASE("complexity is 0 when at most one vertex exists") {
    CHECK(complexity(pencil(3), 3) == 0);
    CHECK(complexity(pencil(6), 3) == 0);
}

TEST_CASE("generated arrangements are reduced, connected, unsaturated") {
    const Incidence inc = generate_generic_plus_nodes(6, 0);
    const MGraphSummary s = classify(build_mgraph(inc, 3));
    CHECK(s.reduced);
    CHECK(s.connected);
    CHECK(s.unsaturated);
    CHECK(s.efficiency == Rational(15, 7));
}

TEST_CASE("a disjoint union with two vertex groups is disconnected") {
    const Incidence u = disjoint_union(pencil(3), pencil(3));
    const MGraphSummary s = classify(build_mgraph(u, 3));
    CHECK_FALSE(s.connected);
    CHECK(s.reduced);
    CHECK(s.unsaturated);
}

TEST_CASE("handshake: total vertex weight matches the efficiency") {
    for (const auto& [name, params] :
         std::vector<std::pair<std::string, std::vector<long long>>>{
             {"gaa3", {2}}, {"gaa3", {3}}, {"grid", {5}}, {"grid", {6}},
             {"hessian", {}}, {"fermat_ceva", {4}}, {"sec24_block", {}}}) {
        const Incidence inc = builtin_family(name, params).incidence;
        for (int m : {3, 4, 5, 6}) {
            const MGraph g = build_mgraph(inc, m);
            long long weighted = 0;
            for (const MVertex& v : g.vertices) {
                weighted += static_cast<long long>(v.weight) * m;
                CHECK(v.shared + v.privately == v.weight * m);
                // shared equals the number of edges through the vertex
                int edges_here = 0;
                for (const MEdge& e : g.edges)
                    for (int idx : e.vertices) edges_here += (idx == &v - g.vertices.data());
                CHECK(edges_here == v.shared);
            }
            CHECK(Rational(weighted, inc.degree) == efficiency(inc, m));
        }
    }
}

TEST_CASE("complexity of a reduced simple graph is below the vertex count") {
    for (const Incidence& inc :
         {builtin_family("gaa3", {2}).incidence, builtin_family("sec24_block", {}).incidence,
          builtin_family("ex32_f1", {}).incidence}) {
        const MGraph g = build_mgraph(inc, 3);
        const MGraphSummary s = classify(g);
        REQUIRE(s.reduced);
        bool simple = true;
        for (const MEdge& e : g.edges) simple = simple && e.vertices.size() == 2;
        if (simple) CHECK(s.complexity <= static_cast<int>(g.vertices.size()) - 1);
    }
}

TEST_CASE("block arrangement graph matches its picture") {
    const Incidence inc = builtin_family("sec24_block", {}).incidence;
    const MGraph g = build_mgraph(inc, 3);
    CHECK(g.vertices.size() == 5);
    CHECK(g.edges.size() == 7);
    CHECK(efficiency(inc, 3) == Rational(15, 8));
    CHECK(complexity(inc, 3) == 3);
    // line 0 contributes no edge; the vertex on it has one private line
    int privates = 0;
    for (const MVertex& v : g.vertices) privates += v.privately;
    CHECK(privates == 1);
}

TEST_CASE("DOT export is deterministic and expands hyperedges pairwise") {
    const Incidence inc = builtin_family("hessian", {}).incidence;
    const MGraph g = build_mgraph(inc, 4);
    const std::string dot = export_dot(g);
    CHECK(dot == export_dot(build_mgraph(inc, 4)));
    // 9 nodes, 12 lines each carrying C(3,2) = 3 vertex pairs
    std::size_t nodes = 0, edges = 0, at = 0;
    while ((at = dot.find("[label=", at)) != std::string::npos) {
        ++nodes;
        ++at;
    }
    at = 0;
    while ((at = dot.find(" -- ", at)) != std::string::npos) {
        ++edges;
        ++at;
    }
    CHECK(nodes == 9);
    CHECK(edges == 36);
    CHECK(dot.find("k=") == std::string::npos); // reduced graph omits weights

    const std::string empty_dot = export_dot(build_mgraph(inc, 3));
    CHECK(empty_dot == "graph mgraph {\n  // m = 3, degree = 12\n}\n");

    // weighted graphs carry the weight in the label
    const std::string weighted = export_dot(build_mgraph(pencil(6), 3));
    CHECK(weighted.find("k=2") != std::string::npos);
}

TEST_CASE("K4 of gaa3(2) renders four nodes and six edges") {
    const std::string dot = export_dot(build_mgraph(builtin_family("gaa3", {2}).incidence, 3));
    std::size_t nodes = 0, edges = 0, at = 0;
    while ((at = dot.find("[label=", at)) != std::string::npos) {
        ++nodes;
        ++at;
    }
    at = 0;
    while ((at = dot.find(" -- ", at)) != std::string::npos) {
        ++edges;
        ++at;
    }
    CHECK(nodes == 4);
    CHECK(edges == 6);
}
