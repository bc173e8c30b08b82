#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "f1mono/complex.hpp"

using namespace f1mono;

namespace {

const Edge* find_edge(const DegenerationComplex& c, int eps, int r, int k) {
    for (const Edge& e : c.edges)
        if (static_cast<int>(e.kind) == eps && e.r == r && e.k == k) return &e;
    return nullptr;
}

const VertexClass* find_class(const std::vector<VertexClass>& vcs, int r, int k) {
    for (const auto& vc : vcs)
        if (vc.vertex.r == r && vc.vertex.k == k) return &vc;
    return nullptr;
}

}  // namespace

TEST_CASE("build_complex rejects parameters outside the hypothesis") {
    CHECK_THROWS(build_complex({0, 2}));
    CHECK_THROWS(build_complex({1, 1}));
    CHECK_THROWS(census({2, 0}));
}

TEST_CASE("counts for (1,2), (2,3)") {
    auto c12 = build_complex({1, 2});
    CHECK(c12.triangles.size() == 8);
    CHECK(c12.edges.size() == 8);
    CHECK(c12.vertices.size() == 9);

    auto c23 = build_complex({2, 3});
    CHECK(c23.triangles.size() == 21);
    CHECK(c23.edges.size() == 25);
}

TEST_CASE("census closed forms") {
    auto r = census({1, 2});
    CHECK(r.n == 8);
    CHECK(r.lines == 8);
    CHECK(r.m == 16);
    CHECK(r.m1 == 6);
    CHECK(r.deg_sbar == 12);
    CHECK(r.torsion_modulus == 0);

    r = census({1, 3});
    CHECK(r.n == 15);
    CHECK(r.lines == 17);
    CHECK(r.m1 == 14);  // 3ab - a - b + (3b^2-3b)/2 evaluated
    CHECK(r.torsion_modulus == 1);

    r = census({2, 2});
    CHECK(r.n == 12);
    CHECK(r.torsion_modulus == -2);
}

TEST_CASE("vertex census of (1,2)") {
    auto c = build_complex({1, 2});
    auto vcs = classify_vertices(c);
    std::map<VertexKind, std::set<std::pair<int, int>>> by_kind;
    for (const auto& vc : vcs) by_kind[vc.kind].insert({vc.vertex.r, vc.vertex.k});

    CHECK(by_kind[VertexKind::TwoPoint] == std::set<std::pair<int, int>>{{0, 0}, {1, 0}});
    CHECK(by_kind[VertexKind::SixPoint] == std::set<std::pair<int, int>>{{1, 1}});
    CHECK(by_kind[VertexKind::ThreePoint] ==
          std::set<std::pair<int, int>>{{0, 1}, {2, 1}, {1, 2}, {2, 2}});
    CHECK(by_kind[VertexKind::CornerUnclassified] ==
          std::set<std::pair<int, int>>{{0, 2}, {3, 2}});
}

TEST_CASE("incident lines at specific (1,2) vertices") {
    auto c = build_complex({1, 2});
    auto vcs = classify_vertices(c);

    const VertexClass* six = find_class(vcs, 1, 1);
    REQUIRE(six != nullptr);
    CHECK(six->kind == VertexKind::SixPoint);
    std::set<std::string> names;
    for (int l : six->incident_lines) names.insert(c.edge(l).name());
    CHECK(names == std::set<std::string>{"q1_1_1", "q1_2_2", "q2_1_1", "q2_1_2", "q3_1_1",
                                         "q3_2_1"});

    const VertexClass* three = find_class(vcs, 2, 1);
    REQUIRE(three != nullptr);
    CHECK(three->kind == VertexKind::ThreePoint);
    names.clear();
    for (int l : three->incident_lines) names.insert(c.edge(l).name());
    CHECK(names == std::set<std::string>{"q3_2_1", "q2_2_2"});

    const VertexClass* two = find_class(vcs, 0, 0);
    REQUIRE(two != nullptr);
    CHECK(two->kind == VertexKind::TwoPoint);
    REQUIRE(two->incident_lines.size() == 1);
    CHECK(c.edge(two->incident_lines[0]).name() == "q1_1_1");
}

TEST_CASE("grid: enumeration matches closed forms") {
    for (int a = 1; a <= 5; ++a) {
        for (int b = 2; b <= 6; ++b) {
            auto c = build_complex({a, b});
            auto counts = census({a, b});
            CHECK(static_cast<long long>(c.triangles.size()) == counts.n);
            CHECK(static_cast<long long>(c.edges.size()) == counts.lines);

            // every non-boundary edge meets two classified vertices
            auto vcs = classify_vertices(c);
            auto kind_of = [&](const Vertex& v) {
                return find_class(vcs, v.r, v.k)->kind;
            };
            long long incidence_sum = 0;
            for (const auto& vc : vcs) incidence_sum += vc.incident_lines.size();
            CHECK(incidence_sum == 2 * counts.lines);
            for (const Edge& e : c.edges) {
                CHECK(kind_of(e.v0) != VertexKind::CornerUnclassified);
                CHECK(kind_of(e.v1) != VertexKind::CornerUnclassified);
            }
        }
    }
}

TEST_CASE("pair bookkeeping for (1,2)") {
    auto c = build_complex({1, 2});
    auto vcs = classify_vertices(c);
    long long sharing = 0;
    for (const auto& vc : vcs) {
        long long d = static_cast<long long>(vc.incident_lines.size());
        sharing += d * (d - 1) / 2;
    }
    CHECK(sharing == 19);
    CHECK(parasitic_pairs(c).size() == 28 - 19);

    // q1_11 and q2_22 share no vertex; q1_11 and q2_11 share (1,1)
    auto* e1 = find_edge(c, 1, 1, 1);
    auto* e2 = find_edge(c, 2, 2, 2);
    auto* e3 = find_edge(c, 2, 1, 1);
    REQUIRE(e1 != nullptr);
    REQUIRE(e2 != nullptr);
    REQUIRE(e3 != nullptr);
    CHECK_FALSE(edges_share_vertex(*e1, *e2));
    CHECK(edges_share_vertex(*e1, *e3));
}

TEST_CASE("triangle adjacency of edges is consistent") {
    for (auto [a, b] : {std::pair{1, 2}, {2, 2}, {1, 3}, {2, 3}}) {
        auto c = build_complex({a, b});
        std::map<int, int> tri_degree;
        for (const Edge& e : c.edges) {
            auto [t1, t2] = c.adjacent_triangles(e.line);
            CHECK(t1 >= 1);
            CHECK(t2 <= static_cast<int>(c.triangles.size()));
            CHECK(t1 < t2);
            // the two triangles really share both edge endpoints
            for (const Vertex& v : {e.v0, e.v1}) {
                for (int t : {t1, t2}) {
                    const auto& cs = c.triangles[static_cast<size_t>(t - 1)].corners;
                    bool found = false;
                    for (const auto& corner : cs) found |= (corner == v);
                    CHECK(found);
                }
            }
            tri_degree[t1]++;
            tri_degree[t2]++;
        }
        // every triangle is adjacent to at most 3 lines
        for (auto& [t, d] : tri_degree) CHECK(d <= 3);
    }
}
