#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace f1mono {

struct ComplexParams {
    int a = 1;
    int b = 2;
    bool valid() const { return a >= 1 && b > 1; }
};

struct Vertex {
    int r = 0, k = 0;
    bool operator==(const Vertex& o) const { return r == o.r && k == o.k; }
    bool operator<(const Vertex& o) const { return k != o.k ? k < o.k : r < o.r; }
};

enum class EdgeKind : int { Diagonal = 1, Vertical = 2, Horizontal = 3 };

// Edge q^(eps)_{r,k}. Diagonal (eps=1): [w_{r-1,k-1}, w_{r,k}], 1<=k<=b,
// 1<=r<=a+k-1. Vertical (eps=2): [w_{r,k-1}, w_{r,k}], same range.
// Horizontal (eps=3): [w_{r-1,k}, w_{r,k}], 1<=k<=b-1, 1<=r<=a+k.
struct Edge {
    EdgeKind kind = EdgeKind::Diagonal;
    int r = 0, k = 0;
    Vertex v0, v1;
    bool boundary = false;
    int line = 0;  // 1-based index in the (k, r, eps) order; 0 for boundary edges

    std::string name() const;
};

enum class VertexKind { TwoPoint, ThreePoint, SixPoint, CornerUnclassified };

struct VertexClass {
    Vertex vertex;
    VertexKind kind = VertexKind::CornerUnclassified;
    int multiplicity = 0;            // 12 / 4 / 2, or 0 for corners
    std::vector<int> incident_lines; // line indices, ascending
};

// Triangles of one row j (heights j-1..j) alternate upper(0), lower(0),
// upper(1), ..., upper(a+j-1); rows are concatenated. This fixes the sheet
// numbering used by the S_n quotient check.
struct Triangle {
    std::array<Vertex, 3> corners;
    bool upper = false;
    int index = 0;  // 1-based
};

struct DegenerationComplex {
    ComplexParams params;
    std::vector<Vertex> vertices;          // all lattice points of P, sorted (k, r)
    std::vector<Edge> edges;               // interior edges in (k, r, eps) order
    std::vector<Edge> boundary_edges;
    std::vector<Triangle> triangles;

    int lines() const { return static_cast<int>(edges.size()); }
    int punctures() const { return 2 * lines(); }
    const Edge& edge(int line) const { return edges.at(static_cast<size_t>(line - 1)); }

    // doubled puncture positions of a line: (2*line-1, 2*line)
    std::pair<int, int> puncture_pair(int line) const { return {2 * line - 1, 2 * line}; }

    // adjacent triangle indices of an interior edge, ascending
    std::pair<int, int> adjacent_triangles(int line) const;

    bool inside(const Vertex& v) const;
    bool on_boundary(const Vertex& v) const;
};

struct CountsReport {
    int a = 0, b = 0;
    long long n = 0;        // planes: 2ab + b^2
    long long lines = 0;    // 3ab - a + (3b/2)(b-1)
    long long m = 0;        // punctures: 2 * lines
    long long m1 = 0;       // 3ab - a - b + (3b^2-3b)/2
    long long deg_sbar = 0; // 2 * m1
    long long torsion_modulus = 0;  // b - 2a
};

DegenerationComplex build_complex(const ComplexParams& params);
std::vector<VertexClass> classify_vertices(const DegenerationComplex& c);
CountsReport census(const ComplexParams& params);

// classified vertices (2/3/6-points) in ascending (k, r) order
std::vector<VertexClass> classified_vertices(const DegenerationComplex& c);

bool edges_share_vertex(const Edge& e1, const Edge& e2);

// unordered pairs {i < j} of lines with no common vertex, lexicographic
std::vector<std::pair<int, int>> parasitic_pairs(const DegenerationComplex& c);

std::string dump_complex_json(const DegenerationComplex& c);
std::string dump_complex_text(const DegenerationComplex& c);

}  // namespace f1mono
