#include "f1mono/complex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace f1mono {

std::string Edge::name() const {
    std::ostringstream os;
    os << "q" << static_cast<int>(kind) << "_" << r << "_" << k;
    return os.str();
}

bool DegenerationComplex::inside(const Vertex& v) const {
    return v.k >= 0 && v.k <= params.b && v.r >= 0 && v.r <= params.a + v.k;
}

bool DegenerationComplex::on_boundary(const Vertex& v) const {
    if (!inside(v)) return false;
    return v.k == 0 || v.k == params.b || v.r == 0 || v.r == params.a + v.k;
}

std::pair<int, int> DegenerationComplex::adjacent_triangles(int line) const {
    const Edge& e = edge(line);
    const int a = params.a;
    auto row_offset = [&](int j) {  // triangles before row j (rows 1..j-1)
        int off = 0;
        for (int jj = 1; jj < j; ++jj) off += 2 * (a + jj) - 1;
        return off;
    };
    switch (e.kind) {
        case EdgeKind::Diagonal:   // row k: s_{r,k} = off+2r-1, t_{r,k} = off+2r
            return {row_offset(e.k) + 2 * e.r - 1, row_offset(e.k) + 2 * e.r};
        case EdgeKind::Vertical:   // t_{r,k}, s_{r+1,k}
            return {row_offset(e.k) + 2 * e.r, row_offset(e.k) + 2 * e.r + 1};
        case EdgeKind::Horizontal: // s_{r,k} in row k, t_{r,k+1} in row k+1
            return {row_offset(e.k) + 2 * e.r - 1, row_offset(e.k + 1) + 2 * e.r};
    }
    throw std::logic_error("unreachable");
}

DegenerationComplex build_complex(const ComplexParams& params) {
    if (!params.valid())
        throw std::invalid_argument("complex requires a >= 1 and b > 1");
    const int a = params.a, b = params.b;
    DegenerationComplex c;
    c.params = params;

    for (int k = 0; k <= b; ++k)
        for (int r = 0; r <= a + k; ++r) c.vertices.push_back({r, k});

    auto add_edge = [&](EdgeKind kind, int r, int k, Vertex v0, Vertex v1, bool boundary) {
        Edge e;
        e.kind = kind;
        e.r = r;
        e.k = k;
        e.v0 = v0;
        e.v1 = v1;
        e.boundary = boundary;
        if (boundary) {
            c.boundary_edges.push_back(e);
        } else {
            c.edges.push_back(e);
        }
    };

    // interior edges in (k, r, eps) order
    for (int k = 1; k <= b; ++k) {
        for (int r = 1; r <= a + k; ++r) {
            if (r <= a + k - 1) {
                add_edge(EdgeKind::Diagonal, r, k, {r - 1, k - 1}, {r, k}, false);
                add_edge(EdgeKind::Vertical, r, k, {r, k - 1}, {r, k}, false);
            }
            if (k <= b - 1) add_edge(EdgeKind::Horizontal, r, k, {r - 1, k}, {r, k}, false);
        }
    }
    std::stable_sort(c.edges.begin(), c.edges.end(), [](const Edge& x, const Edge& y) {
        if (x.k != y.k) return x.k < y.k;
        if (x.r != y.r) return x.r < y.r;
        return static_cast<int>(x.kind) < static_cast<int>(y.kind);
    });
    for (size_t i = 0; i < c.edges.size(); ++i) c.edges[i].line = static_cast<int>(i) + 1;

    // boundary edges carry no punctures
    for (int r = 1; r <= a; ++r)
        add_edge(EdgeKind::Horizontal, r, 0, {r - 1, 0}, {r, 0}, true);
    for (int r = 1; r <= a + b; ++r)
        add_edge(EdgeKind::Horizontal, r, b, {r - 1, b}, {r, b}, true);
    for (int k = 1; k <= b; ++k) {
        add_edge(EdgeKind::Vertical, 0, k, {0, k - 1}, {0, k}, true);
        add_edge(EdgeKind::Diagonal, a + k, k, {a + k - 1, k - 1}, {a + k, k}, true);
    }

    // triangles: rows j = 1..b, alternating upper(r), lower(r)
    int idx = 0;
    for (int j = 1; j <= b; ++j) {
        for (int r = 0; r <= a + j - 1; ++r) {
            Triangle up;
            up.corners = {Vertex{r, j - 1}, Vertex{r, j}, Vertex{r + 1, j}};
            up.upper = true;
            up.index = ++idx;
            c.triangles.push_back(up);
            if (r <= a + j - 2) {
                Triangle lo;
                lo.corners = {Vertex{r, j - 1}, Vertex{r + 1, j - 1}, Vertex{r + 1, j}};
                lo.upper = false;
                lo.index = ++idx;
                c.triangles.push_back(lo);
            }
        }
    }

    const auto counts = census(params);
    if (static_cast<long long>(c.triangles.size()) != counts.n)
        throw std::logic_error("triangle count does not match closed form");
    if (static_cast<long long>(c.edges.size()) != counts.lines)
        throw std::logic_error("interior edge count does not match closed form");
    return c;
}

std::vector<VertexClass> classify_vertices(const DegenerationComplex& c) {
    const int a = c.params.a, b = c.params.b;
    std::vector<VertexClass> out;
    for (const Vertex& v : c.vertices) {
        VertexClass vc;
        vc.vertex = v;
        bool corner_top = (v.r == 0 && v.k == b) || (v.r == a + b && v.k == b);
        if (!c.on_boundary(v)) {
            vc.kind = VertexKind::SixPoint;
            vc.multiplicity = 12;
        } else if ((v.r == 0 && v.k == 0) || (v.r == a && v.k == 0)) {
            vc.kind = VertexKind::TwoPoint;
            vc.multiplicity = 2;
        } else if (corner_top) {
            vc.kind = VertexKind::CornerUnclassified;
            vc.multiplicity = 0;
        } else {
            vc.kind = VertexKind::ThreePoint;
            vc.multiplicity = 4;
        }
        for (const Edge& e : c.edges)
            if (e.v0 == v || e.v1 == v) vc.incident_lines.push_back(e.line);
        if (vc.multiplicity != 2 * static_cast<int>(vc.incident_lines.size()))
            throw std::logic_error("vertex multiplicity mismatch at " + std::to_string(v.r) +
                                   "," + std::to_string(v.k));
        out.push_back(std::move(vc));
    }
    return out;
}

std::vector<VertexClass> classified_vertices(const DegenerationComplex& c) {
    auto all = classify_vertices(c);
    std::vector<VertexClass> out;
    for (auto& vc : all)
        if (vc.kind != VertexKind::CornerUnclassified) out.push_back(std::move(vc));
    std::sort(out.begin(), out.end(), [](const VertexClass& x, const VertexClass& y) {
        return x.vertex < y.vertex;
    });
    return out;
}

CountsReport census(const ComplexParams& params) {
    if (!params.valid())
        throw std::invalid_argument("census requires a >= 1 and b > 1");
    const long long a = params.a, b = params.b;
    CountsReport r;
    r.a = params.a;
    r.b = params.b;
    r.n = 2 * a * b + b * b;
    r.lines = 3 * a * b - a + 3 * b * (b - 1) / 2;
    r.m = 2 * r.lines;
    r.m1 = 3 * a * b - a - b + (3 * b * b - 3 * b) / 2;
    r.deg_sbar = 2 * r.m1;
    r.torsion_modulus = b - 2 * a;
    return r;
}

bool edges_share_vertex(const Edge& e1, const Edge& e2) {
    return e1.v0 == e2.v0 || e1.v0 == e2.v1 || e1.v1 == e2.v0 || e1.v1 == e2.v1;
}

std::vector<std::pair<int, int>> parasitic_pairs(const DegenerationComplex& c) {
    std::vector<std::pair<int, int>> out;
    const int L = c.lines();
    for (int i = 1; i <= L; ++i)
        for (int j = i + 1; j <= L; ++j)
            if (!edges_share_vertex(c.edge(i), c.edge(j))) out.emplace_back(i, j);
    return out;
}

static const char* kind_name(VertexKind k) {
    switch (k) {
        case VertexKind::TwoPoint: return "2-point";
        case VertexKind::ThreePoint: return "3-point";
        case VertexKind::SixPoint: return "6-point";
        case VertexKind::CornerUnclassified: return "corner";
    }
    return "?";
}

std::string dump_complex_json(const DegenerationComplex& c) {
    nlohmann::json j;
    j["a"] = c.params.a;
    j["b"] = c.params.b;
    j["vertices"] = nlohmann::json::array();
    for (const Vertex& v : c.vertices) j["vertices"].push_back({v.r, v.k});
    j["edges"] = nlohmann::json::array();
    for (const Edge& e : c.edges) {
        j["edges"].push_back({{"eps", static_cast<int>(e.kind)},
                              {"r", e.r},
                              {"k", e.k},
                              {"line", e.line},
                              {"endpoints", {{e.v0.r, e.v0.k}, {e.v1.r, e.v1.k}}}});
    }
    j["triangles"] = nlohmann::json::array();
    for (const Triangle& t : c.triangles) {
        j["triangles"].push_back({{"index", t.index},
                                  {"upper", t.upper},
                                  {"corners",
                                   {{t.corners[0].r, t.corners[0].k},
                                    {t.corners[1].r, t.corners[1].k},
                                    {t.corners[2].r, t.corners[2].k}}}});
    }
    j["vertex_classes"] = nlohmann::json::array();
    for (const auto& vc : classify_vertices(c)) {
        j["vertex_classes"].push_back({{"vertex", {vc.vertex.r, vc.vertex.k}},
                                       {"kind", kind_name(vc.kind)},
                                       {"multiplicity", vc.multiplicity},
                                       {"incident_lines", vc.incident_lines}});
    }
    return j.dump(2);
}

std::string dump_complex_text(const DegenerationComplex& c) {
    std::ostringstream os;
    auto counts = census(c.params);
    os << "complex K(" << c.params.a << "," << c.params.b << ")\n";
    os << "planes " << counts.n << "  lines " << counts.lines << "  punctures " << counts.m
       << "\n";
    for (const Edge& e : c.edges)
        os << "line " << e.line << "  " << e.name() << "  [" << e.v0.r << "," << e.v0.k
           << "]-[" << e.v1.r << "," << e.v1.k << "]\n";
    for (const auto& vc : classify_vertices(c)) {
        os << "vertex (" << vc.vertex.r << "," << vc.vertex.k << ") " << kind_name(vc.kind);
        if (!vc.incident_lines.empty()) {
            os << "  lines";
            for (int l : vc.incident_lines) os << " " << l;
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace f1mono
