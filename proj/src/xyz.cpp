#include "f1mono/xyz.hpp"

#include <sstream>
#include <stdexcept>

namespace f1mono {

int XyzSystem::row_size(int j) const {
    return full ? 2 * (params.a + j) : 2 * (params.a + j) - 1;
}

int XyzSystem::row_begin(int j) const {
    int off = 0;
    for (int jj = 1; jj < j; ++jj) off += row_size(jj);
    return off + 1;
}

int XyzSystem::pos_s(int i, int j) const { return row_begin(j) + 2 * (i - 1); }
int XyzSystem::pos_t(int i, int j) const { return row_begin(j) + 2 * (i - 1) + 1; }

bool XyzSystem::has_x(int i, int j) const {
    int hi = full ? params.a + j : params.a + j - 1;
    return j >= 1 && j <= params.b && i >= 1 && i <= hi;
}

bool XyzSystem::has_y(int i, int j) const {
    return j >= 1 && j <= params.b && i >= 1 && i <= params.a + j - 1;
}

bool XyzSystem::has_z(int i, int j) const {
    return j >= 1 && j <= params.b - 1 && i >= 1 && i <= params.a + j;
}

XyzGenerator XyzSystem::make_x(int i, int j) const {
    if (!has_x(i, j)) throw std::invalid_argument("x index out of range");
    XyzGenerator g;
    g.kind = 'x';
    g.i = i;
    g.j = j;
    g.origin = pos_s(i, j);
    g.end = pos_t(i, j);
    g.path = HalfTwistPath(punctures, g.origin, g.end);
    return g;
}

XyzGenerator XyzSystem::make_y(int i, int j) const {
    if (!has_y(i, j)) throw std::invalid_argument("y index out of range");
    XyzGenerator g;
    g.kind = 'y';
    g.i = i;
    g.j = j;
    g.origin = pos_t(i, j);
    g.end = pos_s(i + 1, j);
    g.path = HalfTwistPath(punctures, g.origin, g.end);
    return g;
}

XyzGenerator XyzSystem::make_z(int i, int j) const {
    if (!has_z(i, j)) throw std::invalid_argument("z index out of range");
    XyzGenerator g;
    g.kind = 'z';
    g.i = i;
    g.j = j;
    g.origin = pos_s(i, j);
    g.end = pos_t(i, j + 1);
    // Canonical flattening of the two-row picture: the segment passes above
    // the remaining punctures of row j and below the row j+1 punctures left
    // of its endpoint.
    std::vector<Pass> tags;
    int row_j_end = row_begin(j) + row_size(j) - 1;
    for (int p = g.origin + 1; p <= row_j_end; ++p) tags.push_back(Pass::Above);
    for (int p = row_j_end + 1; p < g.end; ++p) tags.push_back(Pass::Below);
    g.path = HalfTwistPath(punctures, g.origin, g.end, std::move(tags));
    return g;
}

XyzSystem::PolarizedWord XyzSystem::z_inductive(int i, int j) const {
    if (!has_z(i, j)) throw std::invalid_argument("z index out of range");
    const int a = params.a;
    PolarizedWord cur;
    {
        XyzGenerator zb = make_z(a + j, j);
        cur.word = word_of(zb);
        cur.origin = zb.origin;
        cur.end = zb.end;
    }
    for (int ii = a + j - 1; ii >= i; --ii) {
        // Z_{ii,j} = (Z_{ii+1,j}) conjugated by X_{ii+1,j+1}^-1 Y_{ii,j+1} Y_{ii,j}^-1 X_{ii,j}
        BraidWord c(punctures);
        c *= word_of(make_x(ii + 1, j + 1)).inverse();
        c *= word_of(make_y(ii, j + 1));
        c *= word_of(make_y(ii, j)).inverse();
        c *= word_of(make_x(ii, j));
        // right-action conjugation: (w)_c = c^-1 w c
        cur.word = free_reduce(c.inverse() * cur.word * c);
        // transport the polarized endpoints: point p goes to the position
        // where strand p ends, i.e. perm^-1 reading of the label array
        auto lab = permutation(c);
        std::vector<int> point_to(static_cast<size_t>(punctures) + 1, 0);
        for (int pos = 1; pos <= punctures; ++pos)
            point_to[static_cast<size_t>(lab[static_cast<size_t>(pos - 1)])] = pos;
        cur.origin = point_to[static_cast<size_t>(cur.origin)];
        cur.end = point_to[static_cast<size_t>(cur.end)];
    }
    return cur;
}

XyzSystem make_xyz_system(const ComplexParams& params, bool full) {
    if (!params.valid()) throw std::invalid_argument("invalid parameters");
    XyzSystem sys;
    sys.params = params;
    sys.full = full;
    int count = 0;
    for (int j = 1; j <= params.b; ++j) count += full ? 2 * (params.a + j) : 2 * (params.a + j) - 1;
    sys.punctures = count;
    for (int j = 1; j <= params.b; ++j)
        for (int i = 1; sys.has_x(i, j); ++i) sys.gens.push_back(sys.make_x(i, j));
    for (int j = 1; j <= params.b; ++j)
        for (int i = 1; sys.has_y(i, j); ++i) sys.gens.push_back(sys.make_y(i, j));
    for (int j = 1; j <= params.b - 1; ++j) sys.gens.push_back(sys.make_z(params.a + j, j));
    return sys;
}

namespace {

bool segments_adjacent(const XyzGenerator& g, const XyzGenerator& h) {
    int shared = 0;
    for (int p : {g.origin, g.end})
        for (int q : {h.origin, h.end})
            if (p == q) ++shared;
    return shared == 1;
}

std::string gen_label(const XyzGenerator& g) {
    std::ostringstream os;
    os << g.kind << g.i << "," << g.j;
    return os.str();
}

}  // namespace

std::vector<XyzRelator> xyz_relators(const XyzSystem& sys) {
    std::vector<XyzRelator> out;
    const auto& gs = sys.gens;
    for (size_t u = 0; u < gs.size(); ++u) {
        for (size_t v = u + 1; v < gs.size(); ++v) {
            BraidWord A = sys.word_of(gs[u]);
            BraidWord B = sys.word_of(gs[v]);
            XyzRelator rel;
            if (segments_adjacent(gs[u], gs[v])) {
                rel.label = "<" + gen_label(gs[u]) + "," + gen_label(gs[v]) + ">";
                rel.word = A * B * A * B.inverse() * A.inverse() * B.inverse();
            } else {
                rel.label = "[" + gen_label(gs[u]) + "," + gen_label(gs[v]) + "]";
                rel.word = A * B * A.inverse() * B.inverse();
            }
            rel.word = free_reduce(rel.word);
            out.push_back(std::move(rel));
        }
    }
    // extra family: [X_{a+j,j}, Z_{a+j,j} Y_{a+j-1,j} Z_{a+j,j}^-1] = 1
    if (sys.full) {
        for (int j = 1; j <= sys.params.b - 1; ++j) {
            int i = sys.params.a + j;
            BraidWord X = sys.word_of(sys.make_x(i, j));
            BraidWord Z = sys.word_of(sys.make_z(i, j));
            BraidWord Y = sys.word_of(sys.make_y(i - 1, j));
            // conjugation is right-action throughout: (Y)_Z = Z^-1 Y Z
            BraidWord W = Z.inverse() * Y * Z;
            XyzRelator rel;
            std::ostringstream os;
            os << "[x" << i << "," << j << ", zyz^-1]";
            rel.label = os.str();
            rel.word = free_reduce(X * W * X.inverse() * W.inverse());
            out.push_back(std::move(rel));
        }
    }
    return out;
}

int xyz_generator_count(const XyzSystem& sys, char kind) {
    int c = 0;
    for (const auto& g : sys.gens)
        if (g.kind == kind) ++c;
    return c;
}

}  // namespace f1mono
