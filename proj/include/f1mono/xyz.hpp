#pragma once

#include <optional>
#include <string>
#include <vector>

#include "f1mono/braid.hpp"
#include "f1mono/complex.hpp"

namespace f1mono {

// The X/Y/Z half-twist system over the puncture configuration
//   s_{ij} = (i, j), t_{ij} = (i + 1/2, j), rows j = 1..b,
// flattened row-major onto the real line. Two variants:
//  * full: s and t both for 1 <= i <= a+j (the presentation of Prop 4.1,
//    where every stated generator and relator exists);
//  * geometric: t only for i <= a+j-1, so punctures biject with the
//    triangles of K(a,b) (sheets of the covering); this is the system the
//    structure-group model acts through.
struct XyzGenerator {
    char kind = 'x';       // 'x', 'y' or 'z'
    int i = 0, j = 0;
    int origin = 0, end = 0;  // polarized endpoints (puncture positions)
    HalfTwistPath path;
};

struct XyzSystem {
    ComplexParams params;
    bool full = true;
    int punctures = 0;

    std::vector<XyzGenerator> gens;  // generating set (X's, Y's, boundary Z's)

    int pos_s(int i, int j) const;
    int pos_t(int i, int j) const;
    int row_begin(int j) const;  // first puncture position of row j
    int row_size(int j) const;

    bool has_x(int i, int j) const;
    bool has_y(int i, int j) const;
    bool has_z(int i, int j) const;

    XyzGenerator make_x(int i, int j) const;
    XyzGenerator make_y(int i, int j) const;
    XyzGenerator make_z(int i, int j) const;  // the segment z_{ij}, any valid (i,j)

    BraidWord word_of(const XyzGenerator& g) const { return half_twist_word(g.path); }

    // Z_{ij} for i <= a+j by the inductive conjugation from Z_{a+j,j};
    // returns the braid word and the transported polarized endpoints.
    struct PolarizedWord {
        BraidWord word;
        int origin = 0, end = 0;
    };
    PolarizedWord z_inductive(int i, int j) const;
};

XyzSystem make_xyz_system(const ComplexParams& params, bool full);

// Prop 4.1 relator list over the full system: triple relations for adjacent
// generating pairs, commutators for disjoint pairs, and the extra family
// [X_{a+j,j}, Z_{a+j,j} Y_{a+j-1,j} Z_{a+j,j}^-1] = 1.
struct XyzRelator {
    std::string label;
    BraidWord word;
};

std::vector<XyzRelator> xyz_relators(const XyzSystem& sys);

// in the geometric system, puncture positions equal triangle indices
int xyz_generator_count(const XyzSystem& sys, char kind);

}  // namespace f1mono
