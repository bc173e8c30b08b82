#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "f1mono/xyz.hpp"

using namespace f1mono;

TEST_CASE("generator counts and puncture counts") {
    XyzSystem full = make_xyz_system({1, 2}, true);
    CHECK(full.punctures == 10);
    CHECK(xyz_generator_count(full, 'x') == 5);
    CHECK(xyz_generator_count(full, 'y') == 3);
    CHECK(xyz_generator_count(full, 'z') == 1);
    // generating set is a spanning tree
    CHECK(static_cast<int>(full.gens.size()) == full.punctures - 1);

    XyzSystem geom = make_xyz_system({1, 2}, false);
    CHECK(geom.punctures == 8);  // = number of planes 2ab + b^2
    CHECK(static_cast<int>(geom.gens.size()) == geom.punctures - 1);
}

TEST_CASE("x and y generators are elementary half-twists") {
    XyzSystem sys = make_xyz_system({2, 3}, true);
    for (const auto& g : sys.gens) {
        if (g.kind == 'z') continue;
        auto w = sys.word_of(g);
        CHECK(w.letters.size() == 1);
        CHECK(w.letters[0] == g.origin);
        CHECK(g.end == g.origin + 1);
    }
}

TEST_CASE("all presentation relators hold") {
    for (auto [a, b] : {std::pair{1, 2}, {2, 2}, {1, 3}}) {
        for (bool full : {true, false}) {
            XyzSystem sys = make_xyz_system({a, b}, full);
            auto rels = xyz_relators(sys);
            for (const auto& r : rels) {
                INFO("relator ", r.label, " at (", a, ",", b, ") full=", full);
                CHECK(is_identity_braid(r.word));
            }
        }
    }
}

TEST_CASE("inductive Z has the stated polarization and permutation") {
    for (auto [a, b] : {std::pair{1, 2}, {2, 2}, {1, 3}}) {
        for (bool full : {true, false}) {
            XyzSystem sys = make_xyz_system({a, b}, full);
            for (int j = 1; j <= b - 1; ++j) {
                for (int i = 1; sys.has_z(i, j); ++i) {
                    auto pw = sys.z_inductive(i, j);
                    CHECK(pw.origin == sys.pos_s(i, j));
                    CHECK(pw.end == sys.pos_t(i, j + 1));
                    auto inv = homomorphisms(pw.word);
                    CHECK(inv.degree == 1);
                    std::vector<int> expect(static_cast<size_t>(sys.punctures));
                    for (int p = 0; p < sys.punctures; ++p) expect[static_cast<size_t>(p)] = p + 1;
                    std::swap(expect[static_cast<size_t>(pw.origin - 1)],
                              expect[static_cast<size_t>(pw.end - 1)]);
                    CHECK(inv.perm == expect);
                }
            }
        }
    }
}

TEST_CASE("boundary Z from the recursion base matches its segment") {
    XyzSystem sys = make_xyz_system({1, 2}, true);
    auto pw = sys.z_inductive(2, 1);  // i = a+j is the base case
    CHECK(braid_equal(pw.word, half_twist_word(sys.make_z(2, 1).path)));
}
