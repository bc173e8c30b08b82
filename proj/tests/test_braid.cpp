#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "f1mono/braid.hpp"

using namespace f1mono;

namespace {

BraidWord word(int m, std::initializer_list<int> ls) { return BraidWord(m, ls); }

BraidWord random_word(std::mt19937& rng, int m, int len) {
    std::uniform_int_distribution<int> gen(1, m - 1);
    std::uniform_int_distribution<int> sgn(0, 1);
    BraidWord w(m);
    for (int i = 0; i < len; ++i) w.letters.push_back(sgn(rng) ? gen(rng) : -gen(rng));
    return w;
}

}  // namespace

TEST_CASE("free reduction of braid words") {
    BraidWord w = word(3, {1, 2, -2, -1, 2});
    CHECK(free_reduce(w).letters == std::vector<int>{2});
    CHECK(free_reduce(free_reduce(w)).letters == std::vector<int>{2});
}

TEST_CASE("artin action defining formulas") {
    // sigma_1 on x_1 (m=2) -> x_1 x_2 x_1^-1
    auto g = artin_act(word(2, {1}), FreeGroupWord::generator(2, 1));
    CHECK(g.letters == std::vector<int>{1, 2, -1});
    // sigma_1 on x_2 -> x_1
    g = artin_act(word(2, {1}), FreeGroupWord::generator(2, 2));
    CHECK(g.letters == std::vector<int>{1});
    // sigma_1^2 fixes the boundary word x_1 x_2
    FreeGroupWord b(2);
    b.letters = {1, 2};
    CHECK(artin_act(word(2, {1, 1}), b) == b);
}

TEST_CASE("full twist conjugates by the boundary word") {
    const int m = 3;
    BraidWord d2 = word(m, {1, 2, 1, 2, 1, 2});  // (s1 s2)^3
    FreeGroupWord boundary(m);
    boundary.letters = {1, 2, 3};
    for (int i = 1; i <= m; ++i) {
        auto img = artin_act(d2, FreeGroupWord::generator(m, i));
        auto expect = FreeGroupWord::generator(m, i).conjugated_by(boundary);
        CHECK(img == expect);
    }
    CHECK(braid_equal(d2, full_twist(m)));
}

TEST_CASE("artin action is a (left) group action on random words") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        int m = 4 + trial % 3;
        BraidWord u = random_word(rng, m, 12), v = random_word(rng, m, 12);
        FreeGroupWord g = artin_act(random_word(rng, m, 6), FreeGroupWord::generator(m, 1 + trial % m));
        CHECK(artin_act(u * v, g) == artin_act(u, artin_act(v, g)));
        // inverse law
        CHECK(artin_act(u * u.inverse(), g) == g);
    }
}

TEST_CASE("braid_equal on the defining relations") {
    CHECK(braid_equal(word(3, {1, 2, 1}), word(3, {2, 1, 2})));
    CHECK(braid_equal(word(4, {1, 3}), word(4, {3, 1})));
    CHECK_FALSE(braid_equal(word(2, {1}), word(2, {-1})));
}

TEST_CASE("homomorphisms: degree, permutation, linking") {
    auto inv = homomorphisms(word(2, {1, 1, 1}));
    CHECK(inv.degree == 3);
    CHECK(inv.perm == std::vector<int>{2, 1});
    CHECK(inv.linking[0][1] == 3);

    BraidWord d2 = full_twist(3);
    inv = homomorphisms(d2);
    CHECK(inv.degree == 6);
    CHECK(inv.perm == std::vector<int>{1, 2, 3});
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) CHECK(inv.linking[i][j] == 2);

    std::mt19937 rng(3);
    BraidWord w = random_word(rng, 5, 20);
    inv = homomorphisms(w * w.inverse());
    CHECK(inv.degree == 0);
    CHECK(inv.perm == std::vector<int>{1, 2, 3, 4, 5});
    for (auto& row : inv.linking)
        for (int v : row) CHECK(v == 0);
}

TEST_CASE("linking total of a conjugated power equals the exponent") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        int m = 5;
        BraidWord c = random_word(rng, m, 10);
        int k = 1 + trial % 3;
        BraidWord w = BraidWord(m, {2}).power(k).conjugated_by(c);
        auto inv = homomorphisms(w);
        int total = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) total += inv.linking[i][j];
        CHECK(total == k);
    }
}

TEST_CASE("half twists from combinatorial paths") {
    // adjacent punctures, empty shape -> sigma_3
    auto h = half_twist_word(HalfTwistPath(5, 3, 4));
    CHECK(h.letters == std::vector<int>{3});

    // (1,3) below -> s2 s1 s2^-1 ; above -> s2^-1 s1 s2
    auto below = half_twist_word(HalfTwistPath(3, 1, 3, {Pass::Below}));
    CHECK(below.letters == std::vector<int>{2, 1, -2});
    auto above = half_twist_word(HalfTwistPath(3, 1, 3, {Pass::Above}));
    CHECK(above.letters == std::vector<int>{-2, 1, 2});

    // permutation image is the endpoint transposition, degree 1
    for (const auto& w : {below, above}) {
        auto inv = homomorphisms(w);
        CHECK(inv.degree == 1);
        CHECK(inv.perm == std::vector<int>{3, 2, 1});
    }
    // below is the sigma-conjugate
    CHECK(braid_equal(below, BraidWord(3, {1}).conjugated_by(BraidWord(3, {2}))));

    // random mixed paths: degree 1 and endpoint transposition
    std::mt19937 rng(5);
    for (int t = 0; t < 40; ++t) {
        int m = 6;
        int p = 1 + t % 3, q = p + 2 + t % (m - p - 1);
        if (q > m) q = m;
        std::vector<Pass> tags;
        for (int k = 0; k < q - p - 1; ++k) tags.push_back(rng() & 1 ? Pass::Below : Pass::Above);
        auto inv = homomorphisms(half_twist_word(HalfTwistPath(m, p, q, tags)));
        CHECK(inv.degree == 1);
        std::vector<int> expect(m);
        for (int i = 0; i < m; ++i) expect[i] = i + 1;
        std::swap(expect[p - 1], expect[q - 1]);
        CHECK(inv.perm == expect);
    }
}

TEST_CASE("block twists and the center") {
    BraidWord d2 = block_full_twist(4, 1, 4);
    CHECK(braid_equal(d2, full_twist(4)));
    CHECK(d2.degree() == 12);
    // block half twist reverses the block
    auto p = permutation(block_half_twist(5, 2, 3));
    CHECK(p == std::vector<int>{1, 4, 3, 2, 5});
    // the full twist is central
    std::mt19937 rng(13);
    BraidWord w = random_word(rng, 4, 10);
    CHECK(braid_equal(w * full_twist(4), full_twist(4) * w));
}

TEST_CASE("permutation braids hit their target") {
    std::vector<int> target{3, 1, 4, 2};
    auto w = permutation_braid(target);
    CHECK(permutation(w) == target);
    for (int l : w.letters) CHECK(l > 0);
}

TEST_CASE("cable doubling is a homomorphism") {
    std::mt19937 rng(17);
    for (int t = 0; t < 12; ++t) {
        BraidWord u = random_word(rng, 4, 8), v = random_word(rng, 4, 8);
        CHECK(braid_equal(cable_double(u * v), cable_double(u) * cable_double(v)));
    }
    // braid relation survives cabling
    CHECK(braid_equal(cable_double(word(3, {1, 2, 1})), cable_double(word(3, {2, 1, 2}))));
    // cabled word is "internal-twist free": ribbon pair linking is zero
    BraidWord w = random_word(rng, 4, 10);
    auto inv = homomorphisms(cable_double(w));
    for (int i = 1; i <= 4; ++i) CHECK(inv.linking[2 * i - 2][2 * i - 1] == 0);
}

TEST_CASE("full twist of the cable differs from cabled full twist by internal twists") {
    for (int m : {2, 3}) {
        BraidWord lhs = full_twist(2 * m);
        BraidWord rhs = cable_double(full_twist(m));
        for (int i = 1; i <= m; ++i) rhs *= BraidWord(2 * m, {2 * i - 1}).power(2);
        CHECK(braid_equal(lhs, rhs));
    }
}

TEST_CASE("internal twists transport through cabled words") {
    std::mt19937 rng(23);
    for (int t = 0; t < 10; ++t) {
        int m = 4;
        BraidWord w = random_word(rng, m, 8);
        auto perm = permutation(w);
        // ribbon starting at position i ends at position j with perm[j-1] == i
        for (int i = 1; i <= m; ++i) {
            int j = 0;
            for (int k = 1; k <= m; ++k)
                if (perm[k - 1] == i) { j = k; break; }
            BraidWord lhs = BraidWord(2 * m, {2 * j - 1}).power(2).conjugated_by(cable_double(w));
            BraidWord rhs = BraidWord(2 * m, {2 * i - 1}).power(2);
            CHECK(braid_equal(lhs, rhs));
        }
    }
}
