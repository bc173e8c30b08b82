#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace f1mono {

// Letters of a free group word: +g / -g for the g-th generator (1-based).
// Kept freely reduced by every operation that produces one.
struct FreeGroupWord {
    int rank = 0;
    std::vector<int> letters;

    FreeGroupWord() = default;
    explicit FreeGroupWord(int rank_) : rank(rank_) {}
    static FreeGroupWord generator(int rank_, int g, int sign = 1);

    bool is_identity() const { return letters.empty(); }
    int length() const { return static_cast<int>(letters.size()); }

    void push(int letter);                       // push with cancellation
    void append(const FreeGroupWord& other);     // reduced concatenation
    FreeGroupWord inverse() const;
    FreeGroupWord conjugated_by(const FreeGroupWord& c) const;  // c * w * c^-1

    bool operator==(const FreeGroupWord& o) const {
        return rank == o.rank && letters == o.letters;
    }
    std::string str(const std::string& symbol = "x") const;
};

FreeGroupWord free_reduce(FreeGroupWord w);

// A word in the Artin generators of B_m. Letter +i / -i stands for
// sigma_i / sigma_i^-1, 1 <= i <= m-1.
struct BraidWord {
    int strands = 0;
    std::vector<int> letters;

    BraidWord() = default;
    explicit BraidWord(int m) : strands(m) {}
    BraidWord(int m, std::vector<int> ls) : strands(m), letters(std::move(ls)) {}

    int degree() const;  // signed letter count
    bool empty() const { return letters.empty(); }
    int length() const { return static_cast<int>(letters.size()); }

    BraidWord& operator*=(const BraidWord& o);
    friend BraidWord operator*(BraidWord a, const BraidWord& b) { a *= b; return a; }
    BraidWord inverse() const;
    BraidWord power(int e) const;
    BraidWord conjugated_by(const BraidWord& c) const;  // c * w * c^-1

    std::string str() const;  // "1 -2 1" serialization
};

// Cancel adjacent sigma_i sigma_i^-1 pairs (confluent, idempotent).
BraidWord free_reduce(BraidWord w);

// Permutation image, tracked as pos -> strand label (labels start = positions).
std::vector<int> permutation(const BraidWord& w);
bool is_pure(const BraidWord& w);

struct BraidInvariants {
    int degree = 0;
    std::vector<int> perm;                    // perm[p-1] = label at position p
    std::vector<std::vector<int>> linking;    // symmetric m x m, 1-based pairs at [i-1][j-1]
};

// Degree, permutation and pairwise linking (strand-label tracking) in one pass.
BraidInvariants homomorphisms(const BraidWord& w);

// Artin action on the free group F_m:
//   sigma_i:   x_i -> x_i x_{i+1} x_i^-1,  x_{i+1} -> x_i
//   sigma_i^-1: x_i -> x_{i+1},            x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
// Left action: artin_act(uv, g) == artin_act(u, artin_act(v, g)).
FreeGroupWord artin_act(const BraidWord& w, const FreeGroupWord& g);

// Equality through the faithful Artin representation.
bool braid_equal(const BraidWord& u, const BraidWord& v);
bool is_identity_braid(const BraidWord& w);

// Half-twist along a combinatorial path between punctures p < q on the real
// line. tags[k] says whether the path passes below or above the intermediate
// puncture p+1+k. Below-passage conjugates by sigma, above by sigma^-1.
enum class Pass : uint8_t { Below, Above };

struct HalfTwistPath {
    int strands = 0;
    int p = 0, q = 0;            // endpoints, 1-based, p < q
    std::vector<Pass> tags;      // size q - p - 1

    HalfTwistPath() = default;
    HalfTwistPath(int m, int p_, int q_, std::vector<Pass> tags_ = {});
    static HalfTwistPath band_below(int m, int p, int q);
    static HalfTwistPath band_above(int m, int p, int q);

    std::string str() const;
};

// W sigma_p W^-1 with W = T_{q-1} ... T_{p+1}, T_j = sigma_j (below) or
// sigma_j^-1 (above).
BraidWord half_twist_word(const HalfTwistPath& path);

// Positive half-twist of the consecutive block [p, p+len), reversing it.
BraidWord block_half_twist(int m, int p, int len);
BraidWord block_full_twist(int m, int p, int len);

// Center generator of B_m as (sigma_1 ... sigma_{m-1})^m.
BraidWord full_twist(int m);

// Any positive word whose permutation image equals target (pos -> label).
BraidWord permutation_braid(const std::vector<int>& target);

// 2-cabling B_m -> B_{2m}: strand i becomes the ribbon (2i-1, 2i).
BraidWord cable_double(const BraidWord& w);

}  // namespace f1mono
