#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace f1mono {

// ---------------------------------------------------------------------------
// finitely presented groups

struct GeneratorTag {
    int eps = 0, r = 0, k = 0, delta = 0;
    bool geometric = false;
};

enum class PresentationKind { Plain, Affine, Projective };

struct Presentation {
    std::vector<std::string> names;
    std::vector<GeneratorTag> tags;              // empty or one per generator
    std::vector<std::vector<int>> relators;      // words in +-(1-based indices)
    PresentationKind kind = PresentationKind::Plain;

    int generators() const { return static_cast<int>(names.size()); }
    static Presentation plain(int g, std::vector<std::vector<int>> rels);
};

// ---------------------------------------------------------------------------
// integer matrices and Smith normal form

struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<mpz_class> data;  // row-major

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0) {}
    mpz_class& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
    const mpz_class& at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }
    static IntMatrix identity(int n);
    IntMatrix operator*(const IntMatrix& o) const;
    bool is_diagonal() const;
    std::string str() const;
};

struct SmithResult {
    IntMatrix D, U, V;  // U * M * V = D, U and V unimodular
};

SmithResult smith_normal_form(const IntMatrix& M);
mpz_class det(const IntMatrix& M);

struct AbelianInvariants {
    int free_rank = 0;
    std::vector<mpz_class> torsion;  // invariant factors d1 | d2 | ..., each > 1

    bool operator==(const AbelianInvariants& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
    std::string str() const;  // "Z^2 x Z_3 x Z_6" style
};

// cokernel Z^cols / rowspace(M)
AbelianInvariants cokernel_invariants(const IntMatrix& M);
AbelianInvariants abelianization(const Presentation& p);
IntMatrix relator_exponent_matrix(const Presentation& p);

// ---------------------------------------------------------------------------
// permutations and the S_n quotient check

struct Perm {
    std::vector<int> img;  // 0-based images

    static Perm identity(int n);
    static Perm transposition(int n, int a, int b);  // 1-based points
    int degree() const { return static_cast<int>(img.size()); }
    Perm operator*(const Perm& o) const;  // apply *this first, then o
    Perm inverse() const;
    bool is_identity() const;
    bool operator==(const Perm& o) const { return img == o.img; }
    bool operator<(const Perm& o) const { return img < o.img; }
};

Perm perm_of_word(const std::vector<int>& word, const std::vector<Perm>& assignment);

mpz_class permutation_group_order(const std::vector<Perm>& gens, int degree);
bool is_transitive(const std::vector<Perm>& gens, int degree);
mpz_class factorial(int n);

struct PermQuotientReport {
    bool relators_hold = false;
    int first_violated_relator = -1;  // 0-based, -1 if none
    bool transitive = false;
    mpz_class image_order = 0;
    bool full_symmetric = false;
    std::string str() const;
};

PermQuotientReport check_perm_quotient(const Presentation& p, const std::vector<Perm>& assignment);

// ---------------------------------------------------------------------------
// coset enumeration (HLT with coincidence handling)

struct CosetTable {
    bool complete = false;
    long long cosets = 0;          // live cosets when complete
    long long max_defined = 0;     // high-water mark of definitions
    int generators = 0;
    // row c holds images of coset c under g_1, g_1^-1, g_2, g_2^-1, ...
    std::vector<std::vector<long long>> table;

    long long image(long long coset, int letter) const;  // letter in +-(1..g)
};

CosetTable todd_coxeter(const Presentation& p,
                        const std::vector<std::vector<int>>& subgroup_generators,
                        long long max_cosets);

// ---------------------------------------------------------------------------
// subgroup presentations

// Schreier transversal strategy; Bfs is the default, Dfs used for the
// transversal-independence spot check.
enum class TransversalStrategy { Bfs, Dfs };

Presentation reidemeister_schreier(const Presentation& p, const CosetTable& t,
                                   TransversalStrategy strategy = TransversalStrategy::Bfs);

// sparse matrix over Z for large Schreier relator systems
struct SparseIntMatrix {
    int cols = 0;
    std::vector<std::vector<std::pair<int, long long>>> rows;  // sorted (col, value)
};

SparseIntMatrix schreier_relator_matrix(const Presentation& p, const CosetTable& t,
                                        TransversalStrategy strategy = TransversalStrategy::Bfs);

// rank of M over GF(p); returns nullopt if the step budget is exhausted
std::optional<long long> modular_rank(const SparseIntMatrix& M, long long p,
                                      long long step_budget = -1);

}  // namespace f1mono
