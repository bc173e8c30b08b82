#include "f1mono/grouptheory.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace f1mono {

Presentation Presentation::plain(int g, std::vector<std::vector<int>> rels) {
    Presentation p;
    for (int i = 1; i <= g; ++i) p.names.push_back("g" + std::to_string(i));
    p.relators = std::move(rels);
    return p;
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols != o.rows) throw std::invalid_argument("matrix shape mismatch");
    IntMatrix r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < o.cols; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

bool IntMatrix::is_diagonal() const {
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (i != j && at(i, j) != 0) return false;
    return true;
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) os << at(i, j) << (j + 1 == cols ? "" : " ");
        os << "\n";
    }
    return os.str();
}

mpz_class det(const IntMatrix& M) {
    if (M.rows != M.cols) throw std::invalid_argument("det of non-square matrix");
    // fraction-free Gaussian elimination (Bareiss)
    IntMatrix A = M;
    const int n = A.rows;
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (A.at(k, k) == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (A.at(i, k) != 0) { swap_row = i; break; }
            if (swap_row < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(A.at(k, j), A.at(swap_row, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                A.at(i, j) = (A.at(i, j) * A.at(k, k) - A.at(i, k) * A.at(k, j)) / prev;
        prev = A.at(k, k);
    }
    return sign * A.at(n - 1, n - 1);
}

SmithResult smith_normal_form(const IntMatrix& M) {
    SmithResult res;
    res.D = M;
    res.U = IntMatrix::identity(M.rows);
    res.V = IntMatrix::identity(M.cols);
    IntMatrix& D = res.D;
    IntMatrix& U = res.U;
    IntMatrix& V = res.V;
    const int n = std::min(M.rows, M.cols);

    auto swap_rows = [&](int i, int j) {
        if (i == j) return;
        for (int c = 0; c < D.cols; ++c) std::swap(D.at(i, c), D.at(j, c));
        for (int c = 0; c < U.cols; ++c) std::swap(U.at(i, c), U.at(j, c));
    };
    auto swap_cols = [&](int i, int j) {
        if (i == j) return;
        for (int r = 0; r < D.rows; ++r) std::swap(D.at(r, i), D.at(r, j));
        for (int r = 0; r < V.rows; ++r) std::swap(V.at(r, i), V.at(r, j));
    };
    auto add_row = [&](int dst, int src, const mpz_class& f) {  // row dst += f * row src
        for (int c = 0; c < D.cols; ++c) D.at(dst, c) += f * D.at(src, c);
        for (int c = 0; c < U.cols; ++c) U.at(dst, c) += f * U.at(src, c);
    };
    auto add_col = [&](int dst, int src, const mpz_class& f) {
        for (int r = 0; r < D.rows; ++r) D.at(r, dst) += f * D.at(r, src);
        for (int r = 0; r < V.rows; ++r) V.at(r, dst) += f * V.at(r, src);
    };
    auto negate_row = [&](int i) {
        for (int c = 0; c < D.cols; ++c) D.at(i, c) = -D.at(i, c);
        for (int c = 0; c < U.cols; ++c) U.at(i, c) = -U.at(i, c);
    };

    auto dot_row = [&](int i, int j, int c0) {
        mpz_class s = 0;
        for (int c = c0; c < D.cols; ++c) s += D.at(i, c) * D.at(j, c);
        return s;
    };
    // Lagrange-style size reduction of row i against rows [lo, hi); keeps the
    // intermediate entries from the classical exponential swell.
    auto reduce_row = [&](int i, int lo, int hi, int c0) {
        bool improved = true;
        int guard = 0;
        while (improved && guard++ < 60) {
            improved = false;
            for (int j = lo; j < hi; ++j) {
                if (j == i) continue;
                mpz_class norm = dot_row(j, j, c0);
                if (norm == 0) continue;
                mpz_class dot = dot_row(i, j, c0);
                mpz_class q, num = 2 * dot + norm, den = 2 * norm;
                mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
                if (q != 0) {
                    add_row(i, j, -q);
                    improved = true;
                }
            }
        }
    };
    auto mutual_reduce = [&](int lo, int c0, int passes) {
        for (int s = 0; s < passes; ++s)
            for (int i = lo; i < D.rows; ++i) reduce_row(i, lo, D.rows, c0);
    };

    for (int t = 0; t < n; ++t) {
        mutual_reduce(t, t, 2);
        while (true) {
            int pi = -1, pj = -1;
            mpz_class best = 0;
            for (int i = t; i < D.rows; ++i)
                for (int j = t; j < D.cols; ++j) {
                    if (D.at(i, j) == 0) continue;
                    mpz_class a = abs(D.at(i, j));
                    if (pi < 0 || a < best) {
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) break;
            swap_rows(t, pi);
            swap_cols(t, pj);
            bool redo = false;
            for (int i = t + 1; i < D.rows && !redo; ++i) {
                while (D.at(i, t) != 0) {
                    mpz_class q;
                    mpz_fdiv_q(q.get_mpz_t(), D.at(i, t).get_mpz_t(), D.at(t, t).get_mpz_t());
                    add_row(i, t, -q);
                    if (D.at(i, t) != 0) {  // remainder beats the pivot
                        swap_rows(t, i);
                        redo = true;
                        break;
                    }
                    reduce_row(i, t + 1, i, t + 1);  // only against cleared rows
                }
            }
            if (redo) continue;
            mutual_reduce(t + 1, t + 1, 1);
            for (int j = t + 1; j < D.cols && !redo; ++j) {
                if (D.at(t, j) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), D.at(t, j).get_mpz_t(), D.at(t, t).get_mpz_t());
                add_col(j, t, -q);
                if (D.at(t, j) != 0) {
                    swap_cols(t, j);
                    redo = true;
                }
            }
            if (redo) continue;
            bool fixed = true;
            for (int i = t + 1; i < D.rows && fixed; ++i)
                for (int j = t + 1; j < D.cols && fixed; ++j)
                    if (D.at(i, j) % D.at(t, t) != 0) {
                        add_row(t, i, 1);
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (D.at(t, t) < 0) negate_row(t);
    }
    return res;
}

AbelianInvariants cokernel_invariants(const IntMatrix& M) {
    AbelianInvariants inv;
    if (M.cols == 0) return inv;
    if (M.rows == 0) {
        inv.free_rank = M.cols;
        return inv;
    }
    SmithResult s = smith_normal_form(M);
    int rank = 0;
    for (int t = 0; t < std::min(M.rows, M.cols); ++t) {
        const mpz_class& d = s.D.at(t, t);
        if (d == 0) continue;
        ++rank;
        if (d > 1) inv.torsion.push_back(d);
    }
    inv.free_rank = M.cols - rank;
    std::sort(inv.torsion.begin(), inv.torsion.end());
    return inv;
}

IntMatrix relator_exponent_matrix(const Presentation& p) {
    IntMatrix M(static_cast<int>(p.relators.size()), p.generators());
    for (size_t i = 0; i < p.relators.size(); ++i)
        for (int l : p.relators[i]) M.at(static_cast<int>(i), std::abs(l) - 1) += (l > 0 ? 1 : -1);
    return M;
}

AbelianInvariants abelianization(const Presentation& p) {
    return cokernel_invariants(relator_exponent_matrix(p));
}

std::string AbelianInvariants::str() const {
    std::ostringstream os;
    if (free_rank == 0 && torsion.empty()) return "1";
    bool first = true;
    if (free_rank > 0) {
        os << "Z";
        if (free_rank > 1) os << "^" << free_rank;
        first = false;
    }
    for (const auto& d : torsion) {
        if (!first) os << " x ";
        os << "Z_" << d;
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------

Perm Perm::identity(int n) {
    Perm p;
    p.img.resize(static_cast<size_t>(n));
    std::iota(p.img.begin(), p.img.end(), 0);
    return p;
}

Perm Perm::transposition(int n, int a, int b) {
    Perm p = identity(n);
    std::swap(p.img[static_cast<size_t>(a - 1)], p.img[static_cast<size_t>(b - 1)]);
    return p;
}

Perm Perm::operator*(const Perm& o) const {
    Perm r;
    r.img.resize(img.size());
    for (size_t i = 0; i < img.size(); ++i) r.img[i] = o.img[static_cast<size_t>(img[i])];
    return r;
}

Perm Perm::inverse() const {
    Perm r;
    r.img.resize(img.size());
    for (size_t i = 0; i < img.size(); ++i) r.img[static_cast<size_t>(img[i])] = static_cast<int>(i);
    return r;
}

bool Perm::is_identity() const {
    for (size_t i = 0; i < img.size(); ++i)
        if (img[i] != static_cast<int>(i)) return false;
    return true;
}

Perm perm_of_word(const std::vector<int>& word, const std::vector<Perm>& assignment) {
    if (assignment.empty()) throw std::invalid_argument("empty assignment");
    Perm r = Perm::identity(assignment[0].degree());
    for (int l : word) {
        const Perm& g = assignment[static_cast<size_t>(std::abs(l) - 1)];
        r = r * (l > 0 ? g : g.inverse());
    }
    return r;
}

bool is_transitive(const std::vector<Perm>& gens, int degree) {
    if (degree == 0) return true;
    std::vector<char> seen(static_cast<size_t>(degree), 0);
    std::deque<int> q{0};
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (const Perm& g : gens) {
            int y = g.img[static_cast<size_t>(x)];
            if (!seen[static_cast<size_t>(y)]) {
                seen[static_cast<size_t>(y)] = 1;
                ++count;
                q.push_back(y);
            }
            int z = g.inverse().img[static_cast<size_t>(x)];
            if (!seen[static_cast<size_t>(z)]) {
                seen[static_cast<size_t>(z)] = 1;
                ++count;
                q.push_back(z);
            }
        }
    }
    return count == degree;
}

mpz_class permutation_group_order(const std::vector<Perm>& gens, int degree) {
    std::vector<Perm> seed;
    for (const Perm& g : gens)
        if (!g.is_identity()) seed.push_back(g);
    if (seed.empty()) return 1;

    auto moved_point = [&](const Perm& g) {
        for (int x = 0; x < degree; ++x)
            if (g.img[static_cast<size_t>(x)] != x) return x;
        return -1;
    };
    auto orbit_map = [&](const std::vector<Perm>& S, int b) {
        std::map<int, Perm> T;
        T.emplace(b, Perm::identity(degree));
        std::deque<int> q{b};
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (const Perm& g : S) {
                int y = g.img[static_cast<size_t>(x)];
                if (!T.count(y)) {
                    T.emplace(y, T.at(x) * g);
                    q.push_back(y);
                }
            }
        }
        return T;
    };

    // cumulative stabilizer-chain generating sets: S[l] generates G^(l)
    std::vector<int> base{moved_point(seed.front())};
    std::vector<std::vector<Perm>> S{seed};

    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t l = 0; l < S.size() && !changed; ++l) {
            auto T = orbit_map(S[l], base[l]);
            for (auto it = T.begin(); it != T.end() && !changed; ++it) {
                for (const Perm& g : S[l]) {
                    int y = g.img[static_cast<size_t>(it->first)];
                    Perm schreier = it->second * g * T.at(y).inverse();
                    // sift through deeper levels
                    Perm h = schreier;
                    size_t i = l + 1;
                    while (!h.is_identity()) {
                        if (i >= S.size()) {
                            base.push_back(moved_point(h));
                            S.emplace_back();
                        }
                        auto Ti = orbit_map(S[i], base[i]);
                        int z = h.img[static_cast<size_t>(base[i])];
                        auto zt = Ti.find(z);
                        if (zt == Ti.end()) {
                            for (size_t k = l + 1; k <= i; ++k) S[k].push_back(h);
                            changed = true;
                            break;
                        }
                        h = h * zt->second.inverse();
                        ++i;
                    }
                    if (changed) break;
                }
            }
        }
    }

    mpz_class order = 1;
    for (size_t l = 0; l < S.size(); ++l)
        order *= static_cast<long>(orbit_map(S[l], base[l]).size());
    return order;
}

mpz_class factorial(int n) {
    mpz_class r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

PermQuotientReport check_perm_quotient(const Presentation& p, const std::vector<Perm>& assignment) {
    if (static_cast<int>(assignment.size()) != p.generators())
        throw std::invalid_argument("assignment size mismatch");
    PermQuotientReport rep;
    rep.relators_hold = true;
    for (size_t i = 0; i < p.relators.size(); ++i) {
        if (!perm_of_word(p.relators[i], assignment).is_identity()) {
            rep.relators_hold = false;
            rep.first_violated_relator = static_cast<int>(i);
            break;
        }
    }
    int degree = assignment.empty() ? 0 : assignment[0].degree();
    rep.transitive = is_transitive(assignment, degree);
    rep.image_order = permutation_group_order(assignment, degree);
    rep.full_symmetric = (rep.image_order == factorial(degree));
    return rep;
}

std::string PermQuotientReport::str() const {
    std::ostringstream os;
    os << "relators "
       << (relators_hold ? "hold" : ("violated at #" + std::to_string(first_violated_relator)))
       << ", " << (transitive ? "transitive" : "intransitive") << ", image order " << image_order
       << (full_symmetric ? " (full symmetric group)" : "");
    return os.str();
}

// ---------------------------------------------------------------------------
// Todd-Coxeter (HLT with coincidence processing)

namespace {

constexpr long long kUndef = -1;

struct Enumerator {
    int g = 0;
    std::vector<std::vector<long long>> tab;  // 2g columns per coset
    std::vector<long long> uf;
    std::deque<std::pair<long long, long long>> coincidences;
    long long live = 0;
    long long defined = 0;
    long long ceiling = 0;

    static int col(int letter) { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }
    static int inv_col(int c) { return c ^ 1; }

    long long rep(long long c) {
        while (uf[static_cast<size_t>(c)] != c) {
            uf[static_cast<size_t>(c)] = uf[static_cast<size_t>(uf[static_cast<size_t>(c)])];
            c = uf[static_cast<size_t>(c)];
        }
        return c;
    }

    long long define(long long c, int column) {
        if (defined + 1 > ceiling) return kUndef;
        long long n = static_cast<long long>(tab.size());
        tab.emplace_back(2 * g, kUndef);
        uf.push_back(n);
        ++live;
        ++defined;
        tab[static_cast<size_t>(c)][static_cast<size_t>(column)] = n;
        tab[static_cast<size_t>(n)][static_cast<size_t>(inv_col(column))] = c;
        return n;
    }

    void set_arrow(long long c, int column, long long d) {
        tab[static_cast<size_t>(c)][static_cast<size_t>(column)] = d;
        long long back = tab[static_cast<size_t>(d)][static_cast<size_t>(inv_col(column))];
        if (back == kUndef) {
            tab[static_cast<size_t>(d)][static_cast<size_t>(inv_col(column))] = c;
        } else if (rep(back) != rep(c)) {
            coincidences.emplace_back(back, c);
        }
    }

    void process_coincidences() {
        while (!coincidences.empty()) {
            auto [x, y] = coincidences.front();
            coincidences.pop_front();
            x = rep(x);
            y = rep(y);
            if (x == y) continue;
            if (x > y) std::swap(x, y);
            uf[static_cast<size_t>(y)] = x;
            --live;
            for (int cidx = 0; cidx < 2 * g; ++cidx) {
                long long d = tab[static_cast<size_t>(y)][static_cast<size_t>(cidx)];
                if (d == kUndef) continue;
                d = rep(d);
                long long mine = tab[static_cast<size_t>(x)][static_cast<size_t>(cidx)];
                if (mine == kUndef) {
                    tab[static_cast<size_t>(x)][static_cast<size_t>(cidx)] = d;
                    long long back = tab[static_cast<size_t>(d)][static_cast<size_t>(inv_col(cidx))];
                    if (back == kUndef)
                        tab[static_cast<size_t>(d)][static_cast<size_t>(inv_col(cidx))] = x;
                    else if (rep(back) != x)
                        coincidences.emplace_back(back, x);
                } else if (rep(mine) != d) {
                    coincidences.emplace_back(mine, d);
                }
            }
        }
    }

    long long image(long long c, int letter) {
        long long d = tab[static_cast<size_t>(c)][static_cast<size_t>(col(letter))];
        return d == kUndef ? kUndef : rep(d);
    }

    bool scan_and_fill(long long c, const std::vector<int>& word) {
        if (word.empty()) return true;
        long long f = rep(c), b = rep(c);
        int i = 0, j = static_cast<int>(word.size()) - 1;
        while (true) {
            while (i <= j) {
                long long next = image(f, word[static_cast<size_t>(i)]);
                if (next == kUndef) break;
                f = next;
                ++i;
            }
            if (i > j) {
                if (f != b) {
                    coincidences.emplace_back(f, b);
                    process_coincidences();
                }
                return true;
            }
            while (j >= i) {
                long long prev = image(b, -word[static_cast<size_t>(j)]);
                if (prev == kUndef) break;
                b = prev;
                --j;
            }
            if (j < i) {
                coincidences.emplace_back(f, b);
                process_coincidences();
                return true;
            }
            if (i == j) {
                set_arrow(f, col(word[static_cast<size_t>(i)]), b);
                process_coincidences();
                return true;
            }
            long long n = define(f, col(word[static_cast<size_t>(i)]));
            if (n == kUndef) return false;
            f = n;
            ++i;
        }
    }
};

}  // namespace

long long CosetTable::image(long long coset, int letter) const {
    int column = letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
    return table[static_cast<size_t>(coset)][static_cast<size_t>(column)];
}

CosetTable todd_coxeter(const Presentation& p,
                        const std::vector<std::vector<int>>& subgroup_generators,
                        long long max_cosets) {
    Enumerator en;
    en.g = p.generators();
    en.ceiling = std::max<long long>(max_cosets, 1);
    en.tab.emplace_back(2 * en.g, kUndef);
    en.uf.push_back(0);
    en.live = 1;
    en.defined = 1;

    CosetTable out;
    out.generators = en.g;

    bool overflow = false;
    for (const auto& w : subgroup_generators)
        if (!en.scan_and_fill(0, w)) { overflow = true; break; }

    if (!overflow) {
        for (long long c = 0; c < static_cast<long long>(en.tab.size()); ++c) {
            if (en.rep(c) != c) continue;
            for (const auto& w : p.relators) {
                if (!en.scan_and_fill(c, w)) { overflow = true; break; }
                if (en.rep(c) != c) break;
            }
            if (overflow) break;
        }
    }

    out.max_defined = en.defined;
    if (overflow) {
        out.complete = false;
        out.cosets = en.live;
        return out;
    }

    std::vector<long long> number(en.tab.size(), kUndef);
    long long next = 0;
    for (long long c = 0; c < static_cast<long long>(en.tab.size()); ++c)
        if (en.rep(c) == c) number[static_cast<size_t>(c)] = next++;
    out.cosets = next;
    out.table.assign(static_cast<size_t>(next), std::vector<long long>(2 * en.g, kUndef));
    out.complete = true;
    for (long long c = 0; c < static_cast<long long>(en.tab.size()); ++c) {
        if (en.rep(c) != c) continue;
        for (int cidx = 0; cidx < 2 * en.g; ++cidx) {
            long long d = en.tab[static_cast<size_t>(c)][static_cast<size_t>(cidx)];
            if (d == kUndef) {
                out.complete = false;
            } else {
                out.table[static_cast<size_t>(number[static_cast<size_t>(c)])]
                         [static_cast<size_t>(cidx)] = number[static_cast<size_t>(en.rep(d))];
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Reidemeister-Schreier

namespace {

struct SchreierData {
    std::vector<std::pair<long long, int>> tree;  // (parent, letter), root = (-1, 0)
    std::vector<std::vector<long long>> genindex;  // (coset, gen-1) -> 0 (tree) or 1-based
    long long count = 0;
};

SchreierData schreier_transversal(const CosetTable& t, TransversalStrategy strategy) {
    const long long N = t.cosets;
    const int g = t.generators;
    SchreierData sd;
    sd.tree.assign(static_cast<size_t>(N), {-1, 0});
    std::vector<char> seen(static_cast<size_t>(N), 0);
    std::deque<long long> q{0};
    seen[0] = 1;
    while (!q.empty()) {
        long long c;
        if (strategy == TransversalStrategy::Bfs) {
            c = q.front();
            q.pop_front();
        } else {
            c = q.back();
            q.pop_back();
        }
        for (int x = 1; x <= g; ++x) {
            for (int letter : {x, -x}) {
                long long d = t.image(c, letter);
                if (d >= 0 && !seen[static_cast<size_t>(d)]) {
                    seen[static_cast<size_t>(d)] = 1;
                    sd.tree[static_cast<size_t>(d)] = {c, letter};
                    q.push_back(d);
                }
            }
        }
    }
    sd.genindex.assign(static_cast<size_t>(N), std::vector<long long>(static_cast<size_t>(g), 0));
    long long idx = 0;
    for (long long c = 0; c < N; ++c) {
        for (int x = 1; x <= g; ++x) {
            long long d = t.image(c, x);
            bool tree_edge =
                (d >= 0) &&
                ((sd.tree[static_cast<size_t>(d)].first == c && sd.tree[static_cast<size_t>(d)].second == x) ||
                 (sd.tree[static_cast<size_t>(c)].first == d && sd.tree[static_cast<size_t>(c)].second == -x));
            if (!tree_edge) sd.genindex[static_cast<size_t>(c)][static_cast<size_t>(x - 1)] = ++idx;
        }
    }
    sd.count = idx;
    return sd;
}

template <typename Emit>
void rewrite_relator_from(const CosetTable& t, const SchreierData& sd, long long coset,
                          const std::vector<int>& w, Emit&& emit) {
    long long c = coset;
    for (int l : w) {
        if (l > 0) {
            long long s = sd.genindex[static_cast<size_t>(c)][static_cast<size_t>(l - 1)];
            if (s != 0) emit(s);
            c = t.image(c, l);
        } else {
            long long d = t.image(c, l);
            long long s = sd.genindex[static_cast<size_t>(d)][static_cast<size_t>(-l - 1)];
            if (s != 0) emit(-s);
            c = d;
        }
    }
}

}  // namespace

Presentation reidemeister_schreier(const Presentation& p, const CosetTable& t,
                                   TransversalStrategy strategy) {
    if (!t.complete) throw std::invalid_argument("reidemeister_schreier needs a complete table");
    SchreierData sd = schreier_transversal(t, strategy);
    Presentation out;
    for (long long i = 1; i <= sd.count; ++i) out.names.push_back("s" + std::to_string(i));
    for (long long c = 0; c < t.cosets; ++c) {
        for (const auto& w : p.relators) {
            std::vector<int> rel;
            rewrite_relator_from(t, sd, c, w, [&](long long s) {
                int l = static_cast<int>(s);
                if (!rel.empty() && rel.back() == -l)
                    rel.pop_back();
                else
                    rel.push_back(l);
            });
            if (!rel.empty()) out.relators.push_back(std::move(rel));
        }
    }
    return out;
}

SparseIntMatrix schreier_relator_matrix(const Presentation& p, const CosetTable& t,
                                        TransversalStrategy strategy) {
    if (!t.complete) throw std::invalid_argument("schreier_relator_matrix needs a complete table");
    SchreierData sd = schreier_transversal(t, strategy);
    SparseIntMatrix M;
    M.cols = static_cast<int>(sd.count);
    for (long long c = 0; c < t.cosets; ++c) {
        for (const auto& w : p.relators) {
            std::map<long long, long long> row;
            rewrite_relator_from(t, sd, c, w,
                                 [&](long long s) { row[std::llabs(s)] += (s > 0 ? 1 : -1); });
            std::vector<std::pair<int, long long>> entries;
            for (auto& [colidx, v] : row)
                if (v != 0) entries.emplace_back(static_cast<int>(colidx - 1), v);
            if (!entries.empty()) M.rows.push_back(std::move(entries));
        }
    }
    return M;
}

std::optional<long long> modular_rank(const SparseIntMatrix& M, long long p, long long step_budget) {
    auto mod = [&](long long v) {
        long long r = v % p;
        return r < 0 ? r + p : r;
    };
    auto inv_mod = [&](long long a) {
        long long t0 = 0, t1 = 1, r0 = p, r1 = a;
        while (r1 != 0) {
            long long q = r0 / r1;
            t0 -= q * t1;
            std::swap(t0, t1);
            r0 -= q * r1;
            std::swap(r0, r1);
        }
        return mod(t0);
    };

    std::map<int, std::vector<std::pair<int, long long>>> pivots;
    long long steps = 0;
    long long rank = 0;
    for (const auto& raw : M.rows) {
        std::vector<std::pair<int, long long>> row;
        row.reserve(raw.size());
        for (auto& [c, v] : raw) {
            long long m = mod(v);
            if (m != 0) row.emplace_back(c, m);
        }
        while (!row.empty()) {
            if (step_budget >= 0 && ++steps > step_budget) return std::nullopt;
            int lead = row.front().first;
            auto it = pivots.find(lead);
            if (it == pivots.end()) {
                long long inv = inv_mod(row.front().second);
                for (auto& [c, v] : row) v = v * inv % p;
                pivots.emplace(lead, std::move(row));
                ++rank;
                break;
            }
            long long f = row.front().second;
            const auto& pr = it->second;
            std::vector<std::pair<int, long long>> merged;
            merged.reserve(row.size() + pr.size());
            size_t i = 0, j = 0;
            while (i < row.size() || j < pr.size()) {
                if (j >= pr.size() || (i < row.size() && row[i].first < pr[j].first)) {
                    merged.push_back(row[i++]);
                } else if (i >= row.size() || pr[j].first < row[i].first) {
                    long long v = mod(-(f * pr[j].second % p));
                    if (v != 0) merged.emplace_back(pr[j].first, v);
                    ++j;
                } else {
                    long long v = mod(row[i].second - f * pr[j].second % p);
                    if (v != 0) merged.emplace_back(row[i].first, v);
                    ++i;
                    ++j;
                }
            }
            row = std::move(merged);
        }
    }
    return rank;
}

}  // namespace f1mono
