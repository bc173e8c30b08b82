#include "f1mono/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace f1mono {

FreeGroupWord FreeGroupWord::generator(int rank_, int g, int sign) {
    if (g < 1 || g > rank_) throw std::invalid_argument("generator index out of range");
    FreeGroupWord w(rank_);
    w.letters.push_back(sign >= 0 ? g : -g);
    return w;
}

void FreeGroupWord::push(int letter) {
    if (!letters.empty() && letters.back() == -letter) {
        letters.pop_back();
    } else {
        letters.push_back(letter);
    }
}

void FreeGroupWord::append(const FreeGroupWord& other) {
    for (int l : other.letters) push(l);
}

FreeGroupWord FreeGroupWord::inverse() const {
    FreeGroupWord r(rank);
    r.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) r.letters.push_back(-*it);
    return r;
}

FreeGroupWord FreeGroupWord::conjugated_by(const FreeGroupWord& c) const {
    FreeGroupWord r = c;
    r.append(*this);
    r.append(c.inverse());
    return r;
}

std::string FreeGroupWord::str(const std::string& symbol) const {
    if (letters.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i) os << " ";
        os << symbol << std::abs(letters[i]);
        if (letters[i] < 0) os << "^-1";
    }
    return os.str();
}

FreeGroupWord free_reduce(FreeGroupWord w) {
    FreeGroupWord r(w.rank);
    for (int l : w.letters) r.push(l);
    return r;
}

int BraidWord::degree() const {
    int d = 0;
    for (int l : letters) d += (l > 0) ? 1 : -1;
    return d;
}

BraidWord& BraidWord::operator*=(const BraidWord& o) {
    if (strands == 0) strands = o.strands;
    if (o.strands != strands && o.strands != 0)
        throw std::invalid_argument("strand count mismatch");
    letters.insert(letters.end(), o.letters.begin(), o.letters.end());
    return *this;
}

BraidWord BraidWord::inverse() const {
    BraidWord r(strands);
    r.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) r.letters.push_back(-*it);
    return r;
}

BraidWord BraidWord::power(int e) const {
    if (e < 0) return inverse().power(-e);
    BraidWord r(strands);
    r.letters.reserve(letters.size() * e);
    for (int k = 0; k < e; ++k) r.letters.insert(r.letters.end(), letters.begin(), letters.end());
    return r;
}

BraidWord BraidWord::conjugated_by(const BraidWord& c) const {
    BraidWord r = c;
    r *= *this;
    r *= c.inverse();
    return r;
}

std::string BraidWord::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i) os << " ";
        os << letters[i];
    }
    return os.str();
}

BraidWord free_reduce(BraidWord w) {
    std::vector<int> out;
    out.reserve(w.letters.size());
    for (int l : w.letters) {
        if (!out.empty() && out.back() == -l) {
            out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    w.letters = std::move(out);
    return w;
}

std::vector<int> permutation(const BraidWord& w) {
    std::vector<int> label(w.strands);
    std::iota(label.begin(), label.end(), 1);
    for (int l : w.letters) {
        int i = std::abs(l);
        std::swap(label[i - 1], label[i]);
    }
    return label;
}

bool is_pure(const BraidWord& w) {
    auto p = permutation(w);
    for (int i = 0; i < w.strands; ++i)
        if (p[i] != i + 1) return false;
    return true;
}

BraidInvariants homomorphisms(const BraidWord& w) {
    BraidInvariants inv;
    inv.degree = w.degree();
    const int m = w.strands;
    std::vector<int> label(m);
    std::iota(label.begin(), label.end(), 1);
    inv.linking.assign(m, std::vector<int>(m, 0));
    for (int l : w.letters) {
        int i = std::abs(l);
        int s = l > 0 ? 1 : -1;
        int a = label[i - 1], b = label[i];
        inv.linking[a - 1][b - 1] += s;
        inv.linking[b - 1][a - 1] += s;
        std::swap(label[i - 1], label[i]);
    }
    inv.perm = std::move(label);
    return inv;
}

namespace {

// One Artin generator acting on a reduced word, output reduced.
FreeGroupWord act_letter(int letter, const FreeGroupWord& g) {
    const int i = std::abs(letter);
    FreeGroupWord out(g.rank);
    out.letters.reserve(g.letters.size() + 2);
    if (letter > 0) {
        for (int l : g.letters) {
            int a = std::abs(l);
            if (a == i) {
                if (l > 0) {  // x_i -> x_i x_{i+1} x_i^-1
                    out.push(i); out.push(i + 1); out.push(-i);
                } else {
                    out.push(i); out.push(-(i + 1)); out.push(-i);
                }
            } else if (a == i + 1) {  // x_{i+1} -> x_i
                out.push(l > 0 ? i : -i);
            } else {
                out.push(l);
            }
        }
    } else {
        for (int l : g.letters) {
            int a = std::abs(l);
            if (a == i) {  // x_i -> x_{i+1}
                out.push(l > 0 ? (i + 1) : -(i + 1));
            } else if (a == i + 1) {  // x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
                if (l > 0) {
                    out.push(-(i + 1)); out.push(i); out.push(i + 1);
                } else {
                    out.push(-(i + 1)); out.push(-i); out.push(i + 1);
                }
            } else {
                out.push(l);
            }
        }
    }
    return out;
}

}  // namespace

FreeGroupWord artin_act(const BraidWord& w, const FreeGroupWord& g) {
    if (g.rank != w.strands)
        throw std::invalid_argument("rank/strand mismatch in artin_act");
    FreeGroupWord cur = free_reduce(g);
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        cur = act_letter(*it, cur);
    return cur;
}

bool braid_equal(const BraidWord& u, const BraidWord& v) {
    if (u.strands != v.strands) return false;
    BraidWord d = free_reduce(u * v.inverse());
    return is_identity_braid(d);
}

bool is_identity_braid(const BraidWord& w) {
    if (w.letters.empty()) return true;
    if (w.degree() != 0) return false;
    if (!is_pure(w)) return false;
    for (int g = 1; g <= w.strands; ++g) {
        FreeGroupWord x = FreeGroupWord::generator(w.strands, g);
        if (!(artin_act(w, x) == x)) return false;
    }
    return true;
}

HalfTwistPath::HalfTwistPath(int m, int p_, int q_, std::vector<Pass> tags_)
    : strands(m), p(p_), q(q_), tags(std::move(tags_)) {
    if (p < 1 || q > m || p >= q) throw std::invalid_argument("bad half-twist endpoints");
    if (tags.empty()) tags.assign(static_cast<size_t>(q - p - 1), Pass::Below);
    if (static_cast<int>(tags.size()) != q - p - 1)
        throw std::invalid_argument("half-twist shape does not match intermediate punctures");
}

HalfTwistPath HalfTwistPath::band_below(int m, int p, int q) {
    return HalfTwistPath(m, p, q, std::vector<Pass>(static_cast<size_t>(q - p - 1), Pass::Below));
}

HalfTwistPath HalfTwistPath::band_above(int m, int p, int q) {
    return HalfTwistPath(m, p, q, std::vector<Pass>(static_cast<size_t>(q - p - 1), Pass::Above));
}

std::string HalfTwistPath::str() const {
    std::ostringstream os;
    os << "(" << p << "," << q << ")";
    if (!tags.empty()) {
        os << "[";
        for (size_t k = 0; k < tags.size(); ++k) os << (tags[k] == Pass::Below ? 'b' : 'a');
        os << "]";
    }
    return os.str();
}

BraidWord half_twist_word(const HalfTwistPath& path) {
    BraidWord w(path.strands);
    // W = T_{q-1} ... T_{p+1}, then sigma_p, then W^-1.
    for (int j = path.q - 1; j >= path.p + 1; --j) {
        bool below = path.tags[static_cast<size_t>(j - path.p - 1)] == Pass::Below;
        w.letters.push_back(below ? j : -j);
    }
    w.letters.push_back(path.p);
    for (int j = path.p + 1; j <= path.q - 1; ++j) {
        bool below = path.tags[static_cast<size_t>(j - path.p - 1)] == Pass::Below;
        w.letters.push_back(below ? -j : j);
    }
    return w;
}

BraidWord block_half_twist(int m, int p, int len) {
    BraidWord w(m);
    for (int k = 1; k < len; ++k)
        for (int j = p + k - 1; j >= p; --j) w.letters.push_back(j);
    return w;
}

BraidWord block_full_twist(int m, int p, int len) {
    BraidWord h = block_half_twist(m, p, len);
    return h * h;
}

BraidWord full_twist(int m) {
    BraidWord w(m);
    for (int k = 0; k < m; ++k)
        for (int i = 1; i < m; ++i) w.letters.push_back(i);
    return w;
}

BraidWord permutation_braid(const std::vector<int>& target) {
    const int m = static_cast<int>(target.size());
    std::vector<int> cur(m);
    std::iota(cur.begin(), cur.end(), 1);
    BraidWord w(m);
    // bubble the labels into target order with positive crossings
    for (int pos = 0; pos < m; ++pos) {
        int at = -1;
        for (int k = pos; k < m; ++k)
            if (cur[k] == target[pos]) { at = k; break; }
        if (at < 0) throw std::invalid_argument("not a permutation");
        for (int k = at; k > pos; --k) {
            w.letters.push_back(k);  // sigma_k swaps positions k, k+1 (1-based)
            std::swap(cur[k - 1], cur[k]);
        }
    }
    return w;
}

BraidWord cable_double(const BraidWord& w) {
    BraidWord r(2 * w.strands);
    r.letters.reserve(4 * w.letters.size());
    for (int l : w.letters) {
        int j = std::abs(l);
        if (l > 0) {
            r.letters.push_back(2 * j);
            r.letters.push_back(2 * j - 1);
            r.letters.push_back(2 * j + 1);
            r.letters.push_back(2 * j);
        } else {
            r.letters.push_back(-2 * j);
            r.letters.push_back(-(2 * j + 1));
            r.letters.push_back(-(2 * j - 1));
            r.letters.push_back(-2 * j);
        }
    }
    return r;
}

}  // namespace f1mono
