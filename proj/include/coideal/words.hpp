#pragma once

// Words over the letters x_1..x_n with the extended indexing x_{n+r} = x_{n-r+1},
// constitutions (the Gamma^+ grading), standard (Lyndon-Shirshov) words with
// their unique standard bracketing, and root-interval arithmetic.

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace coideal {

using Word = std::vector<int>;  // letters in 1..n

/// psi(i) = 2n - i + 1; the involution identifying x_i with x_{psi(i)}.
inline int psi(int n, int i) {
    if (i < 1 || i > 2 * n) throw std::out_of_range("psi: index out of range");
    return 2 * n - i + 1;
}

/// Folds an extended index 1..2n to the letter 1..n it denotes.
inline int fold(int n, int i) {
    if (i < 1 || i > 2 * n) throw std::out_of_range("fold: index out of range");
    return i <= n ? i : 2 * n - i + 1;
}

/// Multiplicity vector over x_1..x_n (an element of Gamma^+).
struct Constitution {
    std::vector<long> m;

    Constitution() = default;
    explicit Constitution(int n) : m(n, 0) {}

    int rank() const { return static_cast<int>(m.size()); }
    long total() const {
        long s = 0;
        for (long v : m) s += v;
        return s;
    }
    bool is_zero() const { return total() == 0; }

    Constitution operator+(const Constitution& o) const {
        Constitution r = *this;
        for (std::size_t i = 0; i < m.size(); ++i) r.m[i] += o.m[i];
        return r;
    }

    /// Componentwise difference; nullopt when the result would leave Gamma^+.
    std::optional<Constitution> minus(const Constitution& o) const {
        Constitution r = *this;
        for (std::size_t i = 0; i < m.size(); ++i) {
            r.m[i] -= o.m[i];
            if (r.m[i] < 0) return std::nullopt;
        }
        return r;
    }

    auto operator<=>(const Constitution&) const = default;
};

inline Constitution constitution_of(int n, const Word& w) {
    Constitution c(n);
    for (int a : w) c.m[a - 1] += 1;
    return c;
}

/// Ascending word u(k,m) = x_k x_{k+1} ... x_m with extended indices folded.
inline Word u_word(int n, int k, int m) {
    if (k < 1 || m > 2 * n || k > m) throw std::out_of_range("u_word: bad interval");
    Word w;
    for (int i = k; i <= m; ++i) w.push_back(fold(n, i));
    return w;
}

/// Descending word u(m,k) = x_m x_{m-1} ... x_k.
inline Word u_word_desc(int n, int m, int k) {
    if (k < 1 || m > 2 * n || k > m) throw std::out_of_range("u_word_desc: bad interval");
    Word w;
    for (int i = m; i >= k; --i) w.push_back(fold(n, i));
    return w;
}

inline Constitution interval_constitution(int n, int k, int m) {
    return constitution_of(n, u_word(n, k, m));
}

// ---------------------------------------------------------------------------
// Lexicographic order with x_1 > x_2 > ... > x_n, priority left to right; a
// proper beginning of a word is greater than the word itself.

/// Returns <0, 0, >0 as u < v, u == v, u > v in the word order.
inline int compare_words(const Word& u, const Word& v) {
    std::size_t i = 0;
    for (; i < u.size() && i < v.size(); ++i) {
        if (u[i] != v[i]) return u[i] < v[i] ? 1 : -1;  // smaller index = bigger letter
    }
    if (u.size() == v.size()) return 0;
    return u.size() < v.size() ? 1 : -1;  // proper prefix is greater
}

/// Standard (Lyndon-Shirshov) word: vw > wv for every split into nonempty v,w.
inline bool is_standard(const Word& w) {
    if (w.empty()) throw std::invalid_argument("is_standard: empty word");
    for (std::size_t cut = 1; cut < w.size(); ++cut) {
        Word wv(w.begin() + cut, w.end());
        wv.insert(wv.end(), w.begin(), w.begin() + cut);
        if (compare_words(w, wv) <= 0) return false;
    }
    return true;
}

/// Binary bracketing tree; leaves carry letters.
struct BracketTree {
    int letter = 0;  // valid when leaf
    std::shared_ptr<BracketTree> left, right;

    bool is_leaf() const { return !left; }

    static std::shared_ptr<BracketTree> leaf(int a) {
        auto t = std::make_shared<BracketTree>();
        t->letter = a;
        return t;
    }
    static std::shared_ptr<BracketTree> node(std::shared_ptr<BracketTree> l,
                                             std::shared_ptr<BracketTree> r) {
        auto t = std::make_shared<BracketTree>();
        t->left = std::move(l);
        t->right = std::move(r);
        return t;
    }
};

inline std::string to_string(const BracketTree& t) {
    if (t.is_leaf()) return "x" + std::to_string(t.letter);
    return "[" + to_string(*t.left) + "," + to_string(*t.right) + "]";
}

/// The unique standard alignment of brackets: split u = vw with v, w standard
/// and v of minimal length, recursively.
inline std::shared_ptr<BracketTree> standard_bracketing(const Word& w) {
    if (!is_standard(w)) throw std::invalid_argument("standard_bracketing: word is not standard");
    if (w.size() == 1) return BracketTree::leaf(w[0]);
    for (std::size_t cut = 1; cut < w.size(); ++cut) {
        Word v(w.begin(), w.begin() + cut);
        Word rest(w.begin() + cut, w.end());
        if (is_standard(v) && is_standard(rest))
            return BracketTree::node(standard_bracketing(v), standard_bracketing(rest));
    }
    throw std::logic_error("standard word admits no standard factorization");
}

// ---------------------------------------------------------------------------
// Root intervals [k:m] = x_k + x_{k+1} + ... + x_m; [k:m] and [psi(m):psi(k)]
// denote the same constitution and the representative with m <= psi(k) is
// stored.

struct RootInterval {
    int k = 1, m = 1;

    RootInterval() = default;
    RootInterval(int n, int k_, int m_) {
        if (k_ < 1 || m_ > 2 * n || k_ > m_) throw std::out_of_range("RootInterval: bad interval");
        if (m_ > psi(n, k_)) {
            k = psi(n, m_);
            m = psi(n, k_);
        } else {
            k = k_;
            m = m_;
        }
    }

    int length() const { return m - k + 1; }
    Constitution constitution(int n) const { return interval_constitution(n, k, m); }

    auto operator<=>(const RootInterval&) const = default;
};

inline std::string to_string(const RootInterval& r) {
    return "[" + std::to_string(r.k) + ":" + std::to_string(r.m) + "]";
}

/// Chain decomposition of a target interval into parts, possibly psi-flipped:
/// returns k-1 = k_0 < k_1 < ... < k_r < m with each [1+k_i : k_{i+1}] equal
/// to one of the parts as a constitution. A chain is guaranteed to exist when
/// every part satisfies l <= m < psi(l); degenerate parts with m = psi(l) are
/// still searched.
inline std::optional<std::vector<int>> decompose_interval(int n, int k, int m,
                                                          std::vector<RootInterval> parts) {
    Constitution need = interval_constitution(n, k, m);
    Constitution have(n);
    for (const auto& p : parts) have = have + p.constitution(n);
    if (!(need == have)) throw std::invalid_argument("decompose_interval: constitution mismatch");

    // Depth-first search for a consecutive chain; each part may be used as-is
    // or psi-flipped.
    struct Rec {
        int n;
        bool run(int lo, int hi, std::vector<RootInterval>& rest, std::vector<int>& chain) {
            if (lo > hi) return rest.empty();
            for (std::size_t i = 0; i < rest.size(); ++i) {
                RootInterval p = rest[i];
                for (int flip = 0; flip < 2; ++flip) {
                    int a = flip ? psi(n, p.m) : p.k;
                    int b = flip ? psi(n, p.k) : p.m;
                    if (a == lo && b <= hi) {
                        std::vector<RootInterval> next = rest;
                        next.erase(next.begin() + static_cast<long>(i));
                        chain.push_back(b);
                        if (run(b + 1, hi, next, chain)) return true;
                        chain.pop_back();
                    }
                    if (p.k == psi(n, p.m)) break;  // flip is the identity
                }
            }
            return false;
        }
    } rec{n};

    std::vector<int> chain{k - 1};
    if (!rec.run(k, m, parts, chain)) return std::nullopt;
    return chain;
}

}  // namespace coideal
