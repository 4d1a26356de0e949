#pragma once

// Super-letters u[k,m] with k <= m < psi(k), the PBW basis of each
// homogeneous component (with root-of-unity heights), exact decomposition by
// linear solve against the evaluated basis, leading terms and the
// projections pi_{kl}.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "coideal/engine.hpp"

namespace coideal {

/// PBW generator u[k,m], k <= m < psi(k). The order is word-lexicographic on
/// u(k,m): smaller start index means bigger letter means bigger super-letter;
/// for equal starts the shorter word is a proper prefix and hence bigger.
struct SuperLetter {
    int k = 1, m = 1;

    bool operator==(const SuperLetter&) const = default;
    /// Super-letter order: [u] < [v] iff u < v as words.
    bool operator<(const SuperLetter& o) const {
        if (k != o.k) return k > o.k;
        return m > o.m;
    }
};

inline std::string to_string(const SuperLetter& s) {
    return "u[" + std::to_string(s.k) + "," + std::to_string(s.m) + "]";
}

inline std::vector<SuperLetter> super_letters(int n) {
    std::vector<SuperLetter> out;
    for (int k = 1; k <= n; ++k)
        for (int m = k; m < psi(n, k); ++m) out.push_back({k, m});
    std::sort(out.begin(), out.end());
    return out;
}

/// Restricted monotonous monomial: factors strictly increasing in the
/// super-letter order, exponents >= 1 (and < height in cyclotomic mode).
struct PBWMonomial {
    std::vector<std::pair<SuperLetter, int>> factors;

    bool operator==(const PBWMonomial&) const = default;

    Constitution constitution(int n) const {
        Constitution d(n);
        for (const auto& [sl, e] : factors)
            for (int i = 0; i < e; ++i) d = d + interval_constitution(n, sl.k, sl.m);
        return d;
    }

    bool is_single_superletter() const {
        return factors.size() == 1 && factors[0].second == 1;
    }

    /// Written sequence with multiplicity, ascending.
    std::vector<SuperLetter> letters() const {
        std::vector<SuperLetter> seq;
        for (const auto& [sl, e] : factors)
            for (int i = 0; i < e; ++i) seq.push_back(sl);
        return seq;
    }
};

/// Monomial order used for leading terms: left-to-right comparison of the
/// written ascending factor sequences; a proper prefix is greater.
inline bool monomial_less(const PBWMonomial& a, const PBWMonomial& b) {
    auto sa = a.letters(), sb = b.letters();
    for (std::size_t i = 0; i < sa.size() && i < sb.size(); ++i) {
        if (!(sa[i] == sb[i])) return sa[i] < sb[i];
    }
    if (sa.size() == sb.size()) return false;
    return sa.size() > sb.size();  // longer = smaller (prefix is greater)
}

inline std::string to_string(const PBWMonomial& m) {
    if (m.factors.empty()) return "1";
    std::string s;
    for (const auto& [sl, e] : m.factors) {
        if (!s.empty()) s += " ";
        s += to_string(sl);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Super-letter values.

/// Evaluates the defining bracketing of u[k,m] in the shuffle algebra:
/// left-normed for m < psi(k), right-normed for m > psi(k), and
/// beta [u[n+1,m], u[k,n]] with beta = -p(u(n+1,m),u(k,n))^{-1} when
/// m = psi(k).
inline ShuffleElement u_bracket(const Engine& eng, int k, int m) {
    const Bicharacter& bc = eng.bc();
    int n = bc.rank();
    if (k < 1 || m > 2 * n || k > m) throw std::out_of_range("u_bracket: bad interval");
    ShuffleElement cached;
    if (eng.ubracket_lookup(k, m, cached)) return cached;

    ShuffleElement r;
    if (k == m) {
        r = ShuffleElement::letter(bc, k);
    } else if (m < psi(n, k)) {
        r = ShuffleElement::letter(bc, k);
        for (int i = k + 1; i <= m; ++i) r = skew_bracket(bc, r, ShuffleElement::letter(bc, i));
    } else if (m > psi(n, k)) {
        r = ShuffleElement::letter(bc, m);
        for (int i = m - 1; i >= k; --i) r = skew_bracket(bc, ShuffleElement::letter(bc, i), r);
    } else {
        ShuffleElement u = u_bracket(eng, n + 1, m);
        ShuffleElement v = u_bracket(eng, k, n);
        ParamMonomial beta = bc.p_eval_intervals(n + 1, m, k, n).inverse();
        r = scale(bc, skew_bracket(bc, u, v), LaurentScalar::from_monomial(beta, -1));
    }
    r.set_degree_tag(interval_constitution(n, k, m));
    eng.ubracket_store(k, m, r);
    return r;
}

/// Height of the PBW generator u[k,m]: infinite in generic mode; at a
/// primitive t-th root of unity (t > 4) it is t when m = n or t is odd, and
/// t/2 otherwise.
inline std::optional<long> height(const Bicharacter& bc, int k, int m) {
    int n = bc.rank();
    if (!(1 <= k && k <= m && m < psi(n, k)))
        throw std::out_of_range("height: not a super-letter");
    if (!bc.ring().is_cyclotomic()) return std::nullopt;
    long t = bc.ring().order();
    if (m == n || t % 2 == 1) return t;
    return t / 2;
}

/// All restricted monotonous monomials of a given degree, in increasing
/// monomial order of the factor list enumeration.
inline std::vector<PBWMonomial> pbw_monomials(const Engine& eng, const Constitution& d) {
    const Bicharacter& bc = eng.bc();
    int n = bc.rank();
    std::vector<SuperLetter> sls = super_letters(n);
    std::vector<PBWMonomial> out;
    PBWMonomial cur;

    struct Rec {
        const Engine& eng;
        int n;
        const std::vector<SuperLetter>& sls;
        std::vector<PBWMonomial>& out;

        void run(std::size_t idx, const Constitution& rest, PBWMonomial& cur) {
            if (rest.is_zero()) {
                out.push_back(cur);
                return;
            }
            if (idx == sls.size()) return;
            run(idx + 1, rest, cur);  // skip this super-letter
            const SuperLetter sl = sls[idx];
            Constitution step = interval_constitution(n, sl.k, sl.m);
            std::optional<long> h = height(eng.bc(), sl.k, sl.m);
            Constitution left = rest;
            for (int e = 1;; ++e) {
                auto next = left.minus(step);
                if (!next) break;
                if (h && e >= *h) break;
                left = *next;
                cur.factors.push_back({sl, e});
                run(idx + 1, left, cur);
                cur.factors.pop_back();
            }
        }
    } rec{eng, n, sls, out};

    rec.run(0, d, cur);
    // deterministic order
    std::sort(out.begin(), out.end(), monomial_less);
    return out;
}

/// Shuffle value of a PBW monomial (factors multiplied in increasing order).
inline ShuffleElement evaluate(const Engine& eng, const PBWMonomial& m) {
    ShuffleElement r = ShuffleElement::unit(eng.bc());
    for (const auto& [sl, e] : m.factors) {
        ShuffleElement v = u_bracket(eng, sl.k, sl.m);
        for (int i = 0; i < e; ++i) r = shuffle_product(eng.bc(), r, v);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Per-degree basis data and exact solves.

namespace detail {

inline void enumerate_words_rec(int n, Constitution& rest, Word& acc, std::vector<Word>& out) {
    if (rest.total() == 0) {
        out.push_back(acc);
        return;
    }
    for (int a = 1; a <= n; ++a) {
        if (rest.m[a - 1] == 0) continue;
        rest.m[a - 1] -= 1;
        acc.push_back(a);
        enumerate_words_rec(n, rest, acc, out);
        acc.pop_back();
        rest.m[a - 1] += 1;
    }
}

inline std::vector<Word> enumerate_words(int n, const Constitution& d) {
    std::vector<Word> out;
    Word acc;
    Constitution rest = d;
    enumerate_words_rec(n, rest, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

template <class F>
struct BasisData {
    F field;
    std::vector<PBWMonomial> monomials;
    std::vector<Word> words;
    std::map<Word, std::size_t> windex;
    EchelonSolver<F> solver;

    BasisData(F f, std::size_t dim) : field(std::move(f)), solver(field, dim) {}

    std::vector<typename F::El> to_vector(const ShuffleElement& a) const {
        std::vector<typename F::El> v(words.size(), field.zero());
        for (const auto& [w, c] : a.terms()) {
            auto it = windex.find(w);
            if (it == windex.end()) throw std::invalid_argument("element outside the homogeneous component");
            v[it->second] = field.from_scalar(c);
        }
        return v;
    }
};

template <class F>
std::shared_ptr<const BasisData<F>> build_basis(const Engine& eng, const Constitution& d, F field) {
    std::vector<Word> words = detail::enumerate_words(eng.rank(), d);
    auto data = std::make_shared<BasisData<F>>(field, words.size());
    data->words = std::move(words);
    for (std::size_t i = 0; i < data->words.size(); ++i) data->windex[data->words[i]] = i;
    data->monomials = pbw_monomials(eng, d);
    for (const auto& m : data->monomials) {
        ShuffleElement v = evaluate(eng, m);
        if (!data->solver.add_basis(data->to_vector(v)))
            throw std::logic_error("PBW monomials are not linearly independent (engine bug)");
    }
    return data;
}

inline std::shared_ptr<const BasisData<QqField>> basis_q(const Engine& eng, const Constitution& d) {
    if (auto b = eng.basis_q_lookup(d)) return b;
    auto b = build_basis(eng, d, QqField{});
    eng.basis_q_store(d, b);
    return b;
}

inline std::shared_ptr<const BasisData<CycloField>> basis_c(const Engine& eng, const Constitution& d) {
    if (auto b = eng.basis_c_lookup(d)) return b;
    auto b = build_basis(eng, d, CycloField{&eng.bc().ring()});
    eng.basis_c_store(d, b);
    return b;
}

/// Coefficient of a PBW decomposition, an exact fraction of Laurent scalars
/// (den == 1 whenever the coefficient is itself a Laurent polynomial).
struct PBWCoeff {
    LaurentScalar num, den;

    bool is_laurent() const {
        return den.is_monomial() && den.single_term().first.is_one() &&
               den.single_term().second == 1;
    }
};

struct PBWTerm {
    PBWMonomial monomial;
    PBWCoeff coeff;
};

namespace detail {

inline PBWCoeff coeff_from(const RatFun& r) {
    if (auto l = r.to_laurent()) return {*l, LaurentScalar::constant(1, 1)};
    return {r.num_laurent(), r.den_laurent()};
}

inline PBWCoeff coeff_from(const LaurentScalar& s) { return {s, LaurentScalar::constant(1, 1)}; }

template <class F>
std::vector<PBWTerm> decompose_with(const BasisData<F>& basis, const ShuffleElement& a) {
    auto sol = basis.solver.solve(basis.to_vector(a));
    if (!sol) throw std::logic_error("element is not in the span of the PBW basis");
    std::vector<PBWTerm> out;
    for (std::size_t i = 0; i < basis.monomials.size(); ++i) {
        if (basis.field.is_zero((*sol)[i])) continue;
        out.push_back(PBWTerm{basis.monomials[i], coeff_from((*sol)[i])});
    }
    return out;
}

}  // namespace detail

/// Exact coordinates of a homogeneous element in the PBW basis of its degree.
inline std::vector<PBWTerm> pbw_decompose(const Engine& eng, const ShuffleElement& a) {
    auto d = a.degree(eng.rank());
    if (!d) throw std::invalid_argument("pbw_decompose: element must be homogeneous");
    if (eng.bc().ring().is_cyclotomic()) return detail::decompose_with(*basis_c(eng, *d), a);
    return detail::decompose_with(*basis_q(eng, *d), a);
}

/// Natural projection onto k u[k,l] with respect to the PBW basis. Elements
/// of a different degree project to zero.
inline LaurentScalar projection_pi(const Engine& eng, int k, int l, const ShuffleElement& a) {
    int n = eng.rank();
    if (!(1 <= k && k <= l && l < psi(n, k))) throw std::out_of_range("projection_pi: bad indices");
    auto d = a.degree(n);
    if (!d || !(*d == interval_constitution(n, k, l))) return LaurentScalar::zero();
    for (const auto& t : pbw_decompose(eng, a)) {
        if (t.monomial.is_single_superletter() && t.monomial.factors[0].first == SuperLetter{k, l}) {
            if (!t.coeff.is_laurent())
                throw std::logic_error("projection coefficient is not a Laurent polynomial");
            return t.coeff.num;
        }
    }
    return LaurentScalar::zero();
}

/// The maximal PBW monomial of a nonzero homogeneous element, with its
/// coefficient.
inline PBWTerm leading_term(const Engine& eng, const ShuffleElement& a) {
    auto terms = pbw_decompose(eng, a);
    if (terms.empty()) throw std::invalid_argument("leading_term: zero element");
    const PBWTerm* best = &terms[0];
    for (const auto& t : terms)
        if (monomial_less(best->monomial, t.monomial)) best = &t;
    return *best;
}

}  // namespace coideal
