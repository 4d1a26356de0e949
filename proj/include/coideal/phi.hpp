#pragma once

// The Phi^S(k,m) calculus: the defining recursion, colored schemes with
// plain and shifted renderings, (k,m)-regular sets, duality, spectrum, the
// extraction algorithm for right coideal subalgebras, and the Sigma-monoid
// analysis of the subalgebra generated by a single Phi^S(k,m).

#include <cstdint>
#include <set>
#include <sstream>

#include "coideal/pbw.hpp"

namespace coideal {

using IndexSet = std::set<int>;

namespace detail {
/// psi as a plain formula, defined for the boundary points 0 and 2n+1 that
/// appear in scheme arithmetic.
inline int psi_raw(int n, int i) { return 2 * n - i + 1; }
}  // namespace detail


inline std::uint64_t set_mask(const IndexSet& S, int k, int m) {
    std::uint64_t mask = 0;
    for (int s : S)
        if (k <= s && s < m) mask |= (std::uint64_t{1} << s);
    return mask;
}

/// Phi^S(k,m) = u[k,m] - (1-q^-2) sum_i alpha_km^{s_i} Phi^S(1+s_i,m) u[k,s_i]
/// over S cap [k, m-1] = {s_1 < ... < s_r}. The value depends on S only
/// through that intersection; zero values are legal.
inline ShuffleElement phi(const Engine& eng, const IndexSet& S, int k, int m) {
    const Bicharacter& bc = eng.bc();
    int n = bc.rank();
    if (k < 1 || m > 2 * n || k > m) throw std::out_of_range("phi: bad interval");
    std::uint64_t mask = set_mask(S, k, m);
    ShuffleElement cached;
    if (eng.phi_lookup(k, m, mask, cached)) return cached;

    ShuffleElement r = u_bracket(eng, k, m);
    LaurentScalar one_m_q2 = bc.one_scalar() - bc.q_scalar(-2);
    for (int s : S) {
        if (s < k || s >= m) continue;
        ShuffleElement tail = shuffle_product(bc, phi(eng, S, 1 + s, m), u_bracket(eng, k, s));
        r = sub(bc, r, scale(bc, tail, one_m_q2 * alpha_kms(bc, k, m, s)));
    }
    r.set_degree_tag(interval_constitution(n, k, m));
    eng.phi_store(k, m, mask, r);
    return r;
}

/// A Phi polynomial by its data; the stored set is already intersected with
/// [k, m-1].
struct PhiElement {
    IndexSet S;
    int k = 1, m = 1;

    PhiElement() = default;
    PhiElement(const IndexSet& S_, int k_, int m_) : k(k_), m(m_) {
        for (int s : S_)
            if (k <= s && s < m) S.insert(s);
    }

    ShuffleElement value(const Engine& eng) const { return phi(eng, S, k, m); }

    auto operator<=>(const PhiElement&) const = default;
};

inline std::string to_string(const PhiElement& p) {
    std::string s = "Phi^{";
    bool first = true;
    for (int x : p.S) {
        if (!first) s += ",";
        s += std::to_string(x);
        first = false;
    }
    s += "}(" + std::to_string(p.k) + "," + std::to_string(p.m) + ")";
    return s;
}

// ---------------------------------------------------------------------------
// Colored schemes and regular sets.

/// The black/white point diagram of a pair (S, [k,m]): point k-1 is white,
/// point m is black, an intermediate point i is black iff i is in S.
struct ColoredScheme {
    int n, k, m;
    IndexSet black_points;  // = (S cap [k,m-1]) plus m

    ColoredScheme(int n_, const IndexSet& S, int k_, int m_) : n(n_), k(k_), m(m_) {
        for (int s : S)
            if (k <= s && s < m) black_points.insert(s);
        black_points.insert(m);
    }

    bool on_scheme(int p) const { return k - 1 <= p && p <= m; }
    bool black(int p) const { return on_scheme(p) && black_points.count(p) > 0; }
    bool white(int p) const { return on_scheme(p) && black_points.count(p) == 0; }

    /// One-line rendering with index labels, o = white, * = black.
    std::string render_plain() const {
        std::ostringstream os;
        for (int p = k - 1; p <= m; ++p) {
            if (p > k - 1) os << " ";
            os << p << (black(p) ? "*" : "o");
        }
        return os.str();
    }

    /// Two-line shifted rendering pairing i with psi(i)-1; the point n
    /// appears twice. Falls back to the plain picture when the scheme has
    /// just one row (m <= n or k > n).
    std::string render_shifted() const {
        if (m <= n || k > n) return render_plain();
        std::ostringstream top, bot;
        auto cell = [&](std::ostringstream& os, int p, bool present) {
            std::string s = present ? (std::to_string(p) + (black(p) ? "*" : "o")) : "";
            os << s;
            for (std::size_t i = s.size(); i < 5; ++i) os << ' ';
        };
        // columns of top-only points (present when m > psi(k))
        for (int a = m; a > psi(n, k); --a) {
            cell(top, a, true);
            cell(bot, 0, false);
        }
        // paired columns: bottom j <-> top psi(j)-1
        for (int j = k - 1; j <= n; ++j) {
            int partner = detail::psi_raw(n, j) - 1;
            cell(top, partner, on_scheme(partner));
            cell(bot, j, true);
        }
        return top.str() + "\n" + bot.str();
    }
};

/// White (k,m)-regularity per the quantifier definition: for every i with
/// k-1 <= i < m and k <= psi(i) <= m+1, at least one of i, psi(i)-1 lies
/// outside S cup {k-1, m}. Every set is regular when m <= n or k > n.
inline bool is_white_regular(int n, const IndexSet& S, int k, int m) {
    if (k < 1 || m > 2 * n || k > m) throw std::out_of_range("is_white_regular: bad interval");
    if (m <= n || k > n) return true;
    auto in_su = [&](int p) {
        return p == k - 1 || p == m || (S.count(p) && k <= p && p <= m - 1);
    };
    for (int i = k - 1; i < m; ++i) {
        int pi = detail::psi_raw(n, i);
        if (!(k <= pi && pi <= m + 1)) continue;
        if (in_su(i) && in_su(pi - 1)) return false;
    }
    return true;
}

/// Black (k,m)-regularity: for every i with k <= i <= m and
/// k <= psi(i) <= m+1, at least one of i, psi(i)-1 lies in S minus {k-1, m}.
inline bool is_black_regular(int n, const IndexSet& S, int k, int m) {
    if (k < 1 || m > 2 * n || k > m) throw std::out_of_range("is_black_regular: bad interval");
    if (m <= n || k > n) return true;
    auto in_sm = [&](int p) { return S.count(p) && k <= p && p <= m - 1; };
    for (int i = k; i <= m; ++i) {
        int pi = detail::psi_raw(n, i);
        if (!(k <= pi && pi <= m + 1)) continue;
        if (!in_sm(i) && !in_sm(pi - 1)) return false;
    }
    return true;
}

inline bool is_regular(int n, const IndexSet& S, int k, int m) {
    return is_white_regular(n, S, k, m) || is_black_regular(n, S, k, m);
}

/// Shifted-scheme characterization of white regularity: no black column,
/// plus a white first complete column when m > psi(k). Used as a cross-check
/// of the quantifier form.
inline bool is_white_regular_scheme(int n, const IndexSet& S, int k, int m) {
    if (m <= n || k > n) return true;
    if (m == psi(n, k)) return false;
    ColoredScheme sc(n, S, k, m);
    for (int j = k - 1; j <= n; ++j) {
        int top = detail::psi_raw(n, j) - 1;
        if (!sc.on_scheme(top)) continue;
        if (sc.black(j) && sc.black(top)) return false;
    }
    if (m > psi(n, k) && !sc.white(psi(n, k))) return false;
    return true;
}

/// Shifted-scheme characterization of black regularity: no white column,
/// plus a black first complete column when m < psi(k).
inline bool is_black_regular_scheme(int n, const IndexSet& S, int k, int m) {
    if (m <= n || k > n) return true;
    if (m == psi(n, k)) return false;
    ColoredScheme sc(n, S, k, m);
    for (int j = k - 1; j <= n; ++j) {
        int top = detail::psi_raw(n, j) - 1;
        if (!sc.on_scheme(top)) continue;
        if (sc.white(j) && sc.white(top)) return false;
    }
    if (m < psi(n, k) && !sc.black(psi(n, m) - 1)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Duality.

/// The dual data of (S,k,m): T = complement of psi(S)-1 inside
/// [psi(m), psi(k)-1], paired with the interval (psi(m), psi(k)).
struct DualSet {
    IndexSet T;
    int k, m;
};

inline DualSet dual_set(int n, const IndexSet& S, int k, int m) {
    DualSet d{IndexSet{}, psi(n, m), psi(n, k)};
    IndexSet image;
    for (int s : S)
        if (k <= s && s < m) image.insert(psi(n, s) - 1);
    for (int a = psi(n, m); a <= psi(n, k) - 1; ++a)
        if (!image.count(a)) d.T.insert(a);
    return d;
}

/// For black (k,m)-regular S:
///   Phi^S(k,m) = (-1)^{m-k} q^{-2r} (prod_{m>=i>j>=k} p_ij^{-1})
///                Phi^T(psi(m), psi(k)),
/// where r = |T|.
inline LaurentScalar duality_constant(const Bicharacter& bc, const IndexSet& S, int k, int m) {
    int n = bc.rank();
    if (!is_black_regular(n, S, k, m))
        throw std::invalid_argument("duality_constant: set is not black regular");
    DualSet d = dual_set(n, S, k, m);
    int r = static_cast<int>(d.T.size());
    ParamMonomial prod = bc.q_mono(-2 * r);
    for (int i = k; i <= m; ++i)
        for (int j = k; j < i; ++j) prod = prod * bc.p(i, j).inverse();
    return bc.ring().reduce(
        LaurentScalar::from_monomial(prod, (m - k) % 2 == 0 ? 1 : -1));
}

// ---------------------------------------------------------------------------
// Spectrum.

/// For homogeneous a of the PBW shape a = sum_i F_i u[k,i] (degree one in
/// x_k, degree zero below k): the set {i : F_i != 0}.
inline IndexSet spectrum(const Engine& eng, const ShuffleElement& a, int k) {
    int n = eng.rank();
    if (k < 1 || k > n) throw std::out_of_range("spectrum: bad start index");
    auto d = a.degree(n);
    if (!d) throw std::invalid_argument("spectrum: element must be homogeneous");
    for (int i = 1; i < k; ++i)
        if (d->m[i - 1] != 0) throw std::invalid_argument("spectrum: degree below x_k is nonzero");
    if (d->m[k - 1] != 1) throw std::invalid_argument("spectrum: degree in x_k must be one");
    IndexSet out;
    for (const auto& term : pbw_decompose(eng, a)) {
        bool found = false;
        for (const auto& [sl, e] : term.monomial.factors) {
            if (sl.k == k) {
                if (e != 1 || found)
                    throw std::logic_error("spectrum: unexpected PBW shape");
                out.insert(sl.m);
                found = true;
            } else if (sl.k < k) {
                throw std::logic_error("spectrum: monomial outside A_{k+1} u[k,i]");
            }
        }
        if (!found) throw std::logic_error("spectrum: monomial misses the u[k,i] factor");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Extraction (the downward induction of the classification proof).

namespace detail {

template <class F>
using FieldShuffle = std::map<Word, typename F::El>;

template <class F>
FieldShuffle<F> to_field(const F& f, const ShuffleElement& a) {
    FieldShuffle<F> r;
    for (const auto& [w, c] : a.terms()) {
        auto el = f.from_scalar(c);
        if (!f.is_zero(el)) r[w] = el;
    }
    return r;
}

template <class F>
void field_add(const F& f, FieldShuffle<F>& a, const Word& w, const typename F::El& c) {
    auto it = a.find(w);
    if (it == a.end()) {
        if (!f.is_zero(c)) a.emplace(w, c);
        return;
    }
    it->second = f.add(it->second, c);
    if (f.is_zero(it->second)) a.erase(it);
}

template <class F>
FieldShuffle<F> field_mul(const Engine& eng, const F& f, const FieldShuffle<F>& a,
                          const FieldShuffle<F>& b) {
    const Bicharacter& bc = eng.bc();
    FieldShuffle<F> r;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            std::map<Word, LaurentScalar> mix;
            Word acc;
            word_shuffle(bc, wa, 0, wb, 0, acc, bc.one(), mix);
            auto cc = f.mul(ca, cb);
            for (const auto& [w, mono] : mix)
                field_add(f, r, w, f.mul(cc, f.from_scalar(mono)));
        }
    return r;
}

/// Coefficient of the pure monomial u[k,i] factor pattern, grouped by i:
/// for each PBW coordinate vector, collect the index of the u[k,.] factor.
template <class F>
std::map<int, std::vector<std::pair<std::size_t, typename F::El>>> group_by_uk(
    const BasisData<F>& basis, const std::vector<typename F::El>& coords, int k) {
    std::map<int, std::vector<std::pair<std::size_t, typename F::El>>> groups;
    for (std::size_t j = 0; j < basis.monomials.size(); ++j) {
        if (basis.field.is_zero(coords[j])) continue;
        int mi = -1;
        for (const auto& [sl, e] : basis.monomials[j].factors)
            if (sl.k == k) mi = sl.m;
        if (mi < 0) throw std::logic_error("extract_phi: monomial misses the u[k,i] factor");
        groups[mi].push_back({j, coords[j]});
    }
    return groups;
}

template <class F>
std::pair<IndexSet, ShuffleElement> extract_phi_impl(const Engine& eng, const F& f,
                                                     const ShuffleElement& c_in, int k, int m) {
    const Bicharacter& bc = eng.bc();
    int n = bc.rank();
    Constitution dkm = interval_constitution(n, k, m);
    auto d = c_in.degree(n);
    if (!d || !(*d == dkm))
        throw std::invalid_argument("extract_phi: degree is not [k:m]");

    auto basis = [&](const Constitution& deg) {
        if constexpr (std::is_same_v<F, CycloField>)
            return basis_c(eng, deg);
        else
            return basis_q(eng, deg);
    };

    auto top = basis(dkm);
    // locate the pure u[k,m] monomial
    std::size_t top_idx = top->monomials.size();
    for (std::size_t j = 0; j < top->monomials.size(); ++j)
        if (top->monomials[j].is_single_superletter() &&
            top->monomials[j].factors[0].first == SuperLetter{k, m})
            top_idx = j;
    if (top_idx == top->monomials.size()) throw std::logic_error("extract_phi: no u[k,m] monomial");

    auto coords0 = top->solver.solve(top->to_vector(c_in));
    if (!coords0) throw std::invalid_argument("extract_phi: element lies outside the algebra");
    if (f.is_zero((*coords0)[top_idx]))
        throw std::invalid_argument("extract_phi: leading PBW term is not u[k,m]");

    // normalize the leading coefficient to 1
    FieldShuffle<F> c = to_field(f, c_in);
    {
        auto inv = f.div(f.one(), (*coords0)[top_idx]);
        for (auto& [w, x] : c) x = f.mul(x, inv);
    }

    IndexSet S;
    int t = m;
    for (;;) {
        // residual r = c - Phi^S(k,m)
        FieldShuffle<F> resid = c;
        for (const auto& [w, x] : to_field(f, phi(eng, S, k, m)))
            field_add(f, resid, w, f.mul(x, f.sub(f.zero(), f.one())));
        if (resid.empty()) break;

        std::vector<typename F::El> rv(top->words.size(), f.zero());
        for (const auto& [w, x] : resid) rv[top->windex.at(w)] = x;
        auto rc = top->solver.solve(rv);
        if (!rc) throw std::logic_error("extract_phi: residual outside the algebra");
        auto groups = group_by_uk(*top, *rc, k);
        int l = -1;
        for (const auto& [i, g] : groups)
            if (i < t) l = std::max(l, i);
        if (l < 0) throw std::logic_error("extract_phi: residual does not shrink");

        // v = (id (x) pi_{kl})(Delta c), group parts dropped: for every
        // deconcatenation with right-leg degree [k:l], weight the left leg by
        // the u[k,l]-coordinate of the right leg.
        Constitution dkl = interval_constitution(n, k, l);
        auto bkl = basis(dkl);
        std::size_t ukl_idx = bkl->monomials.size();
        for (std::size_t j = 0; j < bkl->monomials.size(); ++j)
            if (bkl->monomials[j].is_single_superletter() &&
                bkl->monomials[j].factors[0].first == SuperLetter{k, l})
                ukl_idx = j;
        if (ukl_idx == bkl->monomials.size()) throw std::logic_error("extract_phi: no u[k,l]");

        std::map<Word, typename F::El> pi_cache;
        auto pi_of_word = [&](const Word& w) {
            auto it = pi_cache.find(w);
            if (it != pi_cache.end()) return it->second;
            std::vector<typename F::El> v(bkl->words.size(), f.zero());
            v[bkl->windex.at(w)] = f.one();
            auto coords = bkl->solver.reduce_coords(v);
            pi_cache.emplace(w, coords[ukl_idx]);
            return coords[ukl_idx];
        };

        FieldShuffle<F> v;
        for (const auto& [w, x] : c) {
            for (std::size_t cut = 0; cut <= w.size(); ++cut) {
                Word left(w.begin(), w.begin() + cut), right(w.begin() + cut, w.end());
                if (!(constitution_of(n, right) == dkl)) continue;
                auto piv = pi_of_word(right);
                if (f.is_zero(piv)) continue;
                field_add(f, v, left, f.mul(x, piv));
            }
        }

        // F_l as a field shuffle (for the projection nu_a)
        Constitution dlm = interval_constitution(n, 1 + l, m);
        FieldShuffle<F> Fl;
        for (const auto& [j, coeff] : groups.at(l)) {
            PBWMonomial rest = top->monomials[j];
            std::vector<std::pair<SuperLetter, int>> fac;
            for (const auto& [sl, e] : rest.factors)
                if (!(sl.k == k)) fac.push_back({sl, e});
            rest.factors = fac;
            ShuffleElement rest_val = evaluate(eng, rest);
            for (const auto& [w, cc] : rest_val.terms())
                field_add(f, Fl, w, f.mul(coeff, f.from_scalar(cc)));
        }
        if (Fl.empty()) throw std::logic_error("extract_phi: F_l vanished");

        // nu_a: coefficient extraction against the PBW decomposition of the
        // right tensor legs, normalized on the leading monomial of F_l.
        auto blm = basis(dlm);
        std::vector<typename F::El> flv(blm->words.size(), f.zero());
        for (const auto& [w, x] : Fl) flv[blm->windex.at(w)] = x;
        auto flc = blm->solver.solve(flv);
        if (!flc) throw std::logic_error("extract_phi: F_l outside the algebra");
        std::size_t lead_idx = blm->monomials.size();
        for (std::size_t j = 0; j < blm->monomials.size(); ++j) {
            if (f.is_zero((*flc)[j])) continue;
            if (lead_idx == blm->monomials.size() ||
                monomial_less(blm->monomials[lead_idx], blm->monomials[j]))
                lead_idx = j;
        }
        auto lam_norm = f.div(f.one(), (*flc)[lead_idx]);

        std::map<Word, typename F::El> nu_cache;
        auto nu_of_word = [&](const Word& w) {
            auto it = nu_cache.find(w);
            if (it != nu_cache.end()) return it->second;
            std::vector<typename F::El> vv(blm->words.size(), f.zero());
            vv[blm->windex.at(w)] = f.one();
            auto coords = blm->solver.reduce_coords(vv);
            auto val = f.mul(coords[lead_idx], lam_norm);
            nu_cache.emplace(w, val);
            return val;
        };

        FieldShuffle<F> wraw;
        for (const auto& [w, x] : c) {
            for (std::size_t cut = 0; cut <= w.size(); ++cut) {
                Word left(w.begin(), w.begin() + cut), right(w.begin() + cut, w.end());
                if (!(constitution_of(n, right) == dlm)) continue;
                auto nav = nu_of_word(right);
                if (f.is_zero(nav)) continue;
                field_add(f, wraw, left, f.mul(x, nav));
            }
        }

        // normalize w to leading coefficient 1 at u[k,l]
        std::vector<typename F::El> wv(bkl->words.size(), f.zero());
        for (const auto& [w, x] : wraw) {
            auto it = bkl->windex.find(w);
            if (it == bkl->windex.end())
                throw std::logic_error("extract_phi: w has wrong degree");
            wv[it->second] = x;
        }
        auto wc = bkl->solver.solve(wv);
        if (!wc || f.is_zero((*wc)[ukl_idx]))
            throw std::logic_error("extract_phi: w misses the leading term u[k,l]");
        auto winv = f.div(f.one(), (*wc)[ukl_idx]);
        for (auto& [w, x] : wraw) x = f.mul(x, winv);

        // c <- c - v * w
        FieldShuffle<F> vw = field_mul(eng, f, v, wraw);
        for (const auto& [w, x] : vw) field_add(f, c, w, f.sub(f.zero(), x));

        S.insert(l);
        t = l;
    }
    return {S, phi(eng, S, k, m)};
}

}  // namespace detail

/// Extraction of Prop.-5.5 type: from a homogeneous element c with leading
/// PBW term u[k,m] (k <= m < psi(k)) inside a right coideal subalgebra,
/// produce the subset S of its spectrum with Phi^S(k,m) in that subalgebra.
/// The projections pi_{kl} and nu_a follow the downward induction with l the
/// maximal index with F_l != 0.
inline std::pair<IndexSet, ShuffleElement> extract_phi(const Engine& eng, const ShuffleElement& c,
                                                       int k, int m) {
    int n = eng.rank();
    if (!(1 <= k && k <= m && m < psi(n, k)))
        throw std::out_of_range("extract_phi: need k <= m < psi(k)");
    if (eng.bc().ring().is_cyclotomic())
        return detail::extract_phi_impl(eng, CycloField{&eng.bc().ring()}, c, k, m);
    return detail::extract_phi_impl(eng, QqField{}, c, k, m);
}

// ---------------------------------------------------------------------------
// The Sigma monoid of U^S(k,m) and its indecomposables.

/// Generators [1+t:s] of the degree monoid of U^S(k,m): t runs over white
/// points (k-1 or unmarked interior), s over black ones (marked interior or
/// m), t < s.
struct SigmaMonoid {
    int n, k, m;
    std::vector<std::pair<int, int>> gens;  // (t, s) pairs

    Constitution gen_constitution(std::size_t i) const {
        return interval_constitution(n, gens[i].first + 1, gens[i].second);
    }
};

inline SigmaMonoid sigma_monoid(int n, const IndexSet& S, int k, int m) {
    ColoredScheme sc(n, S, k, m);
    SigmaMonoid mo{n, k, m, {}};
    std::vector<int> whites{k - 1}, blacks;
    for (int p = k; p <= m - 1; ++p) (sc.black(p) ? blacks : whites).push_back(p);
    blacks.push_back(m);
    for (int t : whites)
        for (int s : blacks)
            if (t < s) mo.gens.push_back({t, s});
    return mo;
}

namespace detail {

/// Membership of a nonzero constitution in the additive monoid generated by
/// the given constitutions.
inline bool in_monoid(const std::vector<Constitution>& gens, const Constitution& c,
                      std::map<Constitution, bool>& memo) {
    if (c.is_zero()) return false;
    auto it = memo.find(c);
    if (it != memo.end()) return it->second;
    memo[c] = false;  // guard
    bool ok = false;
    for (const auto& g : gens) {
        if (c == g) {
            ok = true;
            break;
        }
        auto rest = c.minus(g);
        if (rest && (rest->is_zero() ? false : in_monoid(gens, *rest, memo))) {
            ok = true;
            break;
        }
    }
    memo[c] = ok;
    return ok;
}

}  // namespace detail

/// Brute-force test: is the constitution decomposable as a sum of two or
/// more nonzero elements of the monoid?
inline bool monoid_decomposable(const std::vector<Constitution>& gens, const Constitution& c) {
    std::map<Constitution, bool> memo;
    for (const auto& g : gens) {
        auto rest = c.minus(g);
        if (rest && !rest->is_zero() && detail::in_monoid(gens, *rest, memo)) return true;
    }
    return false;
}

/// Closed-form indecomposability of [1+t:s] in Sigma for white regular S
/// (conditions (a)/(b)): either psi(1+t) is not a black point, or every
/// column between t and s is bicolored.
inline bool indecomposable_white(const ColoredScheme& sc, int t, int s) {
    int n = sc.n;
    int p = (1 + t <= 2 * n) ? detail::psi_raw(n, 1 + t) : -1;
    if (p < 0 || !sc.black(p)) return true;  // (a)
    for (int j = t; j <= s; ++j) {           // (b)
        int top = detail::psi_raw(n, j) - 1;
        if (sc.white(j) && sc.white(top)) return false;
    }
    return true;
}

/// Closed-form indecomposability for black regular S: either psi(1+s) is not
/// a white point, or every column between t and s is bicolored.
inline bool indecomposable_black(const ColoredScheme& sc, int t, int s) {
    int n = sc.n;
    int p = (1 + s <= 2 * n) ? detail::psi_raw(n, 1 + s) : -1;
    if (p < 0 || !sc.white(p)) return true;  // (a)
    for (int j = t; j <= s; ++j) {           // (b)
        int top = detail::psi_raw(n, j) - 1;
        if (sc.black(j) && sc.black(top)) return false;
    }
    return true;
}

/// Indecomposable generators of Sigma by the closed-form conditions; the set
/// must be (k,m)-regular (white form takes precedence when both hold).
inline std::vector<std::pair<int, int>> indecomposables_closed(int n, const IndexSet& S, int k,
                                                               int m) {
    if (!is_regular(n, S, k, m))
        throw std::invalid_argument("indecomposables_closed: set is not regular");
    ColoredScheme sc(n, S, k, m);
    bool white = is_white_regular(n, S, k, m);
    SigmaMonoid mo = sigma_monoid(n, S, k, m);
    std::vector<std::pair<int, int>> out;
    for (const auto& [t, s] : mo.gens)
        if (white ? indecomposable_white(sc, t, s) : indecomposable_black(sc, t, s))
            out.push_back({t, s});
    return out;
}

/// Brute-force indecomposables (any S, any m): generators whose constitution
/// is not a sum of two or more generators.
inline std::vector<std::pair<int, int>> indecomposables_brute(int n, const IndexSet& S, int k,
                                                              int m) {
    SigmaMonoid mo = sigma_monoid(n, S, k, m);
    std::vector<Constitution> gcs;
    for (std::size_t i = 0; i < mo.gens.size(); ++i) gcs.push_back(mo.gen_constitution(i));
    std::vector<std::pair<int, int>> out;
    std::set<Constitution> seen;
    for (std::size_t i = 0; i < mo.gens.size(); ++i) {
        if (seen.count(gcs[i])) continue;
        seen.insert(gcs[i]);
        if (!monoid_decomposable(gcs, gcs[i])) out.push_back(mo.gens[i]);
    }
    return out;
}

/// Simple roots of U^S(k,m) as canonical root intervals.
inline std::set<RootInterval> simple_roots_of_uskm(int n, const IndexSet& S, int k, int m) {
    std::set<RootInterval> out;
    for (const auto& [t, s] : indecomposables_closed(n, S, k, m))
        out.insert(RootInterval(n, t + 1, s));
    return out;
}

/// Theorem-9.7 generators of U^S(k,m): Phi^S(1+t,s) over the indecomposable
/// [1+t:s].
inline std::vector<PhiElement> generators_of_uskm(int n, const IndexSet& S, int k, int m) {
    std::vector<PhiElement> out;
    for (const auto& [t, s] : indecomposables_closed(n, S, k, m))
        out.push_back(PhiElement(S, t + 1, s));
    return out;
}

namespace detail {

inline std::vector<int> theta_from_intervals(int n, const std::set<RootInterval>& simple) {
    std::vector<int> theta(n, 0);
    for (const auto& r : simple)
        if (r.m < psi(n, r.k)) theta[r.k - 1] = std::max(theta[r.k - 1], r.length());
    return theta;
}

}  // namespace detail

/// Root sequence of U^S(k,m) by brute-force Sigma-indecomposable
/// enumeration; valid for any S (in particular S = empty with m = psi(k)).
inline std::vector<int> theta_of_uskm_brute(int n, const IndexSet& S, int k, int m) {
    std::set<RootInterval> simple;
    for (const auto& [t, s] : indecomposables_brute(n, S, k, m))
        simple.insert(RootInterval(n, t + 1, s));
    return detail::theta_from_intervals(n, simple);
}

/// Closed-form root sequence of U^S(k,m) in terms of the shifted scheme
/// (the white and black regular cases), after dualizing when m > psi(k).
inline std::vector<int> theta_of_uskm(int n, IndexSet S, int k, int m) {
    if (m == psi(n, k)) {
        // no set is (k, psi(k))-regular; the empty scheme is still meaningful
        if (set_mask(S, k, m) != 0)
            throw std::invalid_argument("theta_of_uskm: no regular set for m = psi(k)");
        return theta_of_uskm_brute(n, S, k, m);
    }
    if (m > psi(n, k)) {
        DualSet d = dual_set(n, S, k, m);
        S = d.T;
        k = d.k;
        m = d.m;
    }
    if (!is_regular(n, S, k, m)) throw std::invalid_argument("theta_of_uskm: set is not regular");
    ColoredScheme sc(n, S, k, m);
    std::vector<int> theta(n, 0);
    bool white = is_white_regular(n, S, k, m);
    for (int i = 1; i <= n; ++i) {
        int pi = psi(n, i);
        if (white) {
            if (!sc.white(i - 1)) {
                theta[i - 1] = 0;
            } else if (sc.black(pi)) {
                int a = -1;  // minimal t >= i with a white-white column
                for (int t = i; t <= n; ++t)
                    if (sc.white(t) && sc.white(psi(n, t) - 1)) {
                        a = t;
                        break;
                    }
                if (a < 0) throw std::logic_error("theta_of_uskm: no white-white column");
                theta[i - 1] = pi - a;
            } else {
                int b = i - 1;  // maximal black point in [i, psi(i))
                for (int s = i; s < pi && s <= m; ++s)
                    if (sc.black(s)) b = s;
                theta[i - 1] = b - i + 1;
            }
        } else {
            bool wl = sc.white(i - 1), bk = sc.black(pi);
            if (!wl && !bk) {
                theta[i - 1] = 0;
            } else if (!wl && bk) {
                int dpt = pi;  // minimal white point in [i, psi(i)), else psi(i)
                for (int s = i; s < pi; ++s)
                    if (sc.white(s)) {
                        dpt = s;
                        break;
                    }
                theta[i - 1] = pi - dpt;
            } else {
                int cpt = -1;  // minimal c >= i with a black-black column
                for (int t = i; t <= n; ++t)
                    if (sc.black(t) && sc.black(psi(n, t) - 1)) {
                        cpt = t;
                        break;
                    }
                if (cpt < 0) throw std::logic_error("theta_of_uskm: no black-black column");
                theta[i - 1] = pi - cpt;
            }
        }
    }
    return theta;
}

}  // namespace coideal
