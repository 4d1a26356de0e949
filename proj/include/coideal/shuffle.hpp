#pragma once

// The quantum shuffle algebra Sh_tau(V): tensors are words over x_1..x_n,
// the product follows the braided shuffle rule, the braided coproduct is
// deconcatenation, and partial derivatives read off right tensor legs.
// Equality of ShuffleElements is equality in U_q^+ / u_q^+ since the Nichols
// algebra embeds in Sh_tau(V).

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "coideal/bicharacter.hpp"
#include "coideal/scalar.hpp"
#include "coideal/words.hpp"

namespace coideal {

/// Finitely supported map Word -> LaurentScalar with an optional homogeneity
/// tag. The tag survives on zero elements, where it cannot be recomputed.
class ShuffleElement {
public:
    using Terms = std::map<Word, LaurentScalar>;

    ShuffleElement() = default;

    static ShuffleElement zero() { return {}; }

    static ShuffleElement unit(const Bicharacter& bc) {
        ShuffleElement r;
        r.deg_ = Constitution(bc.rank());
        r.terms_[Word{}] = bc.one_scalar();
        return r;
    }

    /// Single letter (x_i); extended indices are folded.
    static ShuffleElement letter(const Bicharacter& bc, int i) {
        int a = fold(bc.rank(), i);
        ShuffleElement r;
        r.deg_ = Constitution(bc.rank());
        r.deg_->m[a - 1] = 1;
        r.terms_[Word{a}] = bc.one_scalar();
        return r;
    }

    static ShuffleElement from_word(const Bicharacter& bc, const Word& w,
                                    LaurentScalar c) {
        ShuffleElement r;
        r.deg_ = constitution_of(bc.rank(), w);
        c = bc.ring().reduce(c);
        if (!c.is_zero()) r.terms_[w] = std::move(c);
        return r;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    const std::optional<Constitution>& degree_tag() const { return deg_; }
    void set_degree_tag(Constitution d) { deg_ = std::move(d); }

    /// Homogeneity degree: from the tag, otherwise recomputed from the
    /// support; nullopt for mixed-degree elements and for untagged zeros.
    std::optional<Constitution> degree(int n) const {
        if (deg_) return deg_;
        std::optional<Constitution> d;
        for (const auto& [w, c] : terms_) {
            Constitution cw = constitution_of(n, w);
            if (!d) {
                d = cw;
            } else if (!(*d == cw)) {
                return std::nullopt;
            }
        }
        return d;
    }

    void add_term(const Bicharacter& bc, const Word& w, const LaurentScalar& c) {
        LaurentScalar r = bc.ring().reduce(c);
        if (r.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, std::move(r));
        } else {
            it->second = bc.ring().reduce(it->second + r);
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LaurentScalar coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? LaurentScalar::zero() : it->second;
    }

    bool operator==(const ShuffleElement& o) const { return terms_ == o.terms_; }

private:
    Terms terms_;
    std::optional<Constitution> deg_;

    friend ShuffleElement add(const Bicharacter&, const ShuffleElement&, const ShuffleElement&);
    friend ShuffleElement sub(const Bicharacter&, const ShuffleElement&, const ShuffleElement&);
    friend ShuffleElement scale(const Bicharacter&, const ShuffleElement&, const LaurentScalar&);
};

inline ShuffleElement add(const Bicharacter& bc, const ShuffleElement& a, const ShuffleElement& b) {
    ShuffleElement r = a;
    if (a.deg_ && b.deg_ && *a.deg_ == *b.deg_)
        r.deg_ = a.deg_;
    else
        r.deg_.reset();
    for (const auto& [w, c] : b.terms()) r.add_term(bc, w, c);
    return r;
}

inline ShuffleElement sub(const Bicharacter& bc, const ShuffleElement& a, const ShuffleElement& b) {
    ShuffleElement r = a;
    if (a.deg_ && b.deg_ && *a.deg_ == *b.deg_)
        r.deg_ = a.deg_;
    else
        r.deg_.reset();
    for (const auto& [w, c] : b.terms()) r.add_term(bc, w, -c);
    return r;
}

inline ShuffleElement scale(const Bicharacter& bc, const ShuffleElement& a, const LaurentScalar& c) {
    ShuffleElement r;
    r.deg_ = a.deg_;
    for (const auto& [w, k] : a.terms()) r.add_term(bc, w, k * c);
    return r;
}

namespace detail {

/// Shuffle of two plain words. Coefficients are parameter monomials: moving a
/// letter y of the right factor left past a letter x of the left factor
/// contributes p(y, x)^{-1}.
inline void word_shuffle(const Bicharacter& bc, const Word& a, std::size_t ia, const Word& b,
                         std::size_t ib, Word& acc, const ParamMonomial& coeff,
                         std::map<Word, LaurentScalar>& out) {
    if (ia == a.size() && ib == b.size()) {
        auto it = out.find(acc);
        if (it == out.end())
            out.emplace(acc, LaurentScalar::from_monomial(coeff));
        else
            it->second.add_term(coeff, 1);
        return;
    }
    if (ia < a.size()) {
        acc.push_back(a[ia]);
        word_shuffle(bc, a, ia + 1, b, ib, acc, coeff, out);
        acc.pop_back();
    }
    if (ib < b.size()) {
        ParamMonomial c = coeff;
        for (std::size_t t = ia; t < a.size(); ++t) c = c * bc.p(b[ib], a[t]).inverse();
        acc.push_back(b[ib]);
        word_shuffle(bc, a, ia, b, ib + 1, acc, c, out);
        acc.pop_back();
    }
}

}  // namespace detail

/// The quantum shuffle product, bilinear extension of the single-letter rules.
inline ShuffleElement shuffle_product(const Bicharacter& bc, const ShuffleElement& a,
                                      const ShuffleElement& b) {
    ShuffleElement r;
    {
        auto da = a.degree(bc.rank());
        auto db = b.degree(bc.rank());
        if (da && db) r.set_degree_tag(*da + *db);
    }
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            std::map<Word, LaurentScalar> mix;
            Word acc;
            acc.reserve(wa.size() + wb.size());
            detail::word_shuffle(bc, wa, 0, wb, 0, acc, bc.one(), mix);
            LaurentScalar c = ca * cb;
            for (const auto& [w, k] : mix) r.add_term(bc, w, k * c);
        }
    }
    return r;
}

/// Skew commutator [a,b] = ab - p(D(a),D(b)) ba on homogeneous elements.
inline ShuffleElement skew_bracket(const Bicharacter& bc, const ShuffleElement& a,
                                   const ShuffleElement& b) {
    auto da = a.degree(bc.rank());
    auto db = b.degree(bc.rank());
    if (!da || !db) throw std::invalid_argument("skew_bracket: arguments must be homogeneous");
    ParamMonomial p = bc.p_eval(*da, *db);
    ShuffleElement ab = shuffle_product(bc, a, b);
    ShuffleElement ba = shuffle_product(bc, b, a);
    ShuffleElement r = sub(bc, ab, scale(bc, ba, LaurentScalar::from_monomial(p)));
    r.set_degree_tag(*da + *db);
    return r;
}

inline ShuffleElement power(const Bicharacter& bc, const ShuffleElement& a, long h) {
    if (h < 1) throw std::invalid_argument("power: exponent must be positive");
    ShuffleElement r = a;
    for (long i = 1; i < h; ++i) r = shuffle_product(bc, r, a);
    return r;
}

// ---------------------------------------------------------------------------
// Coproducts.

/// Sum of left (x) right tensor legs with scalar coefficients.
using TensorElement = std::map<std::pair<Word, Word>, LaurentScalar>;

/// Deconcatenation coproduct of the shuffle algebra.
inline TensorElement braided_coproduct(const Bicharacter& bc, const ShuffleElement& a) {
    TensorElement r;
    for (const auto& [w, c] : a.terms()) {
        for (std::size_t i = 0; i <= w.size(); ++i) {
            Word l(w.begin(), w.begin() + i), rt(w.begin() + i, w.end());
            auto key = std::make_pair(std::move(l), std::move(rt));
            auto it = r.find(key);
            if (it == r.end()) {
                r.emplace(std::move(key), c);
            } else {
                it->second = bc.ring().reduce(it->second + c);
                if (it->second.is_zero()) r.erase(it);
            }
        }
    }
    return r;
}

/// Hopf coproduct with group parts restored: for each braided term
/// a^(1) (x) a^(2) the Hopf term is a^(1) g (x) a^(2) = p(D(a^(1)), D(a^(2)))
/// g a^(1) (x) a^(2), where g is the group-like element of the constitution
/// of a^(2). Triples (g, left, right) are normalized to the g-on-the-left
/// form and grouped by that constitution.
using DecoratedCoproduct = std::map<Constitution, TensorElement>;

inline DecoratedCoproduct hopf_coproduct(const Bicharacter& bc, const ShuffleElement& a) {
    DecoratedCoproduct r;
    for (const auto& [legs, c] : braided_coproduct(bc, a)) {
        Constitution cl = constitution_of(bc.rank(), legs.first);
        Constitution cr = constitution_of(bc.rank(), legs.second);
        r[cr].emplace(legs, bc.ring().reduce(c.scaled(bc.p_eval(cl, cr))));
    }
    return r;
}

/// Coordinate partial derivative: the right-leg-(x_i) component of the
/// braided coproduct, conjugated by the group part. Extended indices act
/// through psi.
inline ShuffleElement partial_derivative(const Bicharacter& bc, int i, const ShuffleElement& a) {
    int letter = fold(bc.rank(), i);
    ShuffleElement r;
    if (auto d = a.degree(bc.rank()); d && d->m[letter - 1] > 0) {
        Constitution rd = *d;
        rd.m[letter - 1] -= 1;
        r.set_degree_tag(rd);
    }
    Constitution xi(bc.rank());
    xi.m[letter - 1] = 1;
    for (const auto& [w, c] : a.terms()) {
        if (w.empty() || w.back() != letter) continue;
        Word head(w.begin(), w.end() - 1);
        ParamMonomial conj = bc.p_eval(constitution_of(bc.rank(), head), xi);
        r.add_term(bc, head, c.scaled(conj));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Rendering ("x1 x2 x2" style words).

inline std::string to_string(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += " ";
        s += "x" + std::to_string(w[i]);
    }
    return s;
}

inline std::string to_string(const ShuffleElement& a, const std::vector<std::string>& names) {
    if (a.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : a.terms()) {
        if (!first) s += " + ";
        s += "(" + to_string(c, names) + ")(" + to_string(w) + ")";
        first = false;
    }
    return s;
}

}  // namespace coideal
