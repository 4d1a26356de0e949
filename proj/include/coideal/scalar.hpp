#pragma once

// Exact scalar arithmetic: rational-coefficient Laurent polynomials in the
// deformation parameter q and finitely many extra invertible parameters
// t1,...,ts, with an optional cyclotomic mode where scalars live in
// Q[q]/(Phi_t(q)).

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace coideal {

using Rational = mpq_class;

/// Monomial in the parameter set {q, t1, ..., ts}; exponents may be negative.
struct ParamMonomial {
    std::vector<int> e;  // e[0] is the q-exponent

    ParamMonomial() = default;
    explicit ParamMonomial(std::size_t nparams) : e(nparams, 0) {}

    static ParamMonomial q_power(std::size_t nparams, int k) {
        ParamMonomial m(nparams);
        m.e[0] = k;
        return m;
    }

    bool is_one() const {
        return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    }

    ParamMonomial operator*(const ParamMonomial& o) const {
        assert(e.size() == o.e.size());
        ParamMonomial r(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] + o.e[i];
        return r;
    }

    ParamMonomial inverse() const {
        ParamMonomial r(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = -e[i];
        return r;
    }

    ParamMonomial pow(long k) const {
        ParamMonomial r(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = static_cast<int>(e[i] * k);
        return r;
    }

    auto operator<=>(const ParamMonomial&) const = default;
};

/// Finitely supported map ParamMonomial -> Q. No zero coefficients are stored.
class LaurentScalar {
public:
    using Terms = std::map<ParamMonomial, Rational>;

    LaurentScalar() = default;

    static LaurentScalar zero() { return LaurentScalar(); }

    static LaurentScalar from_monomial(ParamMonomial m, Rational c = 1) {
        LaurentScalar s;
        if (c != 0) s.terms_[std::move(m)] = std::move(c);
        return s;
    }

    static LaurentScalar constant(std::size_t nparams, Rational c) {
        return from_monomial(ParamMonomial(nparams), std::move(c));
    }

    static LaurentScalar q_power(std::size_t nparams, int k, Rational c = 1) {
        return from_monomial(ParamMonomial::q_power(nparams, k), std::move(c));
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_monomial() const { return terms_.size() == 1; }

    /// The unique term of a monomial scalar.
    std::pair<ParamMonomial, Rational> single_term() const {
        if (!is_monomial()) throw std::logic_error("scalar is not a monomial");
        return *terms_.begin();
    }

    void add_term(const ParamMonomial& m, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentScalar operator+(const LaurentScalar& o) const {
        LaurentScalar r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }

    LaurentScalar operator-() const {
        LaurentScalar r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    LaurentScalar operator-(const LaurentScalar& o) const { return *this + (-o); }

    LaurentScalar operator*(const LaurentScalar& o) const {
        LaurentScalar r;
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
        return r;
    }

    LaurentScalar& operator+=(const LaurentScalar& o) { return *this = *this + o; }
    LaurentScalar& operator-=(const LaurentScalar& o) { return *this = *this - o; }
    LaurentScalar& operator*=(const LaurentScalar& o) { return *this = *this * o; }

    LaurentScalar scaled(const Rational& c) const {
        LaurentScalar r;
        if (c == 0) return r;
        for (const auto& [m, k] : terms_) r.terms_[m] = k * c;
        return r;
    }

    LaurentScalar scaled(const ParamMonomial& m) const {
        LaurentScalar r;
        for (const auto& [mm, c] : terms_) r.terms_[mm * m] = c;
        return r;
    }

    /// Inverse of a one-term scalar. Throws on anything else; general division
    /// lives in the solver fields, not here.
    LaurentScalar unit_inverse() const {
        auto [m, c] = single_term();
        return from_monomial(m.inverse(), Rational(c.get_den(), c.get_num()));
    }

    bool operator==(const LaurentScalar& o) const { return terms_ == o.terms_; }

    /// True when every term involves only q (all t-exponents vanish).
    bool q_only() const {
        for (const auto& [m, c] : terms_)
            for (std::size_t i = 1; i < m.e.size(); ++i)
                if (m.e[i] != 0) return false;
        return true;
    }

private:
    Terms terms_;
};

namespace detail {

/// Dense univariate polynomial over Q, used for cyclotomic reduction.
using QPoly = std::vector<Rational>;

inline void qpoly_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    qpoly_trim(r);
    return r;
}

/// Division with remainder; returns {quotient, remainder}.
inline std::pair<QPoly, QPoly> qpoly_divmod(QPoly a, const QPoly& b) {
    if (b.empty()) throw std::logic_error("polynomial division by zero");
    QPoly q;
    qpoly_trim(a);
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
    while (a.size() >= b.size()) {
        Rational c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        qpoly_trim(a);
    }
    return {q, a};
}

/// The t-th cyclotomic polynomial, by dividing q^t - 1 by all Phi_d, d|t, d<t.
inline QPoly cyclotomic_poly(int t) {
    QPoly r(t + 1, Rational(0));
    r[0] = -1;
    r[t] = 1;
    for (int d = 1; d < t; ++d) {
        if (t % d != 0) continue;
        QPoly phi_d = cyclotomic_poly(d);
        auto [q, rem] = qpoly_divmod(r, phi_d);
        if (!rem.empty()) throw std::logic_error("cyclotomic division not exact");
        r = q;
    }
    return r;
}

}  // namespace detail

enum class ScalarMode { Generic, Cyclotomic };

/// Coefficient domain descriptor. Generic mode keeps Laurent polynomials as
/// they are; cyclotomic mode reduces modulo Phi_t(q) with t > 4 (so that
/// q^3 != 1, q^4 != 1) and allows no extra parameters.
class ScalarRing {
public:
    ScalarRing() : mode_(ScalarMode::Generic), nparams_(1) {}

    static ScalarRing generic(std::size_t nparams) {
        ScalarRing r;
        r.mode_ = ScalarMode::Generic;
        r.nparams_ = nparams;
        return r;
    }

    static ScalarRing cyclotomic(int t) {
        if (t <= 4) throw std::invalid_argument("cyclotomic order t must exceed 4");
        ScalarRing r;
        r.mode_ = ScalarMode::Cyclotomic;
        r.nparams_ = 1;
        r.t_ = t;
        r.phi_ = detail::cyclotomic_poly(t);
        return r;
    }

    ScalarMode mode() const { return mode_; }
    bool is_cyclotomic() const { return mode_ == ScalarMode::Cyclotomic; }
    int order() const { return t_; }
    std::size_t nparams() const { return nparams_; }

    LaurentScalar reduce(const LaurentScalar& s) const {
        if (mode_ == ScalarMode::Generic) return s;
        // q^t = 1 modulo Phi_t, so exponents fold into [0, t); then reduce
        // the residue polynomial modulo Phi_t itself.
        detail::QPoly dense(t_, Rational(0));
        for (const auto& [m, c] : s.terms()) {
            for (std::size_t i = 1; i < m.e.size(); ++i)
                if (m.e[i] != 0)
                    throw std::logic_error("multiparameters are not allowed in cyclotomic mode");
            int e = ((m.e[0] % t_) + t_) % t_;
            dense[e] += c;
        }
        detail::qpoly_trim(dense);
        auto [q, rem] = detail::qpoly_divmod(dense, phi_);
        (void)q;
        LaurentScalar r;
        for (std::size_t i = 0; i < rem.size(); ++i)
            if (rem[i] != 0) r.add_term(ParamMonomial::q_power(1, static_cast<int>(i)), rem[i]);
        return r;
    }

    /// Field inverse in cyclotomic mode (Phi_t is irreducible over Q); in
    /// generic mode only one-term scalars are invertible.
    LaurentScalar inverse(const LaurentScalar& s) const {
        if (mode_ == ScalarMode::Generic) return s.unit_inverse();
        LaurentScalar red = reduce(s);
        if (red.is_zero()) throw std::domain_error("division by zero");
        detail::QPoly a(phi_.size() - 1, Rational(0));
        for (const auto& [m, c] : red.terms()) a[m.e[0]] = c;
        detail::qpoly_trim(a);
        // extended Euclid: find u with a*u = 1 (mod phi)
        detail::QPoly r0 = phi_, r1 = a;
        detail::QPoly s0 = {}, s1 = {Rational(1)};
        while (!r1.empty()) {
            auto [q, r2] = detail::qpoly_divmod(r0, r1);
            detail::QPoly qs1 = detail::qpoly_mul(q, s1);
            detail::QPoly s2 = s0;
            s2.resize(std::max(s2.size(), qs1.size()), Rational(0));
            for (std::size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
            detail::qpoly_trim(s2);
            r0 = r1; r1 = r2;
            s0 = s1; s1 = s2;
        }
        if (r0.size() != 1) throw std::logic_error("cyclotomic inverse failed");
        LaurentScalar u;
        for (std::size_t i = 0; i < s0.size(); ++i)
            if (s0[i] != 0) u.add_term(ParamMonomial::q_power(1, static_cast<int>(i)), s0[i] / r0[0]);
        return reduce(u);
    }

    bool equal(const LaurentScalar& a, const LaurentScalar& b) const {
        if (mode_ == ScalarMode::Generic) return a == b;
        return reduce(a) == reduce(b);
    }

private:
    ScalarMode mode_;
    std::size_t nparams_;
    int t_ = 0;
    detail::QPoly phi_;
};

// ---------------------------------------------------------------------------
// Canonical text rendering. Terms are sorted by descending exponent vector;
// rationals print as "a/b", monomials as "q^e*t1^f".

inline std::string to_string(const Rational& c) { return c.get_str(); }

inline std::string to_string(const ParamMonomial& m, const std::vector<std::string>& names) {
    std::string s;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
        if (m.e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[i];
        if (m.e[i] != 1) s += "^" + std::to_string(m.e[i]);
    }
    return s;
}

/// Parameter names "q", "t1", "t2", ... for diagnostics.
inline std::vector<std::string> default_param_names(std::size_t nparams) {
    std::vector<std::string> names{"q"};
    for (std::size_t i = 1; i < nparams; ++i) names.push_back("t" + std::to_string(i));
    return names;
}

inline std::string to_string(const LaurentScalar& s, const std::vector<std::string>& names) {
    if (s.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        bool neg = a < 0;
        if (neg) a = -a;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono = to_string(m, names);
        if (mono.empty()) {
            out += to_string(a);
        } else if (a == 1) {
            out += mono;
        } else {
            out += to_string(a) + "*" + mono;
        }
        first = false;
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const LaurentScalar& s) {
    std::size_t np = s.is_zero() ? 1 : s.terms().begin()->first.e.size();
    return os << to_string(s, default_param_names(np));
}

inline std::ostream& operator<<(std::ostream& os, const ParamMonomial& m) {
    std::string t = to_string(m, default_param_names(m.e.size()));
    return os << (t.empty() ? "1" : t);
}

}  // namespace coideal
