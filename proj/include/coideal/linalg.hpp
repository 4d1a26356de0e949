#pragma once

// Exact linear algebra for PBW decomposition and span membership. Generic
// mode works over Q(q) (univariate rational functions; extra multiparameters
// are not supported in solves), cyclotomic mode over the field Q[q]/(Phi_t).

#include <map>
#include <optional>
#include <vector>

#include "coideal/scalar.hpp"

namespace coideal {

namespace detail {

inline QPoly qpoly_add(const QPoly& a, const QPoly& b) {
    QPoly r = a;
    r.resize(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    qpoly_trim(r);
    return r;
}

inline QPoly qpoly_neg(QPoly a) {
    for (auto& c : a) c = -c;
    return a;
}

inline QPoly qpoly_gcd(QPoly a, QPoly b) {
    qpoly_trim(a);
    qpoly_trim(b);
    while (!b.empty()) {
        auto [q, r] = qpoly_divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

}  // namespace detail

/// Univariate rational function num/den over Q in q, kept gcd-reduced with a
/// monic denominator.
class RatFun {
public:
    RatFun() : num_{}, den_{Rational(1)} {}
    RatFun(detail::QPoly num, detail::QPoly den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    static RatFun from_rational(const Rational& c) {
        return c == 0 ? RatFun() : RatFun({c}, {Rational(1)});
    }

    /// From a Laurent polynomial in q only. Negative exponents go to the
    /// denominator.
    static RatFun from_laurent(const LaurentScalar& s) {
        if (s.is_zero()) return RatFun();
        if (!s.q_only())
            throw std::logic_error("linear solve requires a one-parameter (q-only) scalar");
        int emin = 0;
        for (const auto& [m, c] : s.terms()) emin = std::min(emin, m.e[0]);
        detail::QPoly num;
        for (const auto& [m, c] : s.terms()) {
            std::size_t idx = static_cast<std::size_t>(m.e[0] - emin);
            if (num.size() <= idx) num.resize(idx + 1, Rational(0));
            num[idx] = c;
        }
        detail::QPoly den(static_cast<std::size_t>(-emin) + 1, Rational(0));
        den.back() = 1;
        return RatFun(std::move(num), std::move(den));
    }

    /// Back to a Laurent polynomial when the denominator is a pure q-power
    /// times an exact divisor of the numerator.
    std::optional<LaurentScalar> to_laurent() const {
        if (num_.empty()) return LaurentScalar::zero();
        std::size_t shift = 0;
        detail::QPoly den = den_;
        while (!den.empty() && den[0] == 0) {
            den.erase(den.begin());
            ++shift;
        }
        auto [q, r] = detail::qpoly_divmod(num_, den);
        if (!r.empty()) return std::nullopt;
        LaurentScalar out;
        for (std::size_t i = 0; i < q.size(); ++i)
            if (q[i] != 0)
                out.add_term(ParamMonomial::q_power(1, static_cast<int>(i) - static_cast<int>(shift)),
                             q[i]);
        return out;
    }

    bool is_zero() const { return num_.empty(); }

    LaurentScalar num_laurent() const { return poly_to_laurent(num_); }
    LaurentScalar den_laurent() const { return poly_to_laurent(den_); }

    static LaurentScalar poly_to_laurent(const detail::QPoly& p) {
        LaurentScalar out;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] != 0) out.add_term(ParamMonomial::q_power(1, static_cast<int>(i)), p[i]);
        return out;
    }

    RatFun operator+(const RatFun& o) const {
        return RatFun(detail::qpoly_add(detail::qpoly_mul(num_, o.den_),
                                        detail::qpoly_mul(o.num_, den_)),
                      detail::qpoly_mul(den_, o.den_));
    }
    RatFun operator-(const RatFun& o) const {
        return RatFun(detail::qpoly_add(detail::qpoly_mul(num_, o.den_),
                                        detail::qpoly_neg(detail::qpoly_mul(o.num_, den_))),
                      detail::qpoly_mul(den_, o.den_));
    }
    RatFun operator*(const RatFun& o) const {
        return RatFun(detail::qpoly_mul(num_, o.num_), detail::qpoly_mul(den_, o.den_));
    }
    RatFun operator/(const RatFun& o) const {
        if (o.is_zero()) throw std::domain_error("division by zero rational function");
        return RatFun(detail::qpoly_mul(num_, o.den_), detail::qpoly_mul(den_, o.num_));
    }
    RatFun operator-() const { return RatFun(detail::qpoly_neg(num_), den_); }

    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }

private:
    void normalize() {
        detail::qpoly_trim(num_);
        detail::qpoly_trim(den_);
        if (den_.empty()) throw std::domain_error("zero denominator");
        if (num_.empty()) {
            den_ = {Rational(1)};
            return;
        }
        detail::QPoly g = detail::qpoly_gcd(num_, den_);
        if (g.size() > 1) {
            num_ = detail::qpoly_divmod(num_, g).first;
            den_ = detail::qpoly_divmod(den_, g).first;
        }
        Rational lead = den_.back();
        if (lead != 1) {
            for (auto& c : num_) c /= lead;
            for (auto& c : den_) c /= lead;
        }
    }

    detail::QPoly num_, den_;
};

/// Field operations over Q(q) for the echelon solver.
struct QqField {
    using El = RatFun;
    El from_scalar(const LaurentScalar& s) const { return RatFun::from_laurent(s); }
    El zero() const { return RatFun(); }
    El one() const { return RatFun::from_rational(1); }
    bool is_zero(const El& a) const { return a.is_zero(); }
    El add(const El& a, const El& b) const { return a + b; }
    El sub(const El& a, const El& b) const { return a - b; }
    El mul(const El& a, const El& b) const { return a * b; }
    El div(const El& a, const El& b) const { return a / b; }
};

/// Field operations over Q[q]/(Phi_t).
struct CycloField {
    const ScalarRing* ring;
    using El = LaurentScalar;
    El from_scalar(const LaurentScalar& s) const { return ring->reduce(s); }
    El zero() const { return LaurentScalar::zero(); }
    El one() const { return LaurentScalar::constant(1, 1); }
    bool is_zero(const El& a) const { return ring->reduce(a).is_zero(); }
    El add(const El& a, const El& b) const { return ring->reduce(a + b); }
    El sub(const El& a, const El& b) const { return ring->reduce(a - b); }
    El mul(const El& a, const El& b) const { return ring->reduce(a * b); }
    El div(const El& a, const El& b) const { return ring->reduce(a * ring->inverse(b)); }
};

/// Incremental row echelon with combination tracking: supports rank queries,
/// independence tests and exact solves against the inserted basis vectors.
template <class F>
class EchelonSolver {
public:
    using El = typename F::El;

    explicit EchelonSolver(F field, std::size_t dim) : f_(std::move(field)), dim_(dim) {}

    std::size_t rank() const { return rows_.size(); }
    std::size_t basis_size() const { return nbasis_; }

    /// Inserts a basis vector; returns false when it is linearly dependent on
    /// the vectors inserted before (it is then not recorded as a pivot, but
    /// still counts as a basis column for solve()).
    bool add_basis(const std::vector<El>& v) {
        std::vector<El> vec = v;
        std::vector<El> comb(nbasis_ + 1, f_.zero());
        comb[nbasis_] = f_.one();
        ++nbasis_;
        for (auto& row : rows_) row.comb.resize(nbasis_, f_.zero());
        return reduce_and_store(std::move(vec), std::move(comb));
    }

    /// Solves target = sum_j c_j basis_j; nullopt when outside the span.
    std::optional<std::vector<El>> solve(const std::vector<El>& target) const {
        std::vector<El> vec = target;
        std::vector<El> coeff(nbasis_, f_.zero());
        for (const auto& row : rows_) {
            const El& lead = vec[row.pivot];
            if (f_.is_zero(lead)) continue;
            El factor = lead;  // rows are normalized to pivot 1
            for (std::size_t i = 0; i < dim_; ++i)
                vec[i] = f_.sub(vec[i], f_.mul(factor, row.vec[i]));
            for (std::size_t j = 0; j < row.comb.size(); ++j)
                coeff[j] = f_.add(coeff[j], f_.mul(factor, row.comb[j]));
        }
        for (const auto& x : vec)
            if (!f_.is_zero(x)) return std::nullopt;
        return coeff;
    }

    bool contains(const std::vector<El>& target) const { return solve(target).has_value(); }

    /// Reduces a vector against the echelon rows and returns the collected
    /// combination coefficients, ignoring any residual. This is a linear
    /// extension of the coordinate maps from the span to the whole space.
    std::vector<El> reduce_coords(const std::vector<El>& target) const {
        std::vector<El> vec = target;
        std::vector<El> coeff(nbasis_, f_.zero());
        for (const auto& row : rows_) {
            const El factor = vec[row.pivot];
            if (f_.is_zero(factor)) continue;
            for (std::size_t i = 0; i < dim_; ++i)
                vec[i] = f_.sub(vec[i], f_.mul(factor, row.vec[i]));
            for (std::size_t j = 0; j < row.comb.size(); ++j)
                coeff[j] = f_.add(coeff[j], f_.mul(factor, row.comb[j]));
        }
        return coeff;
    }

    const F& field() const { return f_; }

private:
    struct Row {
        std::size_t pivot;
        std::vector<El> vec;
        std::vector<El> comb;
    };

    bool reduce_and_store(std::vector<El> vec, std::vector<El> comb) {
        for (const auto& row : rows_) {
            const El lead = vec[row.pivot];
            if (f_.is_zero(lead)) continue;
            for (std::size_t i = 0; i < dim_; ++i)
                vec[i] = f_.sub(vec[i], f_.mul(lead, row.vec[i]));
            for (std::size_t j = 0; j < row.comb.size(); ++j)
                comb[j] = f_.sub(comb[j], f_.mul(lead, row.comb[j]));
        }
        std::size_t pivot = dim_;
        for (std::size_t i = 0; i < dim_; ++i)
            if (!f_.is_zero(vec[i])) {
                pivot = i;
                break;
            }
        if (pivot == dim_) return false;
        El inv = f_.div(f_.one(), vec[pivot]);
        for (auto& x : vec) x = f_.mul(x, inv);
        for (auto& x : comb) x = f_.mul(x, inv);
        rows_.push_back(Row{pivot, std::move(vec), std::move(comb)});
        return true;
    }

    F f_;
    std::size_t dim_;
    std::size_t nbasis_ = 0;
    std::vector<Row> rows_;
};

}  // namespace coideal
