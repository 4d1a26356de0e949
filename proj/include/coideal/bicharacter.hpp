#pragma once

// The multiparameter bicharacter p(.,.) of type B_n: an n x n matrix of
// invertible parameter monomials p_ij subject to
//   p_nn = q,  p_ii = q^2 (i < n),  p_{i,i+1} p_{i+1,i} = q^-2,
//   p_ij p_ji = 1 for |i - j| > 1,
// extended bimultiplicatively to constitutions.

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "coideal/scalar.hpp"
#include "coideal/words.hpp"

namespace coideal {

class Bicharacter {
public:
    /// One-parameter solution of the constraints: p_ii = q^2 (i<n), p_nn = q,
    /// p_{i,i+1} = q^-2, p_{i+1,i} = 1, all other entries 1.
    static Bicharacter standard(int n, ScalarRing ring = ScalarRing::generic(1)) {
        if (n < 1) throw std::invalid_argument("rank must be positive");
        if (ring.nparams() != 1)
            throw std::invalid_argument("standard bicharacter has no extra parameters");
        Bicharacter bc;
        bc.n_ = n;
        bc.ring_ = ring;
        bc.names_ = {"q"};
        bc.p_.assign(n, std::vector<ParamMonomial>(n, ParamMonomial(1)));
        for (int i = 1; i <= n; ++i) bc.at(i, i) = ParamMonomial::q_power(1, i == n ? 1 : 2);
        for (int i = 1; i < n; ++i) bc.at(i, i + 1) = ParamMonomial::q_power(1, -2);
        bc.validate();
        return bc;
    }

    /// Fully generic multiparameter solution: one free parameter t_{ij} per
    /// pair i < j, with p_ij = t_{ij} (times q^-2 when j = i+1) and
    /// p_ji = t_{ij}^-1.
    static Bicharacter multiparameter(int n) {
        if (n < 1) throw std::invalid_argument("rank must be positive");
        Bicharacter bc;
        bc.n_ = n;
        bc.names_ = {"q"};
        std::vector<std::vector<int>> slot(n + 1, std::vector<int>(n + 1, -1));
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                slot[i][j] = static_cast<int>(bc.names_.size());
                bc.names_.push_back("t" + std::to_string(i) + std::to_string(j));
            }
        std::size_t np = bc.names_.size();
        bc.ring_ = ScalarRing::generic(np);
        bc.p_.assign(n, std::vector<ParamMonomial>(n, ParamMonomial(np)));
        for (int i = 1; i <= n; ++i) bc.at(i, i) = ParamMonomial::q_power(np, i == n ? 1 : 2);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                ParamMonomial m(np);
                m.e[slot[i][j]] = 1;
                if (j == i + 1) m.e[0] = -2;
                bc.at(i, j) = m;
                bc.at(j, i) = m.inverse();
                if (j == i + 1) bc.at(j, i).e[0] = 0;
            }
        bc.validate();
        return bc;
    }

    static Bicharacter from_matrix(int n, std::vector<std::string> names,
                                   std::vector<std::vector<ParamMonomial>> matrix,
                                   ScalarRing ring) {
        Bicharacter bc;
        bc.n_ = n;
        bc.names_ = std::move(names);
        bc.p_ = std::move(matrix);
        bc.ring_ = ring;
        bc.validate();
        return bc;
    }

    int rank() const { return n_; }
    const ScalarRing& ring() const { return ring_; }
    const std::vector<std::string>& param_names() const { return names_; }
    std::size_t nparams() const { return names_.size(); }

    /// p_ij for extended indices 1..2n (x_{n+r} = x_{n-r+1}).
    const ParamMonomial& p(int i, int j) const { return p_[fold(n_, i) - 1][fold(n_, j) - 1]; }

    ParamMonomial one() const { return ParamMonomial(nparams()); }
    ParamMonomial q_mono(int e) const { return ParamMonomial::q_power(nparams(), e); }
    LaurentScalar q_scalar(int e, Rational c = 1) const {
        return LaurentScalar::q_power(nparams(), e, std::move(c));
    }
    LaurentScalar one_scalar() const { return LaurentScalar::constant(nparams(), 1); }

    /// Bimultiplicative evaluation prod_{i,j} p_ij^{u_i v_j}.
    ParamMonomial p_eval(const Constitution& u, const Constitution& v) const {
        ParamMonomial r = one();
        for (int i = 1; i <= n_; ++i) {
            if (u.m[i - 1] == 0) continue;
            for (int j = 1; j <= n_; ++j) {
                if (v.m[j - 1] == 0) continue;
                r = r * p(i, j).pow(u.m[i - 1] * v.m[j - 1]);
            }
        }
        return r;
    }

    ParamMonomial p_eval_words(const Word& u, const Word& v) const {
        return p_eval(constitution_of(n_, u), constitution_of(n_, v));
    }

    /// p on root intervals with extended indices, e.g. p(u(k,i), u(i+1,m)).
    ParamMonomial p_eval_intervals(int k1, int m1, int k2, int m2) const {
        return p_eval(interval_constitution(n_, k1, m1), interval_constitution(n_, k2, m2));
    }

private:
    ParamMonomial& at(int i, int j) { return p_[i - 1][j - 1]; }

    void validate() const {
        std::size_t np = names_.size();
        if (names_.empty() || names_[0] != "q")
            throw std::invalid_argument("first parameter must be q");
        if (ring_.is_cyclotomic() && np != 1)
            throw std::invalid_argument("cyclotomic mode admits no extra parameters");
        if (p_.size() != static_cast<std::size_t>(n_))
            throw std::invalid_argument("bicharacter matrix has wrong size");
        for (const auto& row : p_) {
            if (row.size() != static_cast<std::size_t>(n_))
                throw std::invalid_argument("bicharacter matrix has wrong size");
            for (const auto& m : row)
                if (m.e.size() != np) throw std::invalid_argument("monomial has wrong parameter count");
        }
        auto expect = [&](const ParamMonomial& got, const ParamMonomial& want, const char* what) {
            if (!(got == want)) throw std::invalid_argument(std::string("bicharacter constraint violated: ") + what);
        };
        for (int i = 1; i <= n_; ++i)
            expect(p_[i - 1][i - 1], ParamMonomial::q_power(np, i == n_ ? 1 : 2),
                   i == n_ ? "p_nn = q" : "p_ii = q^2");
        for (int i = 1; i < n_; ++i)
            expect(p_[i - 1][i] * p_[i][i - 1], ParamMonomial::q_power(np, -2),
                   "p_{i,i+1} p_{i+1,i} = q^-2");
        for (int i = 1; i <= n_; ++i)
            for (int j = i + 2; j <= n_; ++j)
                expect(p_[i - 1][j - 1] * p_[j - 1][i - 1], ParamMonomial(np), "p_ij p_ji = 1");
    }

    int n_ = 0;
    std::vector<std::string> names_;
    std::vector<std::vector<ParamMonomial>> p_;
    ScalarRing ring_;
};

// ---------------------------------------------------------------------------
// Scalar coefficient tables. All indices are extended (1..2n) and all closed
// forms depend only on q.

/// tau_i: 1 with the single exception tau_n = q.
inline LaurentScalar tau(const Bicharacter& bc, int i) {
    if (i < 1 || i > 2 * bc.rank()) throw std::out_of_range("tau: index out of range");
    return bc.ring().reduce(bc.q_scalar(i == bc.rank() ? 1 : 0));
}

/// sigma_k^m = p(u(k,m), u(k,m)): q if m = n or k = n+1, q^4 if m = psi(k),
/// q^2 otherwise.
inline LaurentScalar sigma(const Bicharacter& bc, int k, int m) {
    int n = bc.rank();
    if (k < 1 || m > 2 * n || k > m) throw std::out_of_range("sigma: bad interval");
    int e = 2;
    if (m == n || k == n + 1)
        e = 1;
    else if (m == psi(n, k))
        e = 4;
    return bc.ring().reduce(bc.q_scalar(e));
}

/// mu_k^{m,i} = p(u(k,i),u(i+1,m)) p(u(i+1,m),u(k,i)), by the case tables.
inline LaurentScalar mu(const Bicharacter& bc, int k, int m, int i) {
    int n = bc.rank();
    if (k < 1 || m > 2 * n || !(k <= i && i < m)) throw std::out_of_range("mu: bad indices");
    int pk = psi(n, k);
    int e;
    if (m < pk)
        e = (m > n && i == psi(n, m) - 1) ? -4 : (i == n ? 0 : -2);
    else if (m == pk)
        e = (i == n) ? 2 : 0;
    else
        e = (k <= n && i == pk) ? -4 : (i == n ? 0 : -2);
    return bc.ring().reduce(bc.q_scalar(e));
}

/// epsilon_k^m: 1 if m <= n or k > n; q^-1 if k <= n < m, m != psi(k);
/// q^-3 if m = psi(k).
inline LaurentScalar epsilon(const Bicharacter& bc, int k, int m) {
    int n = bc.rank();
    if (k < 1 || m > 2 * n || k > m) throw std::out_of_range("epsilon: bad interval");
    int e = -1;
    if (m <= n || k > n)
        e = 0;
    else if (m == psi(n, k))
        e = -3;
    return bc.ring().reduce(bc.q_scalar(e));
}

/// alpha_k^m = epsilon_k^m (q^2-1)^{m-k} prod_{k <= i < j <= m} p_ij, the
/// shuffle value coefficient of u[k,m].
inline LaurentScalar alpha_shuffle(const Bicharacter& bc, int k, int m) {
    int n = bc.rank();
    if (k < 1 || m > 2 * n || k > m) throw std::out_of_range("alpha_shuffle: bad interval");
    LaurentScalar r = epsilon(bc, k, m);
    LaurentScalar q2m1 = bc.q_scalar(2) - bc.one_scalar();
    for (int i = k; i < m; ++i) r *= q2m1;
    ParamMonomial prod = bc.one();
    for (int i = k; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) prod = prod * bc.p(i, j);
    return bc.ring().reduce(r.scaled(prod));
}

/// alpha_{km}^s = tau_s p(u(1+s,m), u(k,s))^{-1}, for k <= s < m.
inline LaurentScalar alpha_kms(const Bicharacter& bc, int k, int m, int s) {
    int n = bc.rank();
    if (k < 1 || m > 2 * n || !(k <= s && s < m)) throw std::out_of_range("alpha_kms: bad indices");
    ParamMonomial p = bc.p_eval_intervals(1 + s, m, k, s);
    return bc.ring().reduce(tau(bc, s).scaled(p.inverse()));
}

}  // namespace coideal
