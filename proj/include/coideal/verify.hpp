#pragma once

// Self-check suites behind `coideal-lab verify`: each suite replays a family
// of identities at the configured rank and reports the first counterexample
// on failure. Suites run in parallel; output is emitted in a fixed order.

#include <random>
#include <sstream>

#include "coideal/classifier.hpp"

namespace coideal {

struct SuiteResult {
    std::string name;
    bool ok = true;
    std::string message;  // first counterexample, or a short summary

    void fail(const std::string& msg) {
        if (ok) {
            ok = false;
            message = msg;
        }
    }
};

namespace verify_detail {

inline std::string idx3(int a, int b, int c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace verify_detail

/// Serre and auxiliary defining relations vanish in the shuffle model.
inline SuiteResult verify_serre(const Engine& eng) {
    SuiteResult r{"serre"};
    const Bicharacter& bc = eng.bc();
    int n = bc.rank();
    auto x = [&](int i) { return ShuffleElement::letter(bc, i); };
    for (int i = 1; i < n; ++i)
        if (!skew_bracket(bc, x(i), skew_bracket(bc, x(i), x(i + 1))).is_zero())
            r.fail("[x_i,[x_i,x_{i+1}]] != 0 at i=" + std::to_string(i));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j)
            if (!skew_bracket(bc, x(i), x(j)).is_zero())
                r.fail("[x_i,x_j] != 0 at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    for (int i = 1; i + 1 < n; ++i)
        if (!skew_bracket(bc, skew_bracket(bc, x(i), x(i + 1)), x(i + 1)).is_zero())
            r.fail("[[x_i,x_{i+1}],x_{i+1}] != 0 at i=" + std::to_string(i));
    if (n >= 2) {
        ShuffleElement w = skew_bracket(bc, x(n - 1), x(n));
        w = skew_bracket(bc, w, x(n));
        w = skew_bracket(bc, w, x(n));
        if (!w.is_zero()) r.fail("[[[x_{n-1},x_n],x_n],x_n] != 0");
    }
    for (int k = 2; k < n; ++k) {
        ShuffleElement a = skew_bracket(bc, skew_bracket(bc, x(k + 1), x(k)), x(k - 1));
        if (!skew_bracket(bc, a, x(k)).is_zero())
            r.fail("[[x_{k+1}x_kx_{k-1}],x_k] != 0 at k=" + std::to_string(k));
        ShuffleElement b = skew_bracket(bc, skew_bracket(bc, x(k - 1), x(k)), x(k + 1));
        if (!skew_bracket(bc, b, x(k)).is_zero())
            r.fail("[[x_{k-1}x_kx_{k+1}],x_k] != 0 at k=" + std::to_string(k));
    }
    if (r.ok) r.message = "defining relations vanish";
    return r;
}

/// Coefficient tables, Jacobi/antisymmetry/ad identities, Leibniz rule and
/// shuffle associativity on a fixed random sample.
inline SuiteResult verify_identities(const Engine& eng) {
    SuiteResult r{"identities"};
    const Bicharacter& bc = eng.bc();
    int n = bc.rank();
    // sigma/mu closed forms versus brute force
    for (int k = 1; k <= 2 * n && r.ok; ++k)
        for (int m = k; m <= 2 * n && r.ok; ++m) {
            if (!bc.ring().equal(sigma(bc, k, m),
                                 LaurentScalar::from_monomial(bc.p_eval_intervals(k, m, k, m))))
                r.fail("sigma mismatch at (" + std::to_string(k) + "," + std::to_string(m) + ")");
            for (int i = k; i < m && r.ok; ++i) {
                ParamMonomial brute = bc.p_eval_intervals(k, i, i + 1, m) *
                                      bc.p_eval_intervals(i + 1, m, k, i);
                if (!bc.ring().equal(mu(bc, k, m, i), LaurentScalar::from_monomial(brute)))
                    r.fail("mu mismatch at " + verify_detail::idx3(k, m, i));
            }
        }
    // random homogeneous identities
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> len_d(1, 3), let_d(1, n), coef_d(-2, 2);
    auto rand_elt = [&] {
        Word base;
        int len = len_d(rng);
        for (int i = 0; i < len; ++i) base.push_back(let_d(rng));
        std::sort(base.begin(), base.end());
        ShuffleElement e;
        e.set_degree_tag(constitution_of(n, base));
        do {
            int c = coef_d(rng);
            if (c != 0) e.add_term(bc, base, LaurentScalar::constant(bc.nparams(), c));
        } while (std::next_permutation(base.begin(), base.end()));
        if (e.is_zero()) e.add_term(bc, base, bc.one_scalar());
        return e;
    };
    for (int trial = 0; trial < 12 && r.ok; ++trial) {
        ShuffleElement u = rand_elt(), v = rand_elt(), w = rand_elt();
        auto p_of = [&](const ShuffleElement& a, const ShuffleElement& b) {
            return LaurentScalar::from_monomial(bc.p_eval(*a.degree(n), *b.degree(n)));
        };
        if (!(shuffle_product(bc, shuffle_product(bc, u, v), w) ==
              shuffle_product(bc, u, shuffle_product(bc, v, w))))
            r.fail("shuffle associativity failed");
        ShuffleElement lhs = skew_bracket(bc, skew_bracket(bc, u, v), w);
        ShuffleElement rhs = skew_bracket(bc, u, skew_bracket(bc, v, w));
        LaurentScalar pwv_inv = p_of(w, v).unit_inverse();
        rhs = add(bc, rhs, scale(bc, skew_bracket(bc, skew_bracket(bc, u, w), v), pwv_inv));
        rhs = add(bc, rhs, scale(bc, shuffle_product(bc, skew_bracket(bc, u, w), v),
                                 p_of(v, w) - pwv_inv));
        if (!(lhs == rhs)) r.fail("Jacobi identity failed");
        ShuffleElement anti = add(bc, scale(bc, skew_bracket(bc, v, u), -p_of(u, v)),
                                  scale(bc, shuffle_product(bc, u, v),
                                        bc.one_scalar() - p_of(u, v) * p_of(v, u)));
        if (!(skew_bracket(bc, u, v) == anti)) r.fail("antisymmetry failed");
        for (int i = 1; i <= n && r.ok; ++i) {
            Constitution xi(n);
            xi.m[i - 1] = 1;
            ShuffleElement lb = partial_derivative(bc, i, shuffle_product(bc, u, v));
            ShuffleElement rb = add(
                bc, shuffle_product(bc, partial_derivative(bc, i, u), v),
                scale(bc, shuffle_product(bc, u, partial_derivative(bc, i, v)),
                      LaurentScalar::from_monomial(bc.p_eval(*u.degree(n), xi))));
            if (!(lb == rb)) r.fail("Leibniz rule failed");
        }
    }
    if (r.ok) r.message = "coefficient tables and bracket identities hold";
    return r;
}

/// Explicit coproduct of every u[k,m] against the three-part formula.
inline SuiteResult verify_coproduct(const Engine& eng) {
    SuiteResult r{"coproduct"};
    const Bicharacter& bc = eng.bc();
    int n = bc.rank();
    LaurentScalar one_m_q2 = bc.one_scalar() - bc.q_scalar(-2);
    for (int k = 1; k <= 2 * n; ++k)
        for (int m = k; m <= 2 * n; ++m) {
            DecoratedCoproduct got = hopf_coproduct(bc, u_bracket(eng, k, m));
            DecoratedCoproduct want;
            want[Constitution(n)].emplace(std::make_pair(u_word_desc(n, m, k), Word{}),
                                          alpha_shuffle(bc, k, m));
            want[interval_constitution(n, k, m)].emplace(
                std::make_pair(Word{}, u_word_desc(n, m, k)), alpha_shuffle(bc, k, m));
            for (int i = k; i < m; ++i) {
                LaurentScalar c = bc.ring().reduce(tau(bc, i) * one_m_q2 *
                                                   alpha_shuffle(bc, i + 1, m) *
                                                   alpha_shuffle(bc, k, i));
                if (c.is_zero()) continue;
                want[interval_constitution(n, k, i)].emplace(
                    std::make_pair(u_word_desc(n, m, i + 1), u_word_desc(n, i, k)), c);
            }
            if (!(got == want)) {
                r.fail("coproduct formula fails at u[" + std::to_string(k) + "," +
                       std::to_string(m) + "]");
                return r;
            }
        }
    r.message = "explicit coproduct holds for all u[k,m]";
    return r;
}

/// Duality of Phi over black regular sets and the full-interval closed form.
inline SuiteResult verify_duality(const Engine& eng) {
    SuiteResult r{"duality"};
    const Bicharacter& bc = eng.bc();
    int n = bc.rank();
    for (int k = 1; k <= 2 * n; ++k)
        for (int m = k; m <= 2 * n; ++m) {
            if (m == psi(n, k) && k != m) continue;
            int cnt = 1 << (m - k);
            for (int mask = 0; mask < cnt; ++mask) {
                IndexSet S;
                for (int i = 0; i < m - k; ++i)
                    if (mask & (1 << i)) S.insert(k + i);
                if (!is_black_regular(n, S, k, m)) continue;
                DualSet d = dual_set(n, S, k, m);
                ShuffleElement want =
                    scale(bc, phi(eng, d.T, d.k, d.m), duality_constant(bc, S, k, m));
                if (!(phi(eng, S, k, m) == want)) {
                    r.fail("duality fails at (" + std::to_string(k) + "," + std::to_string(m) +
                           "), |S|=" + std::to_string(S.size()));
                    return r;
                }
            }
        }
    // closed form for the full interval
    for (int k = 1; k <= 2 * n; ++k)
        for (int m = k; m <= 2 * n; ++m) {
            IndexSet full;
            for (int s = k; s < m; ++s) full.insert(s);
            ParamMonomial prod = bc.one();
            for (int i = k; i <= m; ++i)
                for (int j = k; j < i; ++j) prod = prod * bc.p(i, j).inverse();
            ShuffleElement want = scale(bc, u_bracket(eng, psi(n, m), psi(n, k)),
                                        LaurentScalar::from_monomial(prod, (m - k) % 2 ? -1 : 1));
            if (!(phi(eng, full, k, m) == want)) {
                r.fail("full-interval closed form fails at (" + std::to_string(k) + "," +
                       std::to_string(m) + ")");
                return r;
            }
        }
    r.message = "duality and the full-interval closed form hold";
    return r;
}

/// Enumeration count, distinct simple-root sets, round trips, Claims 1-5.
inline SuiteResult verify_classification(const Engine& eng) {
    SuiteResult r{"classification"};
    int n = eng.rank();
    auto all = enumerate_subalgebras(n);
    long dblfact = 1;
    for (int k = 2 * n; k >= 2; k -= 2) dblfact *= k;
    if (static_cast<long>(all.size()) != dblfact)
        r.fail("expected (2n)!! = " + std::to_string(dblfact) + " subalgebras, got " +
               std::to_string(all.size()));
    std::set<std::set<RootInterval>> simple_sets;
    for (const auto& d : all) simple_sets.insert(d.simple_roots);
    if (simple_sets.size() != all.size()) r.fail("simple-root sets are not pairwise distinct");
    for (const auto& d : all) {
        if (root_sequence_of(n, d.generators) != d.theta) {
            r.fail("root sequence round trip fails");
            break;
        }
        for (int k = 1; k <= n; ++k)
            for (int m : d.rt.R[k])
                if (!is_regular(n, d.rt.T[k], k, m)) r.fail("Claim 5 fails");
        for (int k = 1; k <= 2 * n && r.ok; ++k)
            for (int m = k + 1; m <= 2 * n && r.ok; ++m)
                for (int s = k; s < m; ++s) {
                    if (d.rt.pred(k, s) && d.rt.pred(s + 1, m) && !d.rt.pred(k, m))
                        r.fail("Claim 2 fails");
                    if (d.rt.pred(k, m) && !(d.rt.pred(k, s) || d.rt.pred(s + 1, m)))
                        r.fail("Claim 3 fails");
                }
    }
    if (r.ok)
        r.message = std::to_string(all.size()) + " subalgebras, distinct simple roots, "
                    "round trips hold";
    return r;
}

/// Root-of-unity checks: heights, vanishing powers and the derivative of a
/// power. Runs at the configured order (or t = 5 if the engine is generic).
inline SuiteResult verify_cyclotomic(const Engine& generic_eng) {
    SuiteResult r{"cyclotomic"};
    int n = generic_eng.rank();
    int t = generic_eng.bc().ring().is_cyclotomic() ? generic_eng.bc().ring().order() : 5;
    Engine eng(Bicharacter::standard(n, ScalarRing::cyclotomic(t)));
    const Bicharacter& bc = eng.bc();
    for (int k = 1; k <= n; ++k)
        for (int m = k; m < psi(n, k); ++m) {
            long h = *height(bc, k, m);
            long want = (m == n || t % 2 == 1) ? t : t / 2;
            if (h != want) r.fail("height mismatch at u[" + std::to_string(k) + "," +
                                  std::to_string(m) + "]");
            // power supports have ~(h(m-k+1))! / ... words; keep this desk-fast
            if (m - k + 1 > 3) continue;
            ShuffleElement u = u_bracket(eng, k, m);
            if (!power(bc, u, h).is_zero())
                r.fail("u[" + std::to_string(k) + "," + std::to_string(m) + "]^h != 0");
            if (power(bc, u, h - 1).is_zero())
                r.fail("u[" + std::to_string(k) + "," + std::to_string(m) + "]^{h-1} = 0");
        }
    // derivative-of-power identity for u = u[1,min(2,2n-1... )]
    if (r.ok && n >= 1) {
        int m0 = std::min(2, 2 * n - 1);
        if (m0 < 1) m0 = 1;
        ShuffleElement u = u_bracket(eng, 1, m0);
        long h = *height(bc, 1, m0);
        ShuffleElement ut = power(bc, u, h);
        for (int i = 1; i <= n; ++i) {
            ShuffleElement lhs = partial_derivative(bc, i, ut);
            ShuffleElement rhs = partial_derivative(bc, i, u);
            if (rhs.is_zero()) {
                if (!lhs.is_zero()) r.fail("derivative-of-power fails");
                continue;
            }
            for (long s = 0; s < h - 1; ++s) rhs = skew_bracket(bc, u, rhs);
            Constitution xi(n);
            xi.m[i - 1] = 1;
            rhs = scale(bc, rhs,
                        LaurentScalar::from_monomial(bc.p_eval(*u.degree(n), xi).pow(h - 1)));
            if (!(lhs == rhs)) r.fail("derivative-of-power fails at i=" + std::to_string(i));
        }
    }
    if (r.ok)
        r.message = "heights, vanishing powers (short generators) and derivative-of-power "
                    "hold at t=" + std::to_string(t);
    return r;
}

inline const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names{"identities", "coproduct", "duality",
                                                "serre",      "classification", "cyclotomic"};
    return names;
}

/// Runs the requested suites in parallel and returns results in the fixed
/// canonical order.
inline std::vector<SuiteResult> run_verify(const Engine& eng, const std::vector<std::string>& which) {
    std::vector<std::string> names = which.empty() ? verify_suite_names() : which;
    std::vector<SuiteResult> results(names.size());
    parallel_for(names.size(), [&](std::size_t i) {
        const std::string& s = names[i];
        if (s == "identities")
            results[i] = verify_identities(eng);
        else if (s == "coproduct")
            results[i] = verify_coproduct(eng);
        else if (s == "duality")
            results[i] = verify_duality(eng);
        else if (s == "serre")
            results[i] = verify_serre(eng);
        else if (s == "classification")
            results[i] = verify_classification(eng);
        else if (s == "cyclotomic")
            results[i] = verify_cyclotomic(eng);
        else {
            results[i].name = s;
            results[i].fail("unknown suite");
        }
    });
    return results;
}

}  // namespace coideal
