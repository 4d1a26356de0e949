// Acceptance suite: one pass/fail line per criterion, all comparisons exact.
// Exits nonzero when any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>

#include "coideal/classifier.hpp"
#include "coideal/json_io.hpp"

using namespace coideal;

namespace {

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> run;
};

std::vector<IndexSet> subsets_between(int k, int m) {
    std::vector<IndexSet> out;
    int w = m - k;
    for (std::uint32_t mask = 0; mask < (1u << w); ++mask) {
        IndexSet S;
        for (int i = 0; i < w; ++i)
            if (mask & (1u << i)) S.insert(k + i);
        out.push_back(S);
    }
    return out;
}

bool monomial_proportional(const Bicharacter& bc, const ShuffleElement& lhs,
                           const ShuffleElement& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return lhs.is_zero() == rhs.is_zero();
    const auto& [w0, c1] = *lhs.terms().begin();
    RatFun ratio = RatFun::from_laurent(rhs.coeff(w0)) / RatFun::from_laurent(c1);
    auto rl = ratio.to_laurent();
    if (!rl || !rl->is_monomial()) return false;
    return rhs == scale(bc, lhs, *rl);
}

ParamMonomial inv_pair_product(const Bicharacter& bc, int k, int m) {
    ParamMonomial r = bc.one();
    for (int i = k; i <= m; ++i)
        for (int j = k; j < i; ++j) r = r * bc.p(i, j).inverse();
    return r;
}

// --- criteria -------------------------------------------------------------

bool crit1_serre(std::string& msg) {
    for (int n = 2; n <= 3; ++n) {
        Bicharacter bc = Bicharacter::standard(n);
        auto x = [&](int i) { return ShuffleElement::letter(bc, i); };
        auto expect_zero = [&](const ShuffleElement& e, const std::string& what) {
            if (!e.is_zero()) {
                msg = "n=" + std::to_string(n) + ": " + what + " is nonzero";
                return false;
            }
            return true;
        };
        for (int i = 1; i < n; ++i)
            if (!expect_zero(skew_bracket(bc, x(i), skew_bracket(bc, x(i), x(i + 1))),
                             "[x_i,[x_i,x_{i+1}]]"))
                return false;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 2; j <= n; ++j)
                if (!expect_zero(skew_bracket(bc, x(i), x(j)), "[x_i,x_j]")) return false;
        for (int i = 1; i + 1 < n; ++i)
            if (!expect_zero(skew_bracket(bc, skew_bracket(bc, x(i), x(i + 1)), x(i + 1)),
                             "[[x_i,x_{i+1}],x_{i+1}]"))
                return false;
        ShuffleElement w = skew_bracket(bc, x(n - 1), x(n));
        w = skew_bracket(bc, skew_bracket(bc, w, x(n)), x(n));
        if (!expect_zero(w, "[[[x_{n-1},x_n],x_n],x_n]")) return false;
        for (int k = 2; k < n; ++k) {
            ShuffleElement a = skew_bracket(bc, skew_bracket(bc, x(k + 1), x(k)), x(k - 1));
            if (!expect_zero(skew_bracket(bc, a, x(k)), "[[x_{k+1}x_kx_{k-1}],x_k]")) return false;
            ShuffleElement b = skew_bracket(bc, skew_bracket(bc, x(k - 1), x(k)), x(k + 1));
            if (!expect_zero(skew_bracket(bc, b, x(k)), "[[x_{k-1}x_kx_{k+1}],x_k]")) return false;
        }
    }
    msg = "relations (including the length-four Serre relation) vanish for n=2,3";
    return true;
}

bool crit2_shuffle_values(std::string& msg) {
    for (int n = 1; n <= 3; ++n) {
        Engine eng(Bicharacter::standard(n));
        const Bicharacter& bc = eng.bc();
        for (int k = 1; k <= 2 * n; ++k)
            for (int m = k; m <= 2 * n; ++m) {
                ShuffleElement want =
                    ShuffleElement::from_word(bc, u_word_desc(n, m, k), alpha_shuffle(bc, k, m));
                if (!(u_bracket(eng, k, m) == want)) {
                    msg = "u[" + std::to_string(k) + "," + std::to_string(m) + "] mismatch, n=" +
                          std::to_string(n);
                    return false;
                }
            }
    }
    msg = "u[k,m] = alpha_k^m (u(m,k)) for all k <= m <= 2n, n <= 3";
    return true;
}

bool crit3_coproduct(std::string& msg) {
    for (int n = 1; n <= 3; ++n) {
        Engine eng(Bicharacter::standard(n));
        const Bicharacter& bc = eng.bc();
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
                    LaurentScalar c = tau(bc, i) * one_m_q2 * alpha_shuffle(bc, i + 1, m) *
                                      alpha_shuffle(bc, k, i);
                    want[interval_constitution(n, k, i)].emplace(
                        std::make_pair(u_word_desc(n, m, i + 1), u_word_desc(n, i, k)), c);
                }
                if (!(got == want)) {
                    msg = "coproduct of u[" + std::to_string(k) + "," + std::to_string(m) +
                          "] deviates from the three-part formula";
                    return false;
                }
            }
    }
    msg = "explicit coproduct (with tau_n = q) holds termwise for all (k,m), n <= 3";
    return true;
}

bool crit4_coefficients(std::string& msg) {
    for (int n = 1; n <= 4; ++n) {
        for (int multi = 0; multi < 2; ++multi) {
            if (multi && n != 4) continue;  // one multiparameter bicharacter
            Bicharacter bc = multi ? Bicharacter::multiparameter(n) : Bicharacter::standard(n);
            for (int k = 1; k <= 2 * n; ++k)
                for (int m = k; m <= 2 * n; ++m) {
                    LaurentScalar brute =
                        LaurentScalar::from_monomial(bc.p_eval_intervals(k, m, k, m));
                    if (!(sigma(bc, k, m) == brute)) {
                        msg = "sigma mismatch";
                        return false;
                    }
                    for (int i = k; i < m; ++i) {
                        ParamMonomial pm = bc.p_eval_intervals(k, i, i + 1, m) *
                                           bc.p_eval_intervals(i + 1, m, k, i);
                        if (!(mu(bc, k, m, i) == LaurentScalar::from_monomial(pm))) {
                            msg = "mu mismatch at (" + std::to_string(k) + "," +
                                  std::to_string(m) + "," + std::to_string(i) + ")";
                            return false;
                        }
                    }
                }
        }
    }
    msg = "sigma and mu match brute-force bimultiplicative products, n <= 4 (+multiparameter)";
    return true;
}

bool crit5_closed_form(std::string& msg) {
    for (int n = 1; n <= 3; ++n) {
        Engine eng(Bicharacter::standard(n));
        const Bicharacter& bc = eng.bc();
        for (int k = 1; k <= 2 * n; ++k)
            for (int m = k; m <= 2 * n; ++m) {
                IndexSet full;
                for (int s = k; s < m; ++s) full.insert(s);
                LaurentScalar c = LaurentScalar::from_monomial(inv_pair_product(bc, k, m),
                                                               (m - k) % 2 == 0 ? 1 : -1);
                if (!(phi(eng, full, k, m) ==
                      scale(bc, u_bracket(eng, psi(n, m), psi(n, k)), c))) {
                    msg = "(k,m)=(" + std::to_string(k) + "," + std::to_string(m) + "), n=" +
                          std::to_string(n);
                    return false;
                }
            }
    }
    msg = "Phi^{[k,m-1]}(k,m) equals its closed form for all k <= m <= 2n, n <= 3";
    return true;
}

bool crit6_duality(std::string& msg) {
    long cases = 0;
    for (int n = 1; n <= 3; ++n) {
        Engine eng(Bicharacter::standard(n));
        const Bicharacter& bc = eng.bc();
        for (int k = 1; k <= 2 * n; ++k)
            for (int m = k; m <= 2 * n; ++m) {
                if (m == psi(n, k) && k != m) continue;
                for (const auto& S : subsets_between(k, m)) {
                    if (!is_black_regular(n, S, k, m)) continue;
                    DualSet d = dual_set(n, S, k, m);
                    ShuffleElement want =
                        scale(bc, phi(eng, d.T, d.k, d.m), duality_constant(bc, S, k, m));
                    if (!(phi(eng, S, k, m) == want)) {
                        msg = "duality fails at n=" + std::to_string(n) + " (" +
                              std::to_string(k) + "," + std::to_string(m) + ")";
                        return false;
                    }
                    ++cases;
                }
            }
    }
    msg = "exact duality with the printed constant on " + std::to_string(cases) +
          " black-regular cases";
    return true;
}

bool crit7_phi_identities(std::string& msg) {
    long cases = 0;
    for (int n = 1; n <= 3; ++n) {
        Engine eng(Bicharacter::standard(n));
        const Bicharacter& bc = eng.bc();
        LaurentScalar qm2m1 = bc.q_scalar(-2) - bc.one_scalar();
        for (int k = 1; k <= 2 * n; ++k)
            for (int m = k + 1; m <= 2 * n; ++m)
                for (const auto& S : subsets_between(k, m)) {
                    // Lemma 7.6
                    for (int t = k; t < m; ++t) {
                        if (S.count(t)) continue;
                        IndexSet St = S;
                        St.insert(t);
                        ParamMonomial pab = bc.p_eval_intervals(1 + t, m, k, t);
                        ShuffleElement rhs =
                            shuffle_product(bc, phi(eng, S, 1 + t, m), phi(eng, S, k, t));
                        rhs = scale(bc, rhs, qm2m1 * tau(bc, t).scaled(pab.inverse()));
                        if (!(sub(bc, phi(eng, St, k, m), phi(eng, S, k, m)) == rhs)) {
                            msg = "Lemma 7.6 fails";
                            return false;
                        }
                        ++cases;
                    }
                    // Lemma 7.4 for white regular sets
                    if (is_white_regular(n, S, k, m)) {
                        std::vector<int> cuts{k - 1};
                        for (int s : S) cuts.push_back(s);
                        cuts.push_back(m);
                        int r = static_cast<int>(S.size());
                        ShuffleElement br = u_bracket(eng, cuts[r] + 1, cuts[r + 1]);
                        for (int i = r - 1; i >= 0; --i)
                            br = skew_bracket(bc, br, u_bracket(eng, cuts[i] + 1, cuts[i + 1]));
                        ParamMonomial prod = bc.one();
                        for (int i = 0; i <= r; ++i)
                            for (int j = 0; j < i; ++j)
                                prod = prod * bc.p_eval_intervals(cuts[i] + 1, cuts[i + 1],
                                                                  cuts[j] + 1, cuts[j + 1])
                                                  .inverse();
                        if (!(phi(eng, S, k, m) ==
                              scale(bc, br,
                                    LaurentScalar::from_monomial(prod, r % 2 == 0 ? 1 : -1)))) {
                            msg = "Lemma 7.4 fails";
                            return false;
                        }
                        ++cases;
                        // Corollary 7.5
                        for (int s = k; s < m; ++s) {
                            if (!S.count(s) && s != n) continue;
                            ParamMonomial pab = bc.p_eval_intervals(1 + s, m, k, s);
                            ShuffleElement rhs =
                                skew_bracket(bc, phi(eng, S, 1 + s, m), phi(eng, S, k, s));
                            rhs = scale(bc, rhs, LaurentScalar::from_monomial(pab.inverse(), -1));
                            if (!(phi(eng, S, k, m) == rhs)) {
                                msg = "Corollary 7.5 fails";
                                return false;
                            }
                            ++cases;
                        }
                    }
                    // Corollary 7.7
                    for (int t = k; t < m; ++t) {
                        if (S.count(t)) continue;
                        IndexSet St = S;
                        St.insert(t);
                        if (!is_white_regular(n, St, k, m)) continue;
                        if (!monomial_proportional(
                                bc, phi(eng, S, k, m),
                                skew_bracket(bc, phi(eng, S, k, t), phi(eng, S, 1 + t, m)))) {
                            msg = "Corollary 7.7 fails";
                            return false;
                        }
                        ++cases;
                    }
                    // Corollary 7.10
                    if (is_black_regular(n, S, k, m))
                        for (int t = k; t < m; ++t) {
                            if (S.count(t) && t != n) continue;
                            if (!monomial_proportional(
                                    bc, phi(eng, S, k, m),
                                    skew_bracket(bc, phi(eng, S, k, t), phi(eng, S, 1 + t, m)))) {
                                msg = "Corollary 7.10 fails";
                                return false;
                            }
                            ++cases;
                        }
                    // Corollary 7.11
                    for (int s : S) {
                        IndexSet Sm = S;
                        Sm.erase(s);
                        if (!is_black_regular(n, Sm, k, m)) continue;
                        if (!monomial_proportional(
                                bc, phi(eng, S, k, m),
                                skew_bracket(bc, phi(eng, S, 1 + s, m), phi(eng, S, k, s)))) {
                            msg = "Corollary 7.11 fails";
                            return false;
                        }
                        ++cases;
                    }
                }
    }
    msg = "Phi identity suite holds on " + std::to_string(cases) + " exhaustive cases";
    return true;
}

bool crit8_relation56_derivatives(std::string& msg) {
    for (int n = 1; n <= 3; ++n) {
        Engine eng(Bicharacter::standard(n));
        const Bicharacter& bc = eng.bc();
        LaurentScalar one_m_q2 = bc.one_scalar() - bc.q_scalar(-2);
        for (int k = 1; k <= n; ++k)
            for (int m = k + 1; m < psi(n, k); ++m) {
                ShuffleElement u = u_bracket(eng, k, m);
                if (!skew_bracket(bc, u, skew_bracket(bc, u, u_bracket(eng, k + 1, m))).is_zero()) {
                    msg = "relation (56) fails";
                    return false;
                }
            }
        for (int k = 1; k <= 2 * n; ++k)
            for (int m = k; m <= 2 * n; ++m) {
                ShuffleElement u = u_bracket(eng, k, m);
                IndexSet full, fullm1;
                for (int s = k; s < m; ++s) full.insert(s);
                for (int s = k; s + 1 < m; ++s) fullm1.insert(s);
                ShuffleElement f = phi(eng, full, k, m);
                for (int i = 1; i <= 2 * n; ++i) {
                    ShuffleElement du = partial_derivative(bc, i, u);
                    ShuffleElement want_u =
                        fold(n, i) != fold(n, k)
                            ? ShuffleElement::zero()
                            : (k == m ? ShuffleElement::unit(bc)
                                      : scale(bc, u_bracket(eng, k + 1, m),
                                              tau(bc, k) * one_m_q2));
                    if (!(du == want_u)) {
                        msg = "derivative of u[k,m] fails";
                        return false;
                    }
                    ShuffleElement df = partial_derivative(bc, i, f);
                    ShuffleElement want_f;
                    if (fold(n, i) == fold(n, m)) {
                        if (k == m) {
                            want_f = ShuffleElement::unit(bc);
                        } else {
                            Constitution xm(n);
                            xm.m[fold(n, m) - 1] = 1;
                            ParamMonomial p = bc.p_eval(xm, interval_constitution(n, k, m - 1));
                            LaurentScalar beta = -(one_m_q2 * tau(bc, m - 1).scaled(p.inverse()));
                            want_f = scale(bc, phi(eng, fullm1, k, m - 1), beta);
                        }
                    }
                    if (!(df == want_f)) {
                        msg = "derivative of Phi^{[k,m-1]}(k,m) fails";
                        return false;
                    }
                }
            }
    }
    msg = "relation (56) and both derivative formulas hold for all (k,m), n <= 3";
    return true;
}

bool crit9_root_of_unity(std::string& msg) {
    const int t = 5, n = 2;
    Engine eng(Bicharacter::standard(n, ScalarRing::cyclotomic(t)));
    const Bicharacter& bc = eng.bc();
    for (int k = 1; k <= n; ++k)
        for (int m = k; m < psi(n, k); ++m) {
            auto h = height(bc, k, m);
            if (!h || *h != t) {
                msg = "height of u[k,m] is not t";
                return false;
            }
            ShuffleElement u = u_bracket(eng, k, m);
            if (!power(bc, u, t).is_zero() || power(bc, u, t - 1).is_zero()) {
                msg = "u[" + std::to_string(k) + "," + std::to_string(m) + "]^5 != 0 or ^4 = 0";
                return false;
            }
        }
    ShuffleElement u = u_bracket(eng, 1, 2);
    ShuffleElement ut = power(bc, u, t);
    for (int i = 1; i <= 2; ++i) {
        ShuffleElement lhs = partial_derivative(bc, i, ut);
        ShuffleElement rhs = partial_derivative(bc, i, u);
        if (!rhs.is_zero()) {
            for (int s = 0; s < t - 1; ++s) rhs = skew_bracket(bc, u, rhs);
            Constitution xi(n);
            xi.m[i - 1] = 1;
            rhs = scale(bc, rhs,
                        LaurentScalar::from_monomial(bc.p_eval(*u.degree(n), xi).pow(t - 1)));
        }
        if (!(lhs == rhs)) {
            msg = "derivative-of-power identity fails at i=" + std::to_string(i);
            return false;
        }
    }
    msg = "heights, vanishing fifth powers and the derivative-of-power identity hold at t=5";
    return true;
}

bool crit10_classification_goldens(std::string& msg) {
    for (int n = 1; n <= 3; ++n) {
        RootSequence theta(n, 0);
        theta[n - 1] = 1;
        RTSets rt = build_rt(n, theta);
        if (!(rt.T[n] == IndexSet{n, n + 1})) {
            msg = "T_n != {n, n+1} for theta_n = 1";
            return false;
        }
    }
    RTSets rt = build_rt(3, {5, 1, 0});
    if (!(rt.R[1] == IndexSet{1, 3, 5} && rt.T[1] == IndexSet{1, 2, 3, 5, 6} &&
          rt.R[2] == IndexSet{2} && rt.T[2] == IndexSet{2})) {
        msg = "Example R_1={1,3,5}, T_1={1,2,3,5,6}, R_2=T_2={2} fails";
        return false;
    }
    if (root_sequence_of(3, {PhiElement({2}, 2, 6)}) != RootSequence{5, 1, 0}) {
        msg = "root sequence (5,1,0) of the rank-3 example fails";
        return false;
    }
    std::vector<std::pair<std::pair<int, int>, RootSequence>> rank2{
        {{1, 3}, {3, 1}}, {{2, 4}, {3, 0}}, {{1, 2}, {2, 1}},
        {{3, 4}, {2, 0}}, {{1, 1}, {1, 0}}, {{2, 2}, {0, 1}}};
    for (const auto& [km, want] : rank2)
        if (theta_of_uskm(2, {}, km.first, km.second) != want) {
            msg = "rank-2 single-generator r-sequence fails at [" + std::to_string(km.first) +
                  ":" + std::to_string(km.second) + "]";
            return false;
        }
    if (root_sequence_of(2, theta_generators(2, {1, 1})) != RootSequence{1, 1} ||
        root_sequence_of(2, theta_generators(2, {0, 0})) != RootSequence{0, 0}) {
        msg = "(1,1) or (0,0) round trip fails";
        return false;
    }
    msg = "T_n, the rank-3 example, and the eight rank-2 r-sequences reproduce";
    return true;
}

bool crit11_enumeration(std::string& msg) {
    long want[] = {0, 2, 8, 48};
    for (int n = 1; n <= 3; ++n) {
        auto all = enumerate_subalgebras(n);
        if (static_cast<long>(all.size()) != want[n]) {
            msg = "count mismatch at n=" + std::to_string(n);
            return false;
        }
        std::set<std::set<RootInterval>> simple_sets;
        for (const auto& d : all) {
            simple_sets.insert(d.simple_roots);
            if (root_sequence_of(n, d.generators) != d.theta) {
                msg = "round trip fails at n=" + std::to_string(n);
                return false;
            }
        }
        if (simple_sets.size() != all.size()) {
            msg = "simple-root sets are not pairwise distinct at n=" + std::to_string(n);
            return false;
        }
    }
    msg = "counts 2, 8, 48 with distinct simple-root sets; all round trips hold";
    return true;
}

bool crit12_lattice(std::string& msg) {
    Engine eng(Bicharacter::standard(2));
    Lattice lat = lattice(eng, 2);
    auto idx = [&](const RootSequence& t) {
        for (std::size_t i = 0; i < lat.nodes.size(); ++i)
            if (lat.nodes[i] == t) return static_cast<int>(i);
        return -1;
    };
    std::set<std::pair<int, int>> got(lat.edges.begin(), lat.edges.end());
    std::set<std::pair<int, int>> want{
        {idx({0, 0}), idx({1, 0})}, {idx({0, 0}), idx({0, 1})}, {idx({1, 0}), idx({2, 0})},
        {idx({2, 0}), idx({3, 0})}, {idx({3, 0}), idx({1, 1})}, {idx({0, 1}), idx({3, 1})},
        {idx({3, 1}), idx({2, 1})}, {idx({2, 1}), idx({1, 1})}};
    if (got != want) {
        msg = "Hasse diagram differs from the printed rank-2 lattice";
        return false;
    }
    msg = "rank-2 Hasse diagram (8 nodes, two chains) matches via the span oracle";
    return true;
}

bool crit13_claims(std::string& msg) {
    for (int n = 1; n <= 3; ++n)
        for (const auto& theta : all_root_sequences(n)) {
            RTSets rt = build_rt(n, theta);
            auto edge = [&](int a, int b) {
                return rt.R[a].count(b) > 0 || rt.R[psi(n, b)].count(psi(n, a)) > 0;
            };
            for (int k = 1; k <= 2 * n; ++k)
                for (int m = k; m <= 2 * n; ++m) {
                    std::vector<char> ok(2 * n + 2, 0);
                    ok[k - 1] = 1;
                    for (int j = k; j <= m; ++j)
                        for (int i = k - 1; i < j && !ok[j]; ++i)
                            if (ok[i] && edge(i + 1, j)) ok[j] = 1;
                    if (rt.pred(k, m) != static_cast<bool>(ok[m])) {
                        msg = "Claim 1 fails";
                        return false;
                    }
                    for (int s = k; s < m; ++s) {
                        if (rt.pred(k, s) && rt.pred(s + 1, m) && !rt.pred(k, m)) {
                            msg = "Claim 2 fails";
                            return false;
                        }
                        if (rt.pred(k, m) && !(rt.pred(k, s) || rt.pred(s + 1, m))) {
                            msg = "Claim 3 fails";
                            return false;
                        }
                    }
                }
            for (int k = 1; k <= n; ++k) {
                if (theta[k - 1] != 0) {
                    int th = k + theta[k - 1] - 1;
                    for (int m = k; m < th; ++m)
                        if ((rt.T[k].count(m) > 0) != !rt.pred(m + 1, th)) {
                            msg = "Claim 4 fails";
                            return false;
                        }
                }
                for (int m : rt.R[k])
                    if (!is_regular(n, rt.T[k], k, m)) {
                        msg = "Claim 5 fails";
                        return false;
                    }
            }
        }
    msg = "Claims 1-5 hold exhaustively over all theta and index ranges, n <= 3";
    return true;
}

bool crit14_sigma_monoid(std::string& msg) {
    for (int n = 1; n <= 3; ++n) {
        // Example formula for U(k,m), k <= m <= psi(k)
        for (int k = 1; k <= n; ++k)
            for (int m = k; m <= psi(n, k); ++m) {
                RootSequence want(n, 0);
                for (int i = 1; i <= n; ++i) {
                    if (k <= i && i <= m && i < psi(n, m))
                        want[i - 1] = m - i + 1;
                    else if (i == psi(n, m) && k <= psi(n, m))
                        want[i - 1] = 2 * (m - n) - 1;
                }
                if (theta_of_uskm_brute(n, {}, k, m) != want) {
                    msg = "U(k,m) formula fails at [" + std::to_string(k) + ":" +
                          std::to_string(m) + "], n=" + std::to_string(n);
                    return false;
                }
            }
        // closed forms versus brute force for every regular (S,k,m)
        for (int k = 1; k <= 2 * n; ++k)
            for (int m = k; m <= 2 * n; ++m) {
                if (m == psi(n, k) && k != m) continue;
                for (const auto& S : subsets_between(k, m)) {
                    if (!is_regular(n, S, k, m)) continue;
                    std::set<RootInterval> closed, brute;
                    for (auto [t, s] : indecomposables_closed(n, S, k, m))
                        closed.insert(RootInterval(n, t + 1, s));
                    for (auto [t, s] : indecomposables_brute(n, S, k, m))
                        brute.insert(RootInterval(n, t + 1, s));
                    if (closed != brute ||
                        theta_of_uskm(n, S, k, m) != theta_of_uskm_brute(n, S, k, m)) {
                        msg = "closed form vs enumeration differs at n=" + std::to_string(n);
                        return false;
                    }
                }
            }
    }
    msg = "U(k,m) theta formula and the shifted-scheme closed forms match brute force";
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {"Serre/defining relations vanish (n=2,3)", crit1_serre},
        {"shuffle values of the PBW generators", crit2_shuffle_values},
        {"explicit coproduct of u[k,m]", crit3_coproduct},
        {"coefficient tables vs brute force (n<=4, multiparameter)", crit4_coefficients},
        {"closed form for the full-interval Phi", crit5_closed_form},
        {"duality with exact constants (exhaustive)", crit6_duality},
        {"Phi identity suite (7.4/7.5/7.6/7.7/7.10/7.11)", crit7_phi_identities},
        {"relation (56) and derivative formulas", crit8_relation56_derivatives},
        {"root-of-unity heights and powers (t=5, n=2)", crit9_root_of_unity},
        {"classification goldens", crit10_classification_goldens},
        {"enumeration 2/8/48 with round trips", crit11_enumeration},
        {"rank-2 containment lattice", crit12_lattice},
        {"claims suite over all theta (n<=3)", crit13_claims},
        {"degree-monoid root sequences vs brute force", crit14_sigma_monoid},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        std::string msg;
        bool ok = false;
        try {
            ok = criteria[i].run(msg);
        } catch (const std::exception& e) {
            msg = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << std::setw(2) << (i + 1) << ". "
                  << criteria[i].name << " (" << std::fixed << std::setprecision(2) << secs
                  << "s) -- " << msg << "\n";
        if (!ok) ++failures;
    }
    std::cout << (failures == 0 ? "all acceptance criteria hold\n"
                                : std::to_string(failures) + " criteria failed\n");
    return failures == 0 ? 0 : 1;
}
