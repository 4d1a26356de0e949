#pragma once

// Root sequences and the construction of the right coideal subalgebra
// U_theta: the predicate P with its R_k / T_k sets, generator synthesis,
// root and simple-root computation, enumeration of all (2n)!! subalgebras,
// the span membership oracle and the containment lattice.

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>

#include "coideal/phi.hpp"

namespace coideal {

using RootSequence = std::vector<int>;

inline void validate_theta(int n, const RootSequence& theta) {
    if (static_cast<int>(theta.size()) != n)
        throw std::invalid_argument("theta must have length n");
    for (int k = 1; k <= n; ++k)
        if (theta[k - 1] < 0 || theta[k - 1] > 2 * n - 2 * k + 1)
            throw std::invalid_argument("theta_k out of range [0, 2n-2k+1]");
}

/// The combinatorial data of a root sequence: R_k, the auxiliary T'_k, T_k,
/// and the materialized predicate P(i,j) = (j in T_i) or (psi(i) in
/// T_{psi(j)}).
struct RTSets {
    int n = 0;
    std::vector<IndexSet> R, Tp, T;  // 1-based, index 0 unused

    bool pred(int i, int j) const {
        if (i > j) throw std::out_of_range("pred: needs i <= j");
        return T[i].count(j) > 0 || T[psi(n, j)].count(psi(n, i)) > 0;
    }
};

/// Downward induction of the construction: for k = n..1 the set R_k collects
/// theta~_k = k + theta_k - 1 together with every m < theta~_k satisfying
///   b) not P(m+1, theta~_k),
///   c) P(r+1, m) <=> P(r+1, theta~_k) for all k <= r < m,
/// then T'_k = R_k plus all P-reachable endpoints below psi(k), and T_k
/// augments T'_k by psi(k) when psi(R_k + 1) meets T'_k.
inline RTSets build_rt(int n, const RootSequence& theta) {
    validate_theta(n, theta);
    RTSets rt;
    rt.n = n;
    rt.R.assign(2 * n + 1, {});
    rt.Tp.assign(2 * n + 1, {});
    rt.T.assign(2 * n + 1, {});
    for (int k = n; k >= 1; --k) {
        if (theta[k - 1] == 0) continue;
        int th = k + theta[k - 1] - 1;
        rt.R[k].insert(th);
        for (int m = k; m < th; ++m) {
            if (rt.pred(m + 1, th)) continue;
            bool ok = true;
            for (int r = k; r < m && ok; ++r)
                if (rt.pred(r + 1, m) != rt.pred(r + 1, th)) ok = false;
            if (ok) rt.R[k].insert(m);
        }
        rt.Tp[k] = rt.R[k];
        for (int s : rt.R[k])
            for (int a = s + 1; a < psi(n, k); ++a)
                if (rt.pred(s + 1, a)) rt.Tp[k].insert(a);
        rt.T[k] = rt.Tp[k];
        for (int s : rt.R[k])
            if (rt.Tp[k].count(psi(n, s + 1))) {
                rt.T[k].insert(psi(n, k));
                break;
            }
    }
    return rt;
}

/// Generators of U_theta: Phi^{T_k}(k,m) for m in R_k, each over a
/// (k,m)-regular set (Claim 5; a violation signals a construction bug).
inline std::vector<PhiElement> theta_generators(int n, const RootSequence& theta) {
    RTSets rt = build_rt(n, theta);
    std::vector<PhiElement> out;
    for (int k = 1; k <= n; ++k)
        for (int m : rt.R[k]) {
            if (!is_regular(n, rt.T[k], k, m))
                throw std::logic_error("theta_generators: T_k is not (k,m)-regular");
            out.push_back(PhiElement(rt.T[k], k, m));
        }
    return out;
}

/// All U_theta-roots {[k:m] : m in T'_k} (Claim 6).
inline std::set<RootInterval> theta_roots(int n, const RootSequence& theta) {
    RTSets rt = build_rt(n, theta);
    std::set<RootInterval> out;
    for (int k = 1; k <= n; ++k)
        for (int m : rt.Tp[k]) out.insert(RootInterval(n, k, m));
    return out;
}

/// The simple U_theta-roots {[k:m] : m in R_k} (Claim 7).
inline std::set<RootInterval> theta_simple_roots(int n, const RootSequence& theta) {
    RTSets rt = build_rt(n, theta);
    std::set<RootInterval> out;
    for (int k = 1; k <= n; ++k)
        for (int m : rt.R[k]) out.insert(RootInterval(n, k, m));
    return out;
}

// ---------------------------------------------------------------------------
// Root sequence of a generated subalgebra.

/// Simple roots of the subalgebra generated by the given Phi elements (each
/// over a regular set, as produced by this artifact): the union of the
/// per-generator Sigma-indecomposables generates the joint root monoid; its
/// indecomposable interval elements are the simple roots.
inline std::set<RootInterval> simple_roots_of(int n, const std::vector<PhiElement>& gens) {
    std::vector<Constitution> gcs;
    std::set<RootInterval> seeds;
    for (const auto& g : gens) {
        std::vector<std::pair<int, int>> ind;
        if (is_regular(n, g.S, g.k, g.m)) {
            ind = indecomposables_closed(n, g.S, g.k, g.m);
        } else if (g.S.empty()) {
            ind = indecomposables_brute(n, g.S, g.k, g.m);
        } else {
            throw std::invalid_argument("simple_roots_of: generator set is not regular");
        }
        for (auto [t, s] : ind) seeds.insert(RootInterval(n, t + 1, s));
    }
    for (const auto& r : seeds) gcs.push_back(r.constitution(n));
    std::set<RootInterval> out;
    for (const auto& r : seeds)
        if (!monoid_decomposable(gcs, r.constitution(n))) out.insert(r);
    return out;
}

/// theta_k = length of the longest simple root [k:m] with m < psi(k), or 0.
inline RootSequence root_sequence_of(int n, const std::vector<PhiElement>& gens) {
    RootSequence theta(n, 0);
    for (const auto& r : simple_roots_of(n, gens))
        if (r.m < psi(n, r.k)) theta[r.k - 1] = std::max(theta[r.k - 1], r.length());
    return theta;
}

// ---------------------------------------------------------------------------
// Enumeration.

struct SubalgebraDescriptor {
    RootSequence theta;
    RTSets rt;
    std::vector<PhiElement> generators;
    std::set<RootInterval> roots;
    std::set<RootInterval> simple_roots;
};

inline SubalgebraDescriptor classify(int n, const RootSequence& theta) {
    SubalgebraDescriptor d;
    d.theta = theta;
    d.rt = build_rt(n, theta);
    d.generators = theta_generators(n, theta);
    d.roots = theta_roots(n, theta);
    d.simple_roots = theta_simple_roots(n, theta);
    return d;
}

inline std::size_t thread_budget() {
    if (const char* env = std::getenv("COIDEAL_LAB_THREADS")) {
        long v = std::atol(env);
        if (v >= 1) return static_cast<std::size_t>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs fn(i) for i in [0, count) on up to thread_budget() threads.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    std::size_t nthreads = std::min(thread_budget(), count == 0 ? std::size_t{1} : count);
    if (nthreads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < nthreads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    for (auto& th : pool) th.join();
}

inline std::vector<RootSequence> all_root_sequences(int n) {
    std::vector<RootSequence> out;
    RootSequence theta(n, 0);
    for (;;) {
        out.push_back(theta);
        int k = n;
        while (k >= 1) {
            if (theta[k - 1] < 2 * n - 2 * k + 1) {
                ++theta[k - 1];
                for (int j = k + 1; j <= n; ++j) theta[j - 1] = 0;
                break;
            }
            --k;
        }
        if (k == 0) break;
    }
    return out;
}

/// One descriptor per root sequence, in lexicographic theta order; there are
/// (2n)!! of them.
inline std::vector<SubalgebraDescriptor> enumerate_subalgebras(int n) {
    std::vector<RootSequence> thetas = all_root_sequences(n);
    std::vector<SubalgebraDescriptor> out(thetas.size());
    parallel_for(thetas.size(), [&](std::size_t i) { out[i] = classify(n, thetas[i]); });
    return out;
}

// ---------------------------------------------------------------------------
// Span membership oracle and the containment lattice.

/// All products of the generators' values with total degree exactly d.
inline std::vector<ShuffleElement> span_products(const Engine& eng, const RootSequence& theta,
                                                 const Constitution& d, long degree_bound = 8) {
    if (d.total() > degree_bound) throw std::invalid_argument("span: degree bound exceeded");
    int n = eng.rank();
    std::vector<PhiElement> gens = theta_generators(n, theta);
    std::vector<ShuffleElement> values;
    std::vector<Constitution> degs;
    for (const auto& g : gens) {
        values.push_back(g.value(eng));
        degs.push_back(interval_constitution(n, g.k, g.m));
    }
    std::vector<ShuffleElement> out;
    std::function<void(const ShuffleElement&, const Constitution&)> rec =
        [&](const ShuffleElement& cur, const Constitution& deg) {
            if (deg == d) {
                out.push_back(cur);
                return;
            }
            for (std::size_t i = 0; i < values.size(); ++i) {
                Constitution next = deg + degs[i];
                bool fits = true;
                for (int j = 0; j < n; ++j)
                    if (next.m[j] > d.m[j]) fits = false;
                if (!fits) continue;
                rec(shuffle_product(eng.bc(), cur, values[i]), next);
            }
        };
    rec(ShuffleElement::unit(eng.bc()), Constitution(n));
    return out;
}

/// A linear basis of the degree-d component of U_theta, filtered from the
/// generator products by exact rank updates.
inline std::vector<ShuffleElement> span(const Engine& eng, const RootSequence& theta,
                                        const Constitution& d, long degree_bound = 8) {
    auto products = span_products(eng, theta, d, degree_bound);
    std::vector<ShuffleElement> out;
    if (eng.bc().ring().is_cyclotomic()) {
        auto basis = basis_c(eng, d);
        EchelonSolver<CycloField> ech(CycloField{&eng.bc().ring()}, basis->words.size());
        for (const auto& p : products)
            if (ech.add_basis(basis->to_vector(p))) out.push_back(p);
        return out;
    }
    auto basis = basis_q(eng, d);
    EchelonSolver<QqField> ech(QqField{}, basis->words.size());
    for (const auto& p : products)
        if (ech.add_basis(basis->to_vector(p))) out.push_back(p);
    return out;
}

/// Exact linear membership of a homogeneous element in U_theta.
inline bool contains(const Engine& eng, const RootSequence& theta, const ShuffleElement& a,
                     long degree_bound = 8) {
    int n = eng.rank();
    if (a.is_zero()) return true;
    auto d = a.degree(n);
    if (!d) throw std::invalid_argument("contains: element must be homogeneous");
    if (d->is_zero()) return true;  // scalars lie in k[G]
    auto products = span_products(eng, theta, *d, degree_bound);
    if (eng.bc().ring().is_cyclotomic()) {
        auto basis = basis_c(eng, *d);
        EchelonSolver<CycloField> span(CycloField{&eng.bc().ring()}, basis->words.size());
        for (const auto& p : products) span.add_basis(basis->to_vector(p));
        return span.contains(basis->to_vector(a));
    }
    auto basis = basis_q(eng, *d);
    EchelonSolver<QqField> span(QqField{}, basis->words.size());
    for (const auto& p : products) span.add_basis(basis->to_vector(p));
    return span.contains(basis->to_vector(a));
}

struct Lattice {
    std::vector<RootSequence> nodes;                  // lexicographic order
    std::vector<std::pair<int, int>> edges;           // covering pairs (sub, super)
};

/// Hasse diagram of the containment order, computed with the span oracle:
/// U_a <= U_b iff every generator value of U_a lies in U_b.
inline Lattice lattice(const Engine& eng, int n, long degree_bound = 8) {
    Lattice lat;
    lat.nodes = all_root_sequences(n);
    std::size_t cnt = lat.nodes.size();
    std::vector<std::vector<PhiElement>> gens(cnt);
    for (std::size_t i = 0; i < cnt; ++i) gens[i] = theta_generators(n, lat.nodes[i]);
    std::vector<std::vector<char>> leq(cnt, std::vector<char>(cnt, 0));
    parallel_for(cnt, [&](std::size_t b) {
        for (std::size_t a = 0; a < cnt; ++a) {
            if (a == b) {
                leq[a][b] = 1;
                continue;
            }
            bool ok = true;
            for (const auto& g : gens[a]) {
                if (!contains(eng, lat.nodes[b], g.value(eng), degree_bound)) {
                    ok = false;
                    break;
                }
            }
            leq[a][b] = ok ? 1 : 0;
        }
    });
    for (std::size_t a = 0; a < cnt; ++a)
        for (std::size_t b = 0; b < cnt; ++b) {
            if (a == b || !leq[a][b] || leq[b][a]) continue;
            bool cover = true;
            for (std::size_t c = 0; c < cnt && cover; ++c) {
                if (c == a || c == b) continue;
                if (leq[a][c] && leq[c][b] && !leq[c][a] && !leq[b][c]) cover = false;
            }
            if (cover) lat.edges.push_back({static_cast<int>(a), static_cast<int>(b)});
        }
    return lat;
}

/// Normalized generators g_{km}^{-1} Phi^{T_k}(k,m): each generator paired
/// with the inverse group constitution of u(k,m).
inline std::vector<std::pair<std::vector<long>, PhiElement>> normalized_generators(
    int n, const RootSequence& theta) {
    std::vector<std::pair<std::vector<long>, PhiElement>> out;
    for (const auto& g : theta_generators(n, theta)) {
        Constitution c = interval_constitution(n, g.k, g.m);
        std::vector<long> inv(n);
        for (int i = 0; i < n; ++i) inv[i] = -c.m[i];
        out.push_back({inv, g});
    }
    return out;
}

}  // namespace coideal
