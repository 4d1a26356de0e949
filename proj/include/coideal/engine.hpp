#pragma once

// Shared evaluation context: a bicharacter plus memoization caches for
// super-letter values, Phi polynomials and per-degree PBW bases. All caches
// are guarded by one mutex; cached values are returned by copy.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "coideal/bicharacter.hpp"
#include "coideal/linalg.hpp"
#include "coideal/shuffle.hpp"

namespace coideal {

struct SuperLetter;
template <class F>
struct BasisData;

class Engine {
public:
    explicit Engine(Bicharacter bc) : bc_(std::move(bc)) {}

    const Bicharacter& bc() const { return bc_; }
    int rank() const { return bc_.rank(); }

    // -- caches ------------------------------------------------------------

    bool ubracket_lookup(int k, int m, ShuffleElement& out) const {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = ubracket_.find({k, m});
        if (it == ubracket_.end()) return false;
        out = it->second;
        return true;
    }
    void ubracket_store(int k, int m, const ShuffleElement& v) const {
        std::lock_guard<std::mutex> lk(mu_);
        ubracket_.emplace(std::make_pair(k, m), v);
    }

    bool phi_lookup(int k, int m, std::uint64_t mask, ShuffleElement& out) const {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = phi_.find({k, m, mask});
        if (it == phi_.end()) return false;
        out = it->second;
        return true;
    }
    void phi_store(int k, int m, std::uint64_t mask, const ShuffleElement& v) const {
        std::lock_guard<std::mutex> lk(mu_);
        phi_.emplace(std::make_tuple(k, m, mask), v);
    }

    std::shared_ptr<const BasisData<QqField>> basis_q_lookup(const Constitution& d) const {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = basis_q_.find(d);
        return it == basis_q_.end() ? nullptr : it->second;
    }
    void basis_q_store(const Constitution& d, std::shared_ptr<const BasisData<QqField>> b) const {
        std::lock_guard<std::mutex> lk(mu_);
        basis_q_.emplace(d, std::move(b));
    }

    std::shared_ptr<const BasisData<CycloField>> basis_c_lookup(const Constitution& d) const {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = basis_c_.find(d);
        return it == basis_c_.end() ? nullptr : it->second;
    }
    void basis_c_store(const Constitution& d, std::shared_ptr<const BasisData<CycloField>> b) const {
        std::lock_guard<std::mutex> lk(mu_);
        basis_c_.emplace(d, std::move(b));
    }

private:
    Bicharacter bc_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<int, int>, ShuffleElement> ubracket_;
    mutable std::map<std::tuple<int, int, std::uint64_t>, ShuffleElement> phi_;
    mutable std::map<Constitution, std::shared_ptr<const BasisData<QqField>>> basis_q_;
    mutable std::map<Constitution, std::shared_ptr<const BasisData<CycloField>>> basis_c_;
};

}  // namespace coideal
