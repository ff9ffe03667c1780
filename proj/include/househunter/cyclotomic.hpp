// Cyclotomic polynomials Phi_n with a thread-safe memo table.
//
// Phi_n is obtained by exact division of x^n - 1 by the product of Phi_d
// over the proper divisors d of n. Stripping cyclotomic factors is the hot
// inner loop of the search, so the table also memoizes Phi_n(2), which
// gives a cheap integer divisibility filter: Phi_n | p implies
// Phi_n(2) | p(2).

#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "househunter/poly.hpp"

namespace hh {

inline long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

class CyclotomicTable {
public:
    static CyclotomicTable& instance() {
        static CyclotomicTable t;
        return t;
    }

    const IntPoly& phi(long n) {
        if (n < 1) throw std::domain_error("cyclotomic: n must be >= 1");
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = polys_.find(n);
            if (it != polys_.end()) return it->second;
        }
        IntPoly value = compute(n);
        std::lock_guard<std::mutex> lk(mu_);
        return polys_.emplace(n, std::move(value)).first->second;  // idempotent
    }

    const mpz_class& phi_at_two(long n) {
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = at_two_.find(n);
            if (it != at_two_.end()) return it->second;
        }
        mpz_class v = phi(n).eval(mpz_class(2));
        std::lock_guard<std::mutex> lk(mu_);
        return at_two_.emplace(n, std::move(v)).first->second;
    }

    // All n with euler_phi(n) <= bound, ascending. phi(n) >= sqrt(n/2)
    // for every n, so scanning up to 2*bound^2 is exhaustive.
    static std::vector<long> indices_with_phi_at_most(long bound) {
        std::vector<long> out;
        if (bound < 1) return out;
        const long limit = std::max<long>(6, 2 * bound * bound);
        for (long n = 1; n <= limit; ++n)
            if (euler_phi(n) <= bound) out.push_back(n);
        return out;
    }

private:
    IntPoly compute(long n) {
        IntPoly num = IntPoly::power_minus_one(n);
        for (long d = 1; d < n; ++d) {
            if (n % d != 0) continue;
            auto q = num.divided_exactly_by(phi(d));
            if (!q) throw std::logic_error("cyclotomic: exact division failed");
            num = std::move(*q);
        }
        return num;
    }

    std::mutex mu_;
    std::map<long, IntPoly> polys_;
    std::map<long, mpz_class> at_two_;
};

inline const IntPoly& cyclotomic(long n) { return CyclotomicTable::instance().phi(n); }

}  // namespace hh
