// Exact gcd over Z[x] (modular images + CRT + a final exact-division
// verification) and Yun's squarefree decomposition on top of it. A cheap
// one-prime certificate answers the common case "is f squarefree?"
// without any big-integer work.

#pragma once

#include <mutex>
#include <utility>
#include <vector>

#include "househunter/poly.hpp"
#include "househunter/zp_poly.hpp"

namespace hh {

namespace detail {

inline const std::vector<uint64_t>& modular_primes(size_t at_least) {
    static std::vector<uint64_t> primes;
    static std::mutex mu;
    std::lock_guard<std::mutex> lk(mu);
    if (primes.size() < at_least) {
        mpz_class p = primes.empty() ? mpz_class(1000000007) : mpz_class(primes.back());
        while (primes.size() < at_least) {
            mpz_class q;
            mpz_nextprime(q.get_mpz_t(), p.get_mpz_t());
            p = q;
            primes.push_back(p.get_ui());
        }
    }
    return primes;
}

}  // namespace detail

inline IntPoly primitive_part(const IntPoly& f) {
    if (f.is_zero()) return f;
    mpz_class c = f.content();
    if (f.leading() < 0) c = -c;
    if (c == 1) return f;
    std::vector<mpz_class> v(f.coeffs());
    for (auto& a : v) a /= c;
    return IntPoly(std::move(v));
}

// True means certainly squarefree over Q. False is inconclusive (but with
// several witnesses, overwhelmingly means a repeated factor).
inline bool squarefree_certificate(const IntPoly& f, int witnesses = 3) {
    if (f.degree() < 2) return true;
    const auto& primes = detail::modular_primes(64);
    int tried = 0;
    for (uint64_t p : primes) {
        zp::Ctx c{p};
        zp::Poly fp = zp::reduce(f, c);
        if (zp::degree(fp) != f.degree()) continue;  // p divides lc
        if (zp::squarefree(fp, c)) return true;
        if (++tried >= witnesses) return false;
    }
    return false;
}

// Exact gcd of nonzero f, g: primitive with positive leading coefficient.
inline IntPoly gcd_exact(const IntPoly& f_in, const IntPoly& g_in) {
    if (f_in.is_zero() || g_in.is_zero()) throw std::domain_error("gcd_exact: zero polynomial");
    IntPoly f = primitive_part(f_in), g = primitive_part(g_in);
    if (f.degree() < g.degree()) std::swap(f, g);
    if (g.degree() == 0) return IntPoly::one();

    mpz_class gamma;
    mpz_gcd(gamma.get_mpz_t(), f.leading().get_mpz_t(), g.leading().get_mpz_t());

    int best_deg = -1;
    mpz_class modulus = 1;
    std::vector<mpz_class> acc;  // coefficients of gamma * (monic gcd), CRT-combined

    size_t prime_index = 0;
    while (true) {
        const auto& primes = detail::modular_primes(prime_index + 1);
        const uint64_t p = primes[prime_index++];
        if (prime_index > 512) throw std::runtime_error("gcd_exact: CRT did not stabilize");
        zp::Ctx c{p};
        if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p) ||
            mpz_divisible_ui_p(g.leading().get_mpz_t(), p) ||
            mpz_divisible_ui_p(gamma.get_mpz_t(), p))
            continue;
        zp::Poly hp = zp::gcd(zp::reduce(f, c), zp::reduce(g, c), c);
        const int d = zp::degree(hp);
        if (d == 0) return IntPoly::one();
        if (best_deg != -1 && d > best_deg) continue;  // unlucky prime
        if (best_deg == -1 || d < best_deg) {
            best_deg = d;
            modulus = 1;
            acc.assign(static_cast<size_t>(d) + 1, 0);
        }
        // scale the monic image to leading coefficient gamma, then CRT-combine
        const uint64_t scale = mpz_fdiv_ui(gamma.get_mpz_t(), p);
        mpz_class pz(static_cast<unsigned long>(p));
        mpz_class inv_m_mod_p;
        if (modulus == 1) {
            for (size_t i = 0; i < acc.size(); ++i) acc[i] = c.mul(hp[i], scale);
        } else {
            mpz_class m_mod_p = modulus % pz;
            mpz_invert(inv_m_mod_p.get_mpz_t(), m_mod_p.get_mpz_t(), pz.get_mpz_t());
            for (size_t i = 0; i < acc.size(); ++i) {
                mpz_class target = c.mul(hp[i], scale);
                mpz_class delta = ((target - acc[i]) % pz) * inv_m_mod_p % pz;
                if (delta < 0) delta += pz;
                acc[i] += modulus * delta;
            }
        }
        modulus *= pz;

        // symmetric lift and verify
        std::vector<mpz_class> cand(acc.size());
        mpz_class half = modulus / 2;
        for (size_t i = 0; i < acc.size(); ++i) cand[i] = acc[i] > half ? acc[i] - modulus : acc[i];
        IntPoly candidate = primitive_part(IntPoly(std::move(cand)));
        if (candidate.degree() != best_deg) continue;
        if (f.divided_exactly_by(candidate) && g.divided_exactly_by(candidate)) return candidate;
    }
}

// Yun's algorithm: pairwise-coprime squarefree parts with multiplicities;
// roots of part i are exactly the roots of f of multiplicity i. Contents
// and signs are normalized away (root sets are what matters here).
inline std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f_in) {
    if (f_in.degree() < 1) throw std::domain_error("squarefree_decomposition: constant input");
    IntPoly f = primitive_part(f_in);
    if (squarefree_certificate(f)) return {{f, 1}};
    IntPoly g = gcd_exact(f, f.derivative());
    if (g.degree() == 0) return {{f, 1}};
    IntPoly c = *f.divided_exactly_by(g);
    IntPoly d = *f.derivative().divided_exactly_by(g) - c.derivative();
    std::vector<std::pair<IntPoly, int>> parts;
    for (int i = 1; c.degree() > 0; ++i) {
        IntPoly a = d.is_zero() ? c : gcd_exact(c, d);
        if (a.degree() > 0) parts.emplace_back(a, i);
        IntPoly cn = *c.divided_exactly_by(a);
        d = *d.divided_exactly_by(a) - cn.derivative();
        c = std::move(cn);
    }
    return parts;
}

inline IntPoly squarefree_part(const IntPoly& f) {
    if (f.degree() < 1) return primitive_part(f);
    if (squarefree_certificate(f)) return primitive_part(f);
    IntPoly g = gcd_exact(f, f.derivative());
    if (g.degree() == 0) return primitive_part(f);
    return primitive_part(*f.divided_exactly_by(g));
}

}  // namespace hh
